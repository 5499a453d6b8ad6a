#pragma once

// Bounded complexes of graded projective zigzag modules, their reduction to
// minimal complexes, and the (dual) spherical twists.
//
// Differential entries use the right-multiplication model of zigzag.hpp: an
// entry from P_u<k> in degree i to P_v<k'> in degree i+1 is a combination of
// degree k - k' paths from u to v, and d(i+1) after d(i) multiplies in path
// order.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "lattice.hpp"
#include "unfolding.hpp"
#include "words.hpp"
#include "zigzag.hpp"

namespace coxtwist {

class Complex {
 public:
  using Entries = std::map<std::pair<std::size_t, std::size_t>, PathCombo>;

  /// Appends a summand in cohomological degree i; returns its position there.
  std::size_t add(int degree, Summand s) {
    auto& t = terms_[degree];
    t.push_back(s);
    return t.size() - 1;
  }

  /// Adds p to the entry from terms(i)[a] to terms(i+1)[b].
  void add_entry(int degree, std::size_t a, std::size_t b, const PathCombo& p) {
    if (p.empty()) return;
    auto& d = diff_[degree];
    auto& e = d[{a, b}];
    e += p;
    if (e.empty()) d.erase({a, b});
    if (d.empty()) diff_.erase(degree);
  }

  const std::map<int, std::vector<Summand>>& terms() const { return terms_; }
  const std::map<int, Entries>& differentials() const { return diff_; }

  const std::vector<Summand>& terms(int degree) const {
    static const std::vector<Summand> none;
    auto it = terms_.find(degree);
    return it == terms_.end() ? none : it->second;
  }
  const Entries& differential(int degree) const {
    static const Entries none;
    auto it = diff_.find(degree);
    return it == diff_.end() ? none : it->second;
  }

  std::size_t summand_count() const {
    std::size_t n = 0;
    for (const auto& [i, t] : terms_) n += t.size();
    return n;
  }
  bool is_zero() const { return summand_count() == 0; }

  /// Sorted (degree, summand) multiset; an isomorphism invariant of minimal
  /// complexes.
  std::vector<std::pair<int, Summand>> summand_multiset() const {
    std::vector<std::pair<int, Summand>> out;
    for (const auto& [i, t] : terms_)
      for (const auto& s : t) out.emplace_back(i, s);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// No entry is a nonzero multiple of an idempotent.
  bool is_minimal() const {
    for (const auto& [i, d] : diff_)
      for (const auto& [ab, p] : d)
        if (terms(i)[ab.first] == terms(i + 1)[ab.second]) return false;
    return true;
  }

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  std::map<int, std::vector<Summand>> terms_;
  std::map<int, Entries> diff_;
};

/// Checks endpoints, homogeneity and d^2 = 0; throws std::logic_error.
inline void verify_complex(const ZigzagAlgebra& A, const Complex& c) {
  for (const auto& [i, d] : c.differentials())
    for (const auto& [ab, p] : d) {
      const auto& src = c.terms(i);
      const auto& tgt = c.terms(i + 1);
      if (ab.first >= src.size() || ab.second >= tgt.size())
        throw std::logic_error("differential entry outside the complex");
      const Summand a = src[ab.first], b = tgt[ab.second];
      for (const auto& [path, coeff] : p.terms()) {
        const auto& q = A.path(path);
        if (q.source != a.vertex || q.target != b.vertex || q.degree != a.shift - b.shift)
          throw std::logic_error("inhomogeneous differential entry");
      }
    }
  for (const auto& [i, d] : c.differentials()) {
    const auto& next = c.differential(i + 1);
    std::map<std::pair<std::size_t, std::size_t>, PathCombo> square;
    for (const auto& [ab, p] : d)
      for (auto it = next.lower_bound({ab.second, 0}); it != next.end() && it->first.first == ab.second;
           ++it)
        square[{ab.first, it->first.second}] += A.multiply(p, it->second);
    for (const auto& [ac, p] : square)
      if (!p.empty()) throw std::logic_error("d^2 != 0 in degree " + std::to_string(i));
  }
}

/// P_v<k> placed in cohomological degree i.
inline Complex projective_complex(const ZigzagAlgebra& A, std::size_t v, int k, int i) {
  if (v >= A.vertex_count()) throw std::invalid_argument("unknown vertex");
  Complex c;
  c.add(i, {v, k});
  return c;
}

namespace detail {

// Mutable graph form of a complex used during elimination.
struct WorkComplex {
  struct Node {
    int degree;
    Summand summand;
    bool alive = true;
  };
  std::vector<Node> nodes;
  std::vector<std::map<std::size_t, PathCombo>> out;
  std::vector<std::set<std::size_t>> in;

  explicit WorkComplex(const Complex& c) {
    std::map<int, std::size_t> offset;
    for (const auto& [i, t] : c.terms()) {
      offset[i] = nodes.size();
      for (const auto& s : t) nodes.push_back({i, s});
    }
    out.resize(nodes.size());
    in.resize(nodes.size());
    for (const auto& [i, d] : c.differentials())
      for (const auto& [ab, p] : d) {
        const std::size_t a = offset.at(i) + ab.first, b = offset.at(i + 1) + ab.second;
        out[a][b] = p;
        in[b].insert(a);
      }
  }

  Complex to_complex() const {
    Complex c;
    std::vector<std::size_t> pos(nodes.size());
    for (std::size_t n = 0; n < nodes.size(); ++n)
      if (nodes[n].alive) pos[n] = c.add(nodes[n].degree, nodes[n].summand);
    for (std::size_t n = 0; n < nodes.size(); ++n)
      if (nodes[n].alive)
        for (const auto& [m, p] : out[n]) c.add_entry(nodes[n].degree, pos[n], pos[m], p);
    return c;
  }

  void remove(std::size_t n) {
    nodes[n].alive = false;
    for (const auto& [m, p] : out[n]) in[m].erase(n);
    for (auto m : in[n]) out[m].erase(n);
    out[n].clear();
    in[n].clear();
  }
};

}  // namespace detail

/// Cancels every invertible (scalar times idempotent) entry.  Pivots are
/// taken lowest degree first, then by source and target position; a seed
/// switches to a random pivot order instead.
inline Complex gaussian_eliminate(const ZigzagAlgebra& A, const Complex& c,
                                  std::optional<unsigned> shuffle_seed = std::nullopt) {
  detail::WorkComplex w(c);
  using Key = std::tuple<int, std::size_t, std::size_t>;
  std::set<Key> candidates;
  auto consider = [&](std::size_t a, std::size_t b) {
    if (w.nodes[a].summand == w.nodes[b].summand) candidates.insert({w.nodes[a].degree, a, b});
  };
  for (std::size_t a = 0; a < w.nodes.size(); ++a)
    for (const auto& [b, p] : w.out[a]) consider(a, b);

  std::optional<std::mt19937> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);

  while (!candidates.empty()) {
    auto it = candidates.begin();
    if (rng) std::advance(it, std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(*rng));
    const auto [deg, a, b] = *it;
    candidates.erase(it);
    if (!w.nodes[a].alive || !w.nodes[b].alive) continue;
    auto pivot = w.out[a].find(b);
    if (pivot == w.out[a].end()) continue;
    const Rational inv = 1 / pivot->second.coefficient(A.idempotent(w.nodes[a].summand.vertex));

    std::vector<std::pair<std::size_t, PathCombo>> into_b, out_of_a;
    for (auto x : w.in[b])
      if (x != a) into_b.emplace_back(x, w.out[x].at(b));
    for (const auto& [y, p] : w.out[a])
      if (y != b) out_of_a.emplace_back(y, p);
    for (const auto& [x, gamma] : into_b)
      for (const auto& [y, delta] : out_of_a) {
        PathCombo update = A.multiply(gamma, delta);
        if (update.empty()) continue;
        update *= -inv;
        auto& entry = w.out[x][y];
        entry += update;
        if (entry.empty()) {
          w.out[x].erase(y);
          w.in[y].erase(x);
        } else {
          w.in[y].insert(x);
          consider(x, y);
        }
      }
    w.remove(a);
    w.remove(b);
  }
  return w.to_complex();
}

/// Cone of the counit P_v (x) vP (x)_A c -> c, before reduction.  Each
/// summand P_u<k> in degree i contributes P_v<k + deg p> in degree i - 1 for
/// every path p from v to u, mapping to it by p.
inline Complex twist_unreduced(const ZigzagAlgebra& A, std::size_t v, const Complex& c) {
  if (v >= A.vertex_count()) throw std::invalid_argument("unknown vertex");
  struct Created {
    std::size_t pos;
    std::size_t path;
  };
  Complex out;
  std::map<int, std::vector<std::size_t>> same;
  std::map<int, std::vector<std::vector<Created>>> created;
  for (const auto& [i, t] : c.terms())
    for (const auto& s : t) same[i].push_back(out.add(i, s));
  for (const auto& [i, t] : c.terms()) {
    auto& slot = created[i];
    for (std::size_t a = 0; a < t.size(); ++a) {
      slot.emplace_back();
      for (auto p : A.paths_between(v, t[a].vertex)) {
        const auto pos = out.add(i - 1, {v, t[a].shift + A.path(p).degree});
        slot.back().push_back({pos, p});
        out.add_entry(i - 1, pos, same[i][a], PathCombo(p, 1));
      }
    }
  }
  for (const auto& [i, d] : c.differentials())
    for (const auto& [ab, q] : d) {
      out.add_entry(i, same[i][ab.first], same[i + 1][ab.second], q);
      for (const auto& x : created[i][ab.first]) {
        const auto prod = A.multiply(PathCombo(x.path, 1), q);
        for (const auto& y : created[i + 1][ab.second]) {
          const Rational coeff = prod.coefficient(y.path);
          if (coeff != 0) out.add_entry(i - 1, x.pos, y.pos, PathCombo(A.idempotent(v), -coeff));
        }
      }
    }
  return out;
}

/// Cocone of the unit c -> P_v (x) vP (x)_A c <-2>, before reduction.  Each
/// summand P_u<k> in degree i contributes P_v<k + deg p - 2> in degree i + 1
/// for every path p from v to u, reached by the dual path of p.
inline Complex dual_twist_unreduced(const ZigzagAlgebra& A, std::size_t v, const Complex& c) {
  if (v >= A.vertex_count()) throw std::invalid_argument("unknown vertex");
  struct Created {
    std::size_t pos;
    std::size_t path;
  };
  Complex out;
  std::map<int, std::vector<std::size_t>> same;
  std::map<int, std::vector<std::vector<Created>>> created;
  for (const auto& [i, t] : c.terms())
    for (const auto& s : t) same[i].push_back(out.add(i, s));
  for (const auto& [i, t] : c.terms()) {
    auto& slot = created[i];
    for (std::size_t a = 0; a < t.size(); ++a) {
      slot.emplace_back();
      for (auto p : A.paths_between(v, t[a].vertex)) {
        const auto pos = out.add(i + 1, {v, t[a].shift + A.path(p).degree - 2});
        slot.back().push_back({pos, p});
        out.add_entry(i, same[i][a], pos, PathCombo(A.dual_path(p), 1));
      }
    }
  }
  for (const auto& [i, d] : c.differentials())
    for (const auto& [ab, q] : d) {
      out.add_entry(i, same[i][ab.first], same[i + 1][ab.second], q);
      for (const auto& x : created[i][ab.first]) {
        const auto prod = A.multiply(PathCombo(x.path, 1), q);
        for (const auto& y : created[i + 1][ab.second]) {
          const Rational coeff = prod.coefficient(y.path);
          if (coeff != 0) out.add_entry(i + 1, x.pos, y.pos, PathCombo(A.idempotent(v), -coeff));
        }
      }
    }
  return out;
}

inline Complex twist(const ZigzagAlgebra& A, std::size_t v, const Complex& c) {
  auto cone = twist_unreduced(A, v, c);
  verify_complex(A, cone);
  auto reduced = gaussian_eliminate(A, cone);
  verify_complex(A, reduced);
  return reduced;
}

inline Complex dual_twist(const ZigzagAlgebra& A, std::size_t v, const Complex& c) {
  auto cone = dual_twist_unreduced(A, v, c);
  verify_complex(A, cone);
  auto reduced = gaussian_eliminate(A, cone);
  verify_complex(A, reduced);
  return reduced;
}

/// A word over the unfolded vertices, letters applied left to right.
inline Complex apply_unfolded_word(const ZigzagAlgebra& A, const BraidWord& w, Complex c) {
  for (const auto& l : w.letters) c = l.exponent > 0 ? twist(A, l.vertex, c) : dual_twist(A, l.vertex, c);
  return c;
}

/// A word over the base graph: each letter acts by the twists of its fibre.
inline Complex apply_braid_word(const ZigzagAlgebra& A, const UnfoldedGraph& u, const BraidWord& w,
                                const Complex& c) {
  for (const auto& l : w.letters)
    if (l.vertex >= u.base().size()) throw GraphError("unknown generator");
  return apply_unfolded_word(A, lcm_translate(u, w), c);
}

/// Sum over summands P_v<k> in degree i of (-1)^i q^k alpha_v.
inline std::vector<LaurentPoly> complex_class(const ZigzagAlgebra& A, const Complex& c) {
  std::vector<LaurentPoly> out(A.vertex_count());
  for (const auto& [i, t] : c.terms())
    for (const auto& s : t) add_term(out.at(s.vertex), s.shift, i % 2 == 0 ? 1 : -1);
  return out;
}

/// w(P_x) for every unfolded vertex x.
inline std::vector<Complex> images_of_projectives(const ZigzagAlgebra& A, const UnfoldedGraph& u,
                                                  const BraidWord& w) {
  std::vector<Complex> out;
  for (std::size_t x = 0; x < A.vertex_count(); ++x)
    out.push_back(apply_braid_word(A, u, w, projective_complex(A, x, 0, 0)));
  return out;
}

/// If c is a single P_x<b> in degree -a, returns (a, b).
inline std::optional<std::pair<int, int>> single_summand_shift(const Complex& c, std::size_t x) {
  if (c.summand_count() != 1) return std::nullopt;
  const auto& [i, t] = *c.terms().begin();
  if (t.front().vertex != x) return std::nullopt;
  return std::pair{-i, t.front().shift};
}

/// Whether w sends every P_x to a complex isomorphic to P_x.  This decides
/// the word problem of the spherical twist group, the image of the braid
/// group in the autoequivalences.
inline bool is_identity_word(const ZigzagAlgebra& A, const UnfoldedGraph& u, const BraidWord& w) {
  for (std::size_t x = 0; x < A.vertex_count(); ++x) {
    const auto c = apply_braid_word(A, u, w, projective_complex(A, x, 0, 0));
    if (single_summand_shift(c, x) != std::pair{0, 0}) return false;
  }
  return true;
}

/// (a, b) such that w acts as [a]<b> on every projective, if any.
inline std::optional<std::pair<int, int>> recognize_shift(const ZigzagAlgebra& A, const UnfoldedGraph& u,
                                                          const BraidWord& w) {
  std::optional<std::pair<int, int>> common;
  for (std::size_t x = 0; x < A.vertex_count(); ++x) {
    const auto s = single_summand_shift(apply_braid_word(A, u, w, projective_complex(A, x, 0, 0)), x);
    if (!s || (common && *common != *s)) return std::nullopt;
    common = s;
  }
  return common;
}

/// Cohomological shift only: every P_x goes to some P_x<b_x>[a] with a
/// common a; internal shifts are ignored.
inline std::optional<int> recognize_cohomological_shift(const ZigzagAlgebra& A, const UnfoldedGraph& u,
                                                        const BraidWord& w) {
  std::optional<int> common;
  for (std::size_t x = 0; x < A.vertex_count(); ++x) {
    const auto s = single_summand_shift(apply_braid_word(A, u, w, projective_complex(A, x, 0, 0)), x);
    if (!s || (common && *common != s->first)) return std::nullopt;
    common = s->first;
  }
  return common;
}

inline bool words_equal(const ZigzagAlgebra& A, const UnfoldedGraph& u, const BraidWord& a,
                        const BraidWord& b) {
  return is_identity_word(A, u, a * b.inverse());
}

// Text form of a complex:
//   deg -1: P[(s,Pi0)]<1> P[t]<1>
//   deg 0: P[t]<0>
//   d -1: 0->0 = 1*(s|t)
// Degrees ascending; positions index the summands of the named degree.  The
// zero complex prints as "zero".

inline std::string format_combo(const ZigzagAlgebra& A, const PathCombo& p) {
  std::string out;
  for (const auto& [b, c] : p.terms()) {
    if (!out.empty()) out += " + ";
    out += c.get_str() + "*" + A.path_name(b);
  }
  return out;
}

inline std::string format_complex(const ZigzagAlgebra& A, const Complex& c) {
  if (c.is_zero()) return "zero\n";
  std::ostringstream os;
  for (const auto& [i, t] : c.terms()) {
    os << "deg " << i << ":";
    for (const auto& s : t) os << " P[" << A.vertex_name(s.vertex) << "]<" << s.shift << ">";
    os << '\n';
  }
  for (const auto& [i, d] : c.differentials())
    for (const auto& [ab, p] : d)
      os << "d " << i << ": " << ab.first << "->" << ab.second << " = " << format_combo(A, p) << '\n';
  return os.str();
}

class ComplexParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads the output of format_complex back.
inline Complex parse_complex(const ZigzagAlgebra& A, const std::string& text) {
  Complex c;
  std::istringstream in(text);
  std::string line;
  auto fail = [&](const std::string& why) { throw ComplexParseError(why + ": '" + line + "'"); };
  while (std::getline(in, line)) {
    if (line.empty() || line == "zero") continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail("missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string kind;
    int degree = 0;
    if (!(head >> kind >> degree)) fail("bad line header");
    std::string rest = line.substr(colon + 1);
    if (kind == "deg") {
      std::size_t pos = 0;
      while ((pos = rest.find("P[", pos)) != std::string::npos) {
        const auto close = rest.find("]<", pos);
        const auto end = rest.find('>', close);
        if (close == std::string::npos || end == std::string::npos) fail("bad summand");
        const auto name = rest.substr(pos + 2, close - pos - 2);
        const auto v = A.vertex_index(name);
        if (!v) fail("unknown vertex " + name);
        c.add(degree, {*v, std::stoi(rest.substr(close + 2, end - close - 2))});
        pos = end + 1;
      }
    } else if (kind == "d") {
      const auto arrow = rest.find("->"), eq = rest.find(" = ");
      if (arrow == std::string::npos || eq == std::string::npos) fail("bad differential entry");
      const std::size_t a = std::stoul(rest.substr(0, arrow));
      const std::size_t b = std::stoul(rest.substr(arrow + 2, eq - arrow - 2));
      PathCombo p;
      std::string terms = rest.substr(eq + 3);
      std::size_t start = 0;
      while (start <= terms.size()) {
        auto sep = terms.find(" + ", start);
        if (sep == std::string::npos) sep = terms.size();
        const auto term = terms.substr(start, sep - start);
        const auto star = term.find('*');
        if (star == std::string::npos) fail("bad term");
        const auto path = A.path_index(term.substr(star + 1));
        if (!path) fail("unknown path " + term.substr(star + 1));
        p.add(*path, Rational(term.substr(0, star)));
        start = sep + 3;
      }
      c.add_entry(degree, a, b, p);
    } else {
      fail("unknown line kind");
    }
  }
  verify_complex(A, c);
  return c;
}

}  // namespace coxtwist
