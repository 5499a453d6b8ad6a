#pragma once

// The fusion lattice Lambda(Gamma) = (+)_s K_0(C) alpha_s, the reflection
// representation of W on it, and the Burau representation over
// K_0(C)[q, q^-1].
//
// Lattice coordinates are indexed by (vertex s, simple E) in vertex-major
// order: index = s * rank(C) + E.

#include <cmath>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxgraph.hpp"
#include "fusion.hpp"
#include "matrix.hpp"
#include "words.hpp"

namespace coxtwist {

using LatticeVector = std::vector<long long>;

/// Integer Laurent polynomial, exponent -> coefficient, no zero entries.
using LaurentPoly = std::map<int, long long>;

inline void add_term(LaurentPoly& p, int exponent, long long c) {
  if (c == 0) return;
  auto& slot = p[exponent];
  slot += c;
  if (slot == 0) p.erase(exponent);
}

inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) add_term(out, ea + eb, ca * cb);
  return out;
}

inline LaurentPoly& operator+=(LaurentPoly& a, const LaurentPoly& b) {
  for (const auto& [e, c] : b) add_term(a, e, c);
  return a;
}

inline std::string format_laurent(const LaurentPoly& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p) {
    long long mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'q';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

inline std::size_t lattice_rank(const CoxeterGraph& g, const FusionRing& r) {
  return g.size() * r.rank();
}

inline LatticeVector simple_root(const CoxeterGraph& g, const FusionRing& r, std::size_t s,
                                 std::size_t simple = 0) {
  LatticeVector v(lattice_rank(g, r), 0);
  v.at(s * r.rank() + simple) = 1;
  return v;
}

/// B_C(alpha_s, alpha_t) in K_0(C): 2[1], -[Pi(e)] or 0.
inline FusionElement form_on_simple_roots(const CoxeterGraph& g, const FusionRing& r,
                                          std::size_t s, std::size_t t) {
  if (s == t) return 2 * r.unit();
  if (!g.adjacent(s, t)) return FusionElement(r.rank());
  return -edge_object(g, r, s, t);
}

/// The K_0(C)-bilinear form B_C on Lambda.
inline FusionElement bilinear_form_C(const CoxeterGraph& g, const FusionRing& r,
                                     const LatticeVector& a, const LatticeVector& b) {
  const std::size_t R = r.rank();
  if (a.size() != lattice_rank(g, r) || b.size() != lattice_rank(g, r))
    throw std::invalid_argument("lattice vector dimension mismatch");
  FusionElement out(R);
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t t = 0; t < g.size(); ++t) {
      const auto base = form_on_simple_roots(g, r, s, t);
      if (base.is_zero()) continue;
      FusionElement left(R), right(R);
      for (std::size_t e = 0; e < R; ++e) {
        left.coefficients[e] = a[s * R + e];
        right.coefficients[e] = b[t * R + e];
      }
      if (left.is_zero() || right.is_zero()) continue;
      out += multiply(r, multiply(r, left, right), base);
    }
  return out;
}

/// Integer matrix of v -> v - B_C(alpha_s, v) alpha_s on the Z-basis
/// [E] alpha_t.  Column (t, F) is the image of [F] alpha_t.
inline IntMatrix simple_reflection_matrix(const CoxeterGraph& g, const FusionRing& r,
                                          std::size_t s) {
  if (s >= g.size()) throw GraphError("unknown vertex index");
  const std::size_t R = r.rank();
  IntMatrix m = IntMatrix::identity(lattice_rank(g, r));
  for (std::size_t t = 0; t < g.size(); ++t) {
    const auto form = form_on_simple_roots(g, r, s, t);
    if (form.is_zero()) continue;
    for (std::size_t f = 0; f < R; ++f) {
      // subtract ([F] * B_C(alpha_s, alpha_t)) alpha_s
      const auto coeff = multiply(r, r.simple(f), form);
      for (std::size_t e = 0; e < R; ++e) m(s * R + e, t * R + f) -= coeff[e];
    }
  }
  return m;
}

/// Matrix of a W-word acting left to right: M_{w_k} ... M_{w_1}.
inline IntMatrix coxeter_word_matrix(const CoxeterGraph& g, const FusionRing& r,
                                     const CoxeterWord& w) {
  IntMatrix m = IntMatrix::identity(lattice_rank(g, r));
  for (auto s : w) m = simple_reflection_matrix(g, r, s) * m;
  return m;
}

/// Equality in W, decided by the faithful action on Lambda.
inline bool coxeter_word_equal(const CoxeterGraph& g, const FusionRing& r, const CoxeterWord& a,
                               const CoxeterWord& b) {
  return coxeter_word_matrix(g, r, a) == coxeter_word_matrix(g, r, b);
}

inline bool coxeter_word_equal(const CoxeterGraph& g, const CoxeterWord& a, const CoxeterWord& b) {
  return coxeter_word_equal(g, coxeter_fusion_ring(g), a, b);
}

struct RootEnumeration {
  std::vector<LatticeVector> roots;  // breadth-first discovery order
  std::vector<int> depth;            // number of reflections used to reach each root
  bool complete = false;             // the orbit closed up within the depth bound
  std::size_t mixed_sign_images = 0; // reflection images with coordinates of both signs
  std::size_t lattice_lifts = 0;     // orbit vectors in Lambda, before merging equal real images
};

/// Positive roots reachable from the simple roots [1] alpha_s by at most
/// `depth` simple reflections.
///
/// Roots are real roots: orbit vectors with the same FPdim image in R Lambda
/// are one root, represented by the first lift found.  They differ only when
/// C has invertible simples besides 1 (Pi_{n-2} for even n), e.g. I_2(4) has
/// 8 orbit vectors in Lambda but 4 roots.
inline RootEnumeration enumerate_positive_roots(const CoxeterGraph& g, const FusionRing& r,
                                                int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  std::vector<IntMatrix> refl;
  for (std::size_t s = 0; s < g.size(); ++s) refl.push_back(simple_reflection_matrix(g, r, s));

  RootEnumeration out;
  std::set<LatticeVector> seen;
  std::set<std::vector<long long>> real_seen;
  const std::size_t R = r.rank();
  auto real_key = [&](const LatticeVector& v) {
    std::vector<long long> key(g.size());
    for (std::size_t s = 0; s < g.size(); ++s) {
      double x = 0;
      for (std::size_t e = 0; e < R; ++e) x += static_cast<double>(v[s * R + e]) * r.fpdim(e);
      key[s] = std::llround(x * 1e6);
    }
    return key;
  };
  auto record_root = [&](const LatticeVector& v, int level) {
    ++out.lattice_lifts;
    if (!real_seen.insert(real_key(v)).second) return;
    out.roots.push_back(v);
    out.depth.push_back(level);
  };
  std::vector<LatticeVector> frontier;
  for (std::size_t s = 0; s < g.size(); ++s) {
    auto a = simple_root(g, r, s);
    seen.insert(a);
    record_root(a, 0);
    frontier.push_back(a);
  }
  auto expand = [&](const std::vector<LatticeVector>& from, bool record, int level) {
    std::vector<LatticeVector> next;
    for (const auto& v : from)
      for (const auto& m : refl) {
        auto w = m.apply(v);
        bool pos = false, neg = false;
        for (auto c : w) {
          pos = pos || c > 0;
          neg = neg || c < 0;
        }
        if (pos && neg) {
          if (record) ++out.mixed_sign_images;
          continue;
        }
        if (!pos || seen.contains(w)) continue;
        if (record) {
          seen.insert(w);
          record_root(w, level);
        }
        next.push_back(std::move(w));
        if (!record) return next;
      }
    return next;
  };
  for (int level = 1; level <= depth && !frontier.empty(); ++level)
    frontier = expand(frontier, true, level);
  out.complete = frontier.empty() || expand(frontier, false, depth + 1).empty();
  return out;
}

/// Entry of the Burau matrix: exponent of q -> coefficient in K_0(C).
using LaurentFusion = std::map<int, FusionElement>;

/// Square matrix over K_0(C)[q, q^-1].  Column t is the image of [P_t].
class LaurentFusionMatrix {
 public:
  LaurentFusionMatrix() = default;
  LaurentFusionMatrix(std::size_t size, std::size_t ring_rank)
      : size_(size), rank_(ring_rank), entries_(size * size) {}

  static LaurentFusionMatrix identity(std::size_t size, const FusionRing& r) {
    LaurentFusionMatrix m(size, r.rank());
    for (std::size_t i = 0; i < size; ++i) m.add(i, i, 0, r.unit());
    return m;
  }

  std::size_t size() const { return size_; }
  std::size_t ring_rank() const { return rank_; }
  const LaurentFusion& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size_ + j];
  }

  void add(std::size_t i, std::size_t j, int exponent, const FusionElement& c) {
    if (c.is_zero()) return;
    auto& entry = entries_[i * size_ + j];
    auto it = entry.find(exponent);
    if (it == entry.end()) {
      entry.emplace(exponent, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) entry.erase(it);
  }

  friend bool operator==(const LaurentFusionMatrix&, const LaurentFusionMatrix&) = default;

 private:
  std::size_t size_ = 0, rank_ = 0;
  std::vector<LaurentFusion> entries_;
};

inline LaurentFusionMatrix multiply(const FusionRing& r, const LaurentFusionMatrix& a,
                                    const LaurentFusionMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("matrix shape mismatch");
  const std::size_t n = a.size();
  LaurentFusionMatrix c(n, r.rank());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto& x = a(i, k);
      if (x.empty()) continue;
      for (std::size_t j = 0; j < n; ++j)
        for (const auto& [ex, cx] : x)
          for (const auto& [ey, cy] : b(k, j)) c.add(i, j, ex + ey, multiply(r, cx, cy));
    }
  return c;
}

/// sigma_s^{+1}: [P_s] -> -q^2 [P_s], [P_t] -> [P_t] - q [Pi(e)] [P_s].
/// sigma_s^{-1}: [P_s] -> -q^-2 [P_s], [P_t] -> [P_t] - q^-1 [Pi(e)] [P_s].
inline LaurentFusionMatrix burau_generator(const CoxeterGraph& g, const FusionRing& r,
                                           std::size_t s, bool inverse) {
  if (s >= g.size()) throw GraphError("unknown vertex index");
  const int sign = inverse ? -1 : 1;
  LaurentFusionMatrix m(g.size(), r.rank());
  for (std::size_t t = 0; t < g.size(); ++t) {
    if (t == s) {
      m.add(s, s, 2 * sign, -r.unit());
      continue;
    }
    m.add(t, t, 0, r.unit());
    if (g.adjacent(s, t)) m.add(s, t, sign, -edge_object(g, r, s, t));
  }
  return m;
}

/// Matrix of a braid word acting left to right.
inline LaurentFusionMatrix burau_word(const CoxeterGraph& g, const FusionRing& r,
                                      const BraidWord& w) {
  auto m = LaurentFusionMatrix::identity(g.size(), r);
  for (const auto& l : w.letters) {
    if (l.vertex >= g.size()) throw GraphError("unknown generator");
    m = multiply(r, burau_generator(g, r, l.vertex, l.exponent < 0), m);
  }
  return m;
}

/// Integer Laurent matrix on the Z[q^{+-1}]-basis [E][P_s] (vertex-major).
inline std::vector<std::vector<LaurentPoly>> expand_laurent(const FusionRing& r,
                                                            const LaurentFusionMatrix& m) {
  const std::size_t R = r.rank(), n = m.size() * R;
  std::vector<std::vector<LaurentPoly>> out(n, std::vector<LaurentPoly>(n));
  for (std::size_t s = 0; s < m.size(); ++s)
    for (std::size_t t = 0; t < m.size(); ++t)
      for (const auto& [exp, coeff] : m(s, t))
        for (std::size_t f = 0; f < R; ++f) {
          const auto image = multiply(r, coeff, r.simple(f));
          for (std::size_t e = 0; e < R; ++e) add_term(out[s * R + e][t * R + f], exp, image[e]);
        }
  return out;
}

/// Substitute q = value (+1 or -1) and expand into the Z-basis of Lambda.
inline IntMatrix specialize_q(const FusionRing& r, const LaurentFusionMatrix& m, int value = -1) {
  if (value != 1 && value != -1) throw std::invalid_argument("q may only be specialised to +-1");
  const auto expanded = expand_laurent(r, m);
  IntMatrix out(expanded.size(), expanded.size());
  for (std::size_t i = 0; i < expanded.size(); ++i)
    for (std::size_t j = 0; j < expanded.size(); ++j)
      for (const auto& [e, c] : expanded[i][j]) out(i, j) += (value == -1 && e % 2 != 0) ? -c : c;
  return out;
}

/// Laurent matrix acting on a Laurent vector (both in the expanded basis).
inline std::vector<LaurentPoly> apply_laurent(const std::vector<std::vector<LaurentPoly>>& m,
                                              const std::vector<LaurentPoly>& v) {
  std::vector<LaurentPoly> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!m[i][j].empty() && !v[j].empty()) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace coxtwist
