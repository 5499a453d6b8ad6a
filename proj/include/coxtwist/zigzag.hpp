#pragma once

// The zigzag algebra of the unfolded graph over Q.
//
// Paths concatenate left to right: e_u * p = p iff p starts at u, and
// p * e_v = p iff p ends at v.  A graded projective P_v<k> is A e_v with its
// grading shifted; a module map P_u<k> -> P_v<k'> is right multiplication by
// an element of e_u A e_v of degree k - k'.  Composing f then g multiplies
// f * g in the algebra.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "unfolding.hpp"

namespace coxtwist {

using Rational = mpq_class;

/// Graded projective summand P_v<shift>.
struct Summand {
  std::size_t vertex = 0;
  int shift = 0;
  friend auto operator<=>(const Summand&, const Summand&) = default;
};

/// Rational combination of path basis elements, sorted by basis index, no
/// zero coefficients.
class PathCombo {
 public:
  PathCombo() = default;
  PathCombo(std::size_t basis, Rational c) {
    if (c != 0) terms_.emplace_back(basis, std::move(c));
  }

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<std::pair<std::size_t, Rational>>& terms() const { return terms_; }

  Rational coefficient(std::size_t basis) const {
    for (const auto& [b, c] : terms_)
      if (b == basis) return c;
    return 0;
  }

  void add(std::size_t basis, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.begin();
    while (it != terms_.end() && it->first < basis) ++it;
    if (it != terms_.end() && it->first == basis) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    } else {
      terms_.insert(it, {basis, c});
    }
  }

  PathCombo& operator+=(const PathCombo& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
  }
  PathCombo& operator*=(const Rational& k) {
    if (k == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.second *= k;
    return *this;
  }
  friend PathCombo operator*(const Rational& k, PathCombo p) { return p *= k; }

  friend bool operator==(const PathCombo&, const PathCombo&) = default;

 private:
  std::vector<std::pair<std::size_t, Rational>> terms_;
};

class ZigzagAlgebra {
 public:
  enum class Kind { Idempotent, Loop, Arrow };

  struct Path {
    Kind kind;
    std::size_t source;
    std::size_t target;
    int index;  // arrow index within a multiple edge, 0 otherwise
    int degree;
  };

  explicit ZigzagAlgebra(const UnfoldedGraph& u) {
    std::vector<int> mult(u.size() * u.size(), 0);
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < u.size(); ++b) mult[a * u.size() + b] = u.multiplicity(a, b);
    build(u.names(), mult);
  }

  /// Quiver given directly: vertex names and a symmetric multiplicity table.
  ZigzagAlgebra(std::vector<std::string> names, const std::vector<int>& multiplicity) {
    build(std::move(names), multiplicity);
  }

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t dimension() const { return paths_.size(); }
  const Path& path(std::size_t b) const { return paths_.at(b); }
  const std::string& vertex_name(std::size_t v) const { return names_.at(v); }
  std::optional<std::size_t> vertex_index(std::string_view name) const {
    for (std::size_t v = 0; v < names_.size(); ++v)
      if (names_[v] == name) return v;
    return std::nullopt;
  }

  std::size_t idempotent(std::size_t v) const { return v; }
  std::size_t loop(std::size_t v) const { return vertex_count() + v; }
  int multiplicity(std::size_t u, std::size_t v) const { return mult_[u * vertex_count() + v]; }
  const std::vector<std::size_t>& arrows(std::size_t u, std::size_t v) const {
    return arrows_[u * vertex_count() + v];
  }

  /// Basis of e_u A e_v: paths starting at u and ending at v.
  const std::vector<std::size_t>& paths_between(std::size_t u, std::size_t v) const {
    return between_[u * vertex_count() + v];
  }

  /// Product of two basis paths: the resulting basis index, or nothing.
  /// Every nonzero product of basis paths is again a basis path (coefficient 1).
  std::optional<std::size_t> multiply_basis(std::size_t x, std::size_t y) const {
    int r = table_[x * dimension() + y];
    if (r < 0) return std::nullopt;
    return static_cast<std::size_t>(r);
  }

  PathCombo multiply(const PathCombo& x, const PathCombo& y) const {
    PathCombo out;
    for (const auto& [bx, cx] : x.terms())
      for (const auto& [by, cy] : y.terms())
        if (auto r = multiply_basis(bx, by)) out.add(*r, cx * cy);
    return out;
  }

  /// Dual basis element under (x, y) -> counit(x * y): e_v <-> X_v and
  /// (u|v)_a <-> (v|u)_a.
  std::size_t dual_path(std::size_t b) const {
    const auto& p = path(b);
    switch (p.kind) {
      case Kind::Idempotent:
        return loop(p.source);
      case Kind::Loop:
        return idempotent(p.source);
      case Kind::Arrow:
        break;
    }
    return arrows(p.target, p.source).at(static_cast<std::size_t>(p.index));
  }

  /// Counit: 1 on every X_v, 0 elsewhere.
  Rational counit(std::size_t b) const { return path(b).kind == Kind::Loop ? 1 : 0; }

  std::string path_name(std::size_t b) const {
    const auto& p = path(b);
    switch (p.kind) {
      case Kind::Idempotent:
        return "e_" + names_[p.source];
      case Kind::Loop:
        return "X_" + names_[p.source];
      case Kind::Arrow: {
        std::string s = "(" + names_[p.source] + "|" + names_[p.target] + ")";
        if (multiplicity(p.source, p.target) > 1) s += "_" + std::to_string(p.index + 1);
        return s;
      }
    }
    return {};
  }

  std::optional<std::size_t> path_index(std::string_view name) const {
    for (std::size_t b = 0; b < dimension(); ++b)
      if (path_name(b) == name) return b;
    return std::nullopt;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> mult_;
  std::vector<Path> paths_;
  std::vector<std::vector<std::size_t>> arrows_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<int> table_;

  void build(std::vector<std::string> names, const std::vector<int>& multiplicity) {
    names_ = std::move(names);
    const std::size_t n = names_.size();
    if (multiplicity.size() != n * n) throw std::invalid_argument("multiplicity table shape");
    mult_ = multiplicity;
    for (std::size_t v = 0; v < n; ++v) paths_.push_back({Kind::Idempotent, v, v, 0, 0});
    for (std::size_t v = 0; v < n; ++v) paths_.push_back({Kind::Loop, v, v, 0, 2});
    arrows_.assign(n * n, {});
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        if (mult_[u * n + v] != mult_[v * n + u]) throw std::invalid_argument("asymmetric quiver");
        if (u == v && mult_[u * n + v] != 0) throw std::invalid_argument("loops are not allowed");
        for (int a = 0; a < mult_[u * n + v]; ++a) {
          arrows_[u * n + v].push_back(paths_.size());
          paths_.push_back({Kind::Arrow, u, v, a, 1});
        }
      }
    between_.assign(n * n, {});
    for (std::size_t b = 0; b < paths_.size(); ++b)
      between_[paths_[b].source * n + paths_[b].target].push_back(b);

    const std::size_t d = paths_.size();
    table_.assign(d * d, -1);
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y) {
        const auto& p = paths_[x];
        const auto& q = paths_[y];
        if (p.target != q.source || p.degree + q.degree > 2) continue;
        if (p.kind == Kind::Idempotent)
          table_[x * d + y] = static_cast<int>(y);
        else if (q.kind == Kind::Idempotent)
          table_[x * d + y] = static_cast<int>(x);
        else if (p.kind == Kind::Arrow && q.kind == Kind::Arrow && q.target == p.source &&
                 p.index == q.index)
          table_[x * d + y] = static_cast<int>(loop(p.source));
      }
  }
};

inline ZigzagAlgebra build_zigzag(const UnfoldedGraph& u) { return ZigzagAlgebra(u); }

/// A grading-preserving module map P_u<k> -> P_v<k'>.
struct HomElement {
  Summand source;
  Summand target;
  PathCombo combo;
  friend bool operator==(const HomElement&, const HomElement&) = default;
};

/// Basis of Hom(P_u<k>, P_v<k'>): the degree-(k - k') paths from u to v.
inline std::vector<HomElement> hom_basis(const ZigzagAlgebra& a, Summand src, Summand tgt) {
  std::vector<HomElement> out;
  const int degree = src.shift - tgt.shift;
  for (auto b : a.paths_between(src.vertex, tgt.vertex))
    if (a.path(b).degree == degree) out.push_back({src, tgt, PathCombo(b, 1)});
  return out;
}

/// f followed by g.
inline HomElement compose(const ZigzagAlgebra& a, const HomElement& f, const HomElement& g) {
  if (f.target != g.source) throw std::invalid_argument("composition endpoints do not match");
  return {f.source, g.target, a.multiply(f.combo, g.combo)};
}

/// dim Hom(P_s (x) E1 <k1>, P_t (x) E2 <k2>) computed on the folded side from
/// the fusion rules of the edge objects.
inline int folded_hom_dimension(const CoxeterGraph& g, const FusionRing& r, std::size_t s,
                                std::size_t e1, int k1, std::size_t t, std::size_t e2, int k2) {
  const int d = k1 - k2;
  if (s == t) return (e1 == e2 && (d == 0 || d == 2)) ? 1 : 0;
  const auto edge = g.edge(s, t);
  if (!edge || d != 1) return 0;
  if (edge->infinite()) return e1 == e2 ? 2 : 0;
  const auto prod = multiply(r, edge_object(r, edge->m), r.simple(e2));
  return prod[e1] > 0 ? 1 : 0;
}

/// One tensor term x (x) y of the Frobenius comultiplication.
struct TensorTerm {
  std::size_t left;
  std::size_t right;
};

/// gamma_v on each idempotent e_t: e_v -> e_v (x) X_v + X_v (x) e_v,
/// e_t -> sum_a (t|v)_a (x) (v|t)_a for neighbours t, zero otherwise.
inline std::vector<std::vector<TensorTerm>> frobenius_comult(const ZigzagAlgebra& a, std::size_t v) {
  if (v >= a.vertex_count()) throw std::invalid_argument("unknown vertex");
  std::vector<std::vector<TensorTerm>> out(a.vertex_count());
  out[v] = {{a.idempotent(v), a.loop(v)}, {a.loop(v), a.idempotent(v)}};
  for (std::size_t t = 0; t < a.vertex_count(); ++t) {
    if (t == v) continue;
    const auto& in = a.arrows(t, v);
    const auto& back = a.arrows(v, t);
    for (std::size_t i = 0; i < in.size(); ++i) out[t].push_back({in[i], back[i]});
  }
  return out;
}

}  // namespace coxtwist
