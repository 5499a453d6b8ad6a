#pragma once

// Temperley-Lieb-Jones fusion rings, Deligne products, the ring attached to
// a Coxeter graph and the edge objects labelling its fusion quiver.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxgraph.hpp"

namespace coxtwist {

class FusionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One TLJ_n (or TLJ_n^even) tensor factor of a ring.
struct FusionFactor {
  int n = 3;
  bool even_only = false;
  std::vector<int> simples;  // TLJ indices a of the Pi_a kept, increasing

  std::size_t rank() const { return simples.size(); }
};

/// Element of K_0: integer coefficients over the simple basis.
struct FusionElement {
  std::vector<long long> coefficients;

  FusionElement() = default;
  explicit FusionElement(std::size_t rank) : coefficients(rank, 0) {}
  static FusionElement basis(std::size_t rank, std::size_t i, long long c = 1) {
    FusionElement e(rank);
    e.coefficients.at(i) = c;
    return e;
  }

  std::size_t size() const { return coefficients.size(); }
  bool is_zero() const {
    for (auto c : coefficients)
      if (c != 0) return false;
    return true;
  }
  long long operator[](std::size_t i) const { return coefficients[i]; }

  FusionElement& operator+=(const FusionElement& o) {
    check(o);
    for (std::size_t i = 0; i < size(); ++i) coefficients[i] += o.coefficients[i];
    return *this;
  }
  FusionElement& operator-=(const FusionElement& o) {
    check(o);
    for (std::size_t i = 0; i < size(); ++i) coefficients[i] -= o.coefficients[i];
    return *this;
  }
  FusionElement& operator*=(long long k) {
    for (auto& c : coefficients) c *= k;
    return *this;
  }
  friend FusionElement operator+(FusionElement a, const FusionElement& b) { return a += b; }
  friend FusionElement operator-(FusionElement a, const FusionElement& b) { return a -= b; }
  friend FusionElement operator*(long long k, FusionElement a) { return a *= k; }
  friend FusionElement operator-(FusionElement a) { return a *= -1; }
  friend bool operator==(const FusionElement&, const FusionElement&) = default;

 private:
  void check(const FusionElement& o) const {
    if (o.size() != size()) throw FusionError("fusion element dimension mismatch");
  }
};

/// A commutative, self-dual based ring with structure constants
/// N[i][j][k] = multiplicity of simple k in simple i (x) simple j.
class FusionRing {
 public:
  FusionRing() = default;

  std::size_t rank() const { return labels_.size(); }
  std::size_t unit_index() const { return 0; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<double>& fpdims() const { return fpdims_; }
  double fpdim(std::size_t i) const { return fpdims_.at(i); }
  const std::vector<FusionFactor>& factors() const { return factors_; }
  /// Position of simple i inside each factor's `simples` list.
  const std::vector<std::size_t>& components(std::size_t i) const { return components_.at(i); }

  int N(std::size_t i, std::size_t j, std::size_t k) const {
    return structure_[(i * rank() + j) * rank() + k];
  }

  FusionElement unit() const { return FusionElement::basis(rank(), 0); }
  FusionElement simple(std::size_t i) const { return FusionElement::basis(rank(), i); }

  std::optional<std::size_t> index_of(const std::string& label) const {
    for (std::size_t i = 0; i < rank(); ++i)
      if (labels_[i] == label) return i;
    return std::nullopt;
  }

  friend FusionRing tlj_ring(int n);
  friend FusionRing tlj_even_ring(int n);
  friend FusionRing deligne_product(const std::vector<FusionRing>& rings);

 private:
  std::vector<std::string> labels_;
  std::vector<int> structure_;
  std::vector<double> fpdims_;
  std::vector<FusionFactor> factors_;
  std::vector<std::vector<std::size_t>> components_;

  static FusionRing single_factor(int n, bool even_only);
};

/// Delta_k(d): Chebyshev polynomials of the second kind,
/// Delta_0 = 1, Delta_1 = d, Delta_{k+1} = d Delta_k - Delta_{k-1}.
inline double chebyshev_delta(int k, double d) {
  double prev = 1.0, cur = d;
  if (k == 0) return prev;
  for (int i = 1; i < k; ++i) {
    double next = d * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Multiplicity of Pi_c in Pi_a (x) Pi_b inside TLJ_n (0 or 1).
inline int tlj_fusion_coefficient(int n, int a, int b, int c) {
  const int lo = std::abs(a - b);
  const int hi = a + b <= n - 2 ? a + b : 2 * n - (a + b) - 4;
  return c >= lo && c <= hi && (c - lo) % 2 == 0 ? 1 : 0;
}

inline FusionRing FusionRing::single_factor(int n, bool even_only) {
  FusionRing r;
  FusionFactor f;
  f.n = n;
  f.even_only = even_only;
  for (int a = 0; a <= n - 2; ++a)
    if (!even_only || a % 2 == 0) f.simples.push_back(a);
  const std::size_t k = f.rank();
  const double d = 2.0 * std::cos(std::numbers::pi / n);
  r.structure_.assign(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    r.labels_.push_back("Pi" + std::to_string(f.simples[i]));
    r.fpdims_.push_back(chebyshev_delta(f.simples[i], d));
    r.components_.push_back({i});
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l)
        r.structure_[(i * k + j) * k + l] =
            tlj_fusion_coefficient(n, f.simples[i], f.simples[j], f.simples[l]);
  }
  r.factors_.push_back(std::move(f));
  return r;
}

/// K_0(TLJ_n): basis Pi_0..Pi_{n-2}.
inline FusionRing tlj_ring(int n) {
  if (n < 3) throw FusionError("tlj_ring needs n >= 3");
  return FusionRing::single_factor(n, false);
}

/// The even-labelled subring of K_0(TLJ_n), n odd.
inline FusionRing tlj_even_ring(int n) {
  if (n < 3 || n % 2 == 0) throw FusionError("tlj_even_ring needs an odd n >= 3");
  return FusionRing::single_factor(n, true);
}

/// Deligne product; basis in tensor-lex order with the first ring slowest.
inline FusionRing deligne_product(const std::vector<FusionRing>& rings) {
  if (rings.empty()) throw FusionError("deligne_product of an empty list");
  if (rings.size() == 1) return rings.front();

  FusionRing r;
  for (const auto& ring : rings)
    for (const auto& f : ring.factors_) r.factors_.push_back(f);

  std::size_t total = 1;
  for (const auto& ring : rings) total *= ring.rank();

  // Per-basis-element index into each input ring (first ring slowest).
  std::vector<std::vector<std::size_t>> digits(total, std::vector<std::size_t>(rings.size()));
  for (std::size_t x = 0; x < total; ++x) {
    std::size_t rest = x;
    for (std::size_t f = rings.size(); f-- > 0;) {
      digits[x][f] = rest % rings[f].rank();
      rest /= rings[f].rank();
    }
  }

  std::size_t nontrivial = 0;
  for (const auto& f : r.factors_)
    if (f.rank() > 1) ++nontrivial;

  r.structure_.assign(total * total * total, 0);
  for (std::size_t x = 0; x < total; ++x) {
    double dim = 1.0;
    std::vector<std::size_t> comps;
    for (std::size_t f = 0; f < rings.size(); ++f) {
      dim *= rings[f].fpdim(digits[x][f]);
      const auto& c = rings[f].components(digits[x][f]);
      comps.insert(comps.end(), c.begin(), c.end());
    }
    std::string label;
    for (std::size_t f = 0; f < r.factors_.size(); ++f) {
      const auto& factor = r.factors_[f];
      if (factor.rank() == 1) continue;
      const int a = factor.simples[comps[f]];
      if (nontrivial == 1) {
        label = "Pi" + std::to_string(a);
      } else {
        if (!label.empty()) label += "x";
        label += "Pi" + std::to_string(factor.n) + "_" + std::to_string(a);
      }
    }
    if (label.empty()) label = "Pi0";
    r.labels_.push_back(label);
    r.fpdims_.push_back(dim);
    r.components_.push_back(std::move(comps));

    for (std::size_t y = 0; y < total; ++y)
      for (std::size_t z = 0; z < total; ++z) {
        int prod = 1;
        for (std::size_t f = 0; f < rings.size() && prod != 0; ++f)
          prod *= rings[f].N(digits[x][f], digits[y][f], digits[z][f]);
        r.structure_[(x * total + y) * total + z] = prod;
      }
  }
  return r;
}

/// Bilinear extension of the structure constants.
inline FusionElement multiply(const FusionRing& r, const FusionElement& a, const FusionElement& b) {
  if (a.size() != r.rank() || b.size() != r.rank())
    throw FusionError("fusion element dimension mismatch");
  FusionElement out(r.rank());
  for (std::size_t i = 0; i < r.rank(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < r.rank(); ++j) {
      if (b[j] == 0) continue;
      for (std::size_t k = 0; k < r.rank(); ++k)
        if (int n = r.N(i, j, k)) out.coefficients[k] += a[i] * b[j] * n;
    }
  }
  return out;
}

inline double fpdim(const FusionRing& r, const FusionElement& a) {
  if (a.size() != r.rank()) throw FusionError("fusion element dimension mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < r.rank(); ++i) sum += static_cast<double>(a[i]) * r.fpdim(i);
  return sum;
}

/// The set M(Gamma) minus infinity, increasing.
inline std::vector<int> finite_labels(const CoxeterGraph& g) {
  std::set<int> labels;
  for (const auto& e : g.edges())
    if (!e.infinite()) labels.insert(e.m);
  return {labels.begin(), labels.end()};
}

/// C(Gamma): the Deligne product of C_n over finite labels n (TLJ_n for even
/// n, TLJ_n^even for odd n), or the rank-one ring when there are none.
inline FusionRing coxeter_fusion_ring(const CoxeterGraph& g) {
  const auto labels = finite_labels(g);
  if (labels.empty()) return tlj_even_ring(3);
  std::vector<FusionRing> rings;
  for (int n : labels) rings.push_back(n % 2 == 0 ? tlj_ring(n) : tlj_even_ring(n));
  return deligne_product(rings);
}

/// Index of the simple that is Pi_a in the TLJ_n factor and the unit in all
/// other factors.
inline std::size_t factor_simple_index(const FusionRing& r, int n, int a) {
  for (std::size_t f = 0; f < r.factors().size(); ++f) {
    const auto& factor = r.factors()[f];
    if (factor.n != n) continue;
    for (std::size_t i = 0; i < r.rank(); ++i) {
      const auto& c = r.components(i);
      bool match = factor.simples[c[f]] == a;
      for (std::size_t other = 0; other < c.size() && match; ++other)
        if (other != f && c[other] != 0) match = false;
      if (match) return i;
    }
  }
  throw FusionError("no simple Pi_" + std::to_string(a) + " of TLJ_" + std::to_string(n) +
                    " in this ring");
}

/// [Pi(e)]: the class of Pi^m_{m-3} for finite m, twice the unit for m = inf.
inline FusionElement edge_object(const FusionRing& r, int m) {
  if (m == kInfinity) return 2 * r.unit();
  if (m < 3) throw FusionError("edge label must be >= 3");
  return r.simple(factor_simple_index(r, m, m - 3));
}

inline FusionElement edge_object(const CoxeterGraph& g, const FusionRing& r, std::size_t s,
                                 std::size_t t) {
  auto e = g.edge(s, t);
  if (!e) throw FusionError("not an edge: " + g.name(s) + "-" + g.name(t));
  return edge_object(r, e->m);
}

}  // namespace coxtwist
