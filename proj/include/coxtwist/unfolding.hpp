#pragma once

// The unfolded graph on Gamma_0 x Irr(C(Gamma)), its folding fibres, the
// embedding psi : W(Gamma) -> W(unfolded) and the LCM translation of braid
// words.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <string>
#include <vector>

#include "coxgraph.hpp"
#include "fusion.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "words.hpp"

namespace coxtwist {

struct UnfoldedEdge {
  std::size_t a = 0;  // a < b, unfolded vertex indices
  std::size_t b = 0;
  int multiplicity = 1;  // 2 encodes an infinity edge
  friend bool operator==(const UnfoldedEdge&, const UnfoldedEdge&) = default;
};

/// Vertex (s, E) has index s * rank + E, matching the lattice coordinates of
/// Lambda(Gamma) under [E] alpha_s -> alpha_(s,E).
class UnfoldedGraph {
 public:
  UnfoldedGraph(CoxeterGraph base, FusionRing ring) : base_(std::move(base)), ring_(std::move(ring)) {
    const std::size_t R = ring_.rank();
    for (std::size_t s = 0; s < base_.size(); ++s)
      for (std::size_t e = 0; e < R; ++e) {
        names_.push_back(R == 1 ? base_.name(s) : "(" + base_.name(s) + "," + ring_.label(e) + ")");
        folding_.push_back(s);
      }
    for (const auto& edge : base_.edges()) {
      const auto pi = edge_object(ring_, edge.m);
      for (std::size_t e = 0; e < R; ++e)
        for (std::size_t f = 0; f < R; ++f) {
          int mult = 0;
          if (edge.infinite()) {
            mult = e == f ? 2 : 0;
          } else {
            // E appears as a summand of Pi(e) (x) F
            const auto prod = multiply(ring_, pi, ring_.simple(f));
            if (prod[e] > 1)
              throw std::logic_error("fusion multiplicity > 1 in an edge object product");
            mult = static_cast<int>(prod[e]);
          }
          if (mult == 0) continue;
          std::size_t u = index(edge.a, e), v = index(edge.b, f);
          if (u > v) std::swap(u, v);
          edges_.push_back({u, v, mult});
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const UnfoldedEdge& x, const UnfoldedEdge& y) {
      return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    multiplicity_.assign(size() * size(), 0);
    for (const auto& e : edges_)
      multiplicity_[e.a * size() + e.b] = multiplicity_[e.b * size() + e.a] = e.multiplicity;
  }

  const CoxeterGraph& base() const { return base_; }
  const FusionRing& ring() const { return ring_; }
  std::size_t size() const { return folding_.size(); }
  std::size_t index(std::size_t s, std::size_t simple) const { return s * ring_.rank() + simple; }
  std::size_t base_vertex(std::size_t v) const { return folding_.at(v); }
  std::size_t simple_of(std::size_t v) const { return v % ring_.rank(); }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<UnfoldedEdge>& edges() const { return edges_; }
  const std::vector<std::size_t>& folding() const { return folding_; }

  int multiplicity(std::size_t u, std::size_t v) const { return multiplicity_[u * size() + v]; }

  std::optional<std::size_t> index_of(std::string_view name) const {
    for (std::size_t v = 0; v < size(); ++v)
      if (names_[v] == name) return v;
    return std::nullopt;
  }

  /// The unfolded graph as a Coxeter graph: multiplicity 1 is m = 3,
  /// multiplicity 2 is m = infinity.
  CoxeterGraph as_coxeter_graph() const {
    std::vector<CoxeterEdge> edges;
    for (const auto& e : edges_) edges.push_back({e.a, e.b, e.multiplicity == 2 ? kInfinity : 3});
    return CoxeterGraph(names_, std::move(edges));
  }

 private:
  CoxeterGraph base_;
  FusionRing ring_;
  std::vector<std::string> names_;
  std::vector<std::size_t> folding_;
  std::vector<UnfoldedEdge> edges_;
  std::vector<int> multiplicity_;
};

inline UnfoldedGraph unfold(const CoxeterGraph& g) { return UnfoldedGraph(g, coxeter_fusion_ring(g)); }

/// f^{-1}(s) in canonical simple order.
inline std::vector<std::size_t> fiber(const UnfoldedGraph& u, std::size_t s) {
  if (s >= u.base().size()) throw GraphError("unknown vertex index");
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < u.ring().rank(); ++e) out.push_back(u.index(s, e));
  return out;
}

/// sigma_s^{+1} -> product of the fibre generators; inverse letters get the
/// fibre block reversed.
inline BraidWord lcm_translate(const UnfoldedGraph& u, const BraidWord& w) {
  BraidWord out;
  for (const auto& l : w.letters) {
    auto f = fiber(u, l.vertex);
    if (l.exponent < 0) std::reverse(f.begin(), f.end());
    for (auto v : f) out.letters.push_back({v, l.exponent});
  }
  return out;
}

inline CoxeterWord lcm_translate(const UnfoldedGraph& u, const CoxeterWord& w) {
  CoxeterWord out;
  for (auto s : w)
    for (auto v : fiber(u, s)) out.push_back(v);
  return out;
}

/// psi(s): the product of the unfolded simple reflections over fiber(s),
/// acting on Lambda(unfolded).
inline IntMatrix psi_matrix(const UnfoldedGraph& u, std::size_t s) {
  const auto g = u.as_coxeter_graph();
  const auto trivial = coxeter_fusion_ring(g);
  IntMatrix m = IntMatrix::identity(u.size());
  for (auto v : fiber(u, s)) m = simple_reflection_matrix(g, trivial, v) * m;
  return m;
}

}  // namespace coxtwist
