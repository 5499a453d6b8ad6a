#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance program.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "coxtwist/coxgraph.hpp"
#include "coxtwist/lattice.hpp"

namespace oracle {

using namespace coxtwist;

inline std::vector<long long> matrix_key(const IntMatrix& m) {
  std::vector<long long> k;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) k.push_back(m(i, j));
  return k;
}

/// Number of reflections of a finite W: distinct conjugates w s w^-1 of the
/// simple reflections, found by closing the matrix group under the generators.
inline std::size_t reflection_count(const CoxeterGraph& g, const FusionRing& r) {
  std::vector<IntMatrix> gens;
  for (std::size_t s = 0; s < g.size(); ++s) gens.push_back(simple_reflection_matrix(g, r, s));
  const auto id = IntMatrix::identity(lattice_rank(g, r));
  std::set<std::vector<long long>> seen{matrix_key(id)};
  std::vector<IntMatrix> group{id}, frontier{id};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& w : frontier)
      for (const auto& s : gens) {
        auto ws = w * s;
        if (seen.insert(matrix_key(ws)).second) {
          group.push_back(ws);
          next.push_back(ws);
        }
      }
    frontier = std::move(next);
    if (group.size() > 100000) throw std::runtime_error("group too large");
  }
  // The inverse of w = s_1 ... s_k is s_k ... s_1; rather than track words,
  // find it by search.
  std::set<std::vector<long long>> reflections;
  for (const auto& w : group) {
    const IntMatrix* inverse = nullptr;
    for (const auto& v : group)
      if (w * v == id) {
        inverse = &v;
        break;
      }
    for (const auto& s : gens) reflections.insert(matrix_key(w * s * *inverse));
  }
  return reflections.size();
}

inline CoxeterGraph disjoint_union(const CoxeterGraph& a, const CoxeterGraph& b) {
  std::vector<std::string> names;
  std::vector<CoxeterEdge> edges;
  for (std::size_t v = 0; v < a.size(); ++v) names.push_back("L" + a.name(v));
  for (std::size_t v = 0; v < b.size(); ++v) names.push_back("R" + b.name(v));
  for (const auto& e : a.edges()) edges.push_back(e);
  for (const auto& e : b.edges()) edges.push_back({e.a + a.size(), e.b + a.size(), e.m});
  return CoxeterGraph(names, edges);
}

/// Simply-laced tree: a centre with arms of the given lengths.
inline CoxeterGraph star(const std::vector<std::size_t>& arms) {
  std::vector<std::string> names{"c"};
  std::vector<CoxeterEdge> edges;
  for (auto len : arms) {
    std::size_t prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      names.push_back("v" + std::to_string(names.size()));
      edges.push_back({prev, names.size() - 1, 3});
      prev = names.size() - 1;
    }
  }
  return CoxeterGraph(names, edges);
}

/// Path on n vertices, all labels 3.
inline CoxeterGraph type_a(std::size_t n) { return star({n - 1}); }

/// Affine E_7: arms 1, 3, 3.
inline CoxeterGraph affine_e7() { return star({1, 3, 3}); }

/// Affine D_6: a path of five vertices with a second leaf at each end.
inline CoxeterGraph affine_d6() {
  return CoxeterGraph({"a", "b", "c", "d", "e", "f", "g"},
                      {{0, 2, 3}, {1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {4, 5, 3}, {4, 6, 3}});
}

}  // namespace oracle
