#include <gtest/gtest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "coxtwist/lattice.hpp"
#include "coxtwist/unfolding.hpp"

using namespace coxtwist;

using oracle::affine_d6;
using oracle::disjoint_union;
using oracle::star;

TEST(Unfold, SimplyLacedIsUnchanged) {
  for (const auto& name : {"a2", "a3", "rank2_inf"}) {
    auto g = corpus::load(name);
    auto u = unfold(g);
    EXPECT_EQ(u.size(), g.size());
    EXPECT_EQ(u.as_coxeter_graph(), g) << name;
    for (std::size_t s = 0; s < g.size(); ++s) EXPECT_EQ(fiber(u, s), std::vector<std::size_t>{s});
  }
  auto inf = unfold(corpus::load("rank2_inf"));
  ASSERT_EQ(inf.edges().size(), 1u);
  EXPECT_EQ(inf.edges()[0].multiplicity, 2);
}

TEST(Unfold, PentagonIsA4) {
  auto g = corpus::load("i2_5");
  auto u = unfold(g);
  ASSERT_EQ(u.size(), 4u);
  EXPECT_EQ(u.names(), (std::vector<std::string>{"(s,Pi0)", "(s,Pi2)", "(t,Pi0)", "(t,Pi2)"}));
  EXPECT_TRUE(are_isomorphic(u.as_coxeter_graph(), corpus::chain({3, 3, 3})));
  // (s,Pi0) - (t,Pi2) - (s,Pi2) - (t,Pi0)
  EXPECT_EQ(u.multiplicity(0, 3), 1);
  EXPECT_EQ(u.multiplicity(1, 3), 1);
  EXPECT_EQ(u.multiplicity(1, 2), 1);
  EXPECT_EQ(u.multiplicity(0, 2), 0);
  EXPECT_EQ(fiber(u, 0), (std::vector<std::size_t>{0, 1}));
}

TEST(Unfold, AffineG2) {
  auto u = unfold(corpus::load("g2_affine"));
  EXPECT_EQ(u.size(), 15u);
  EXPECT_TRUE(are_isomorphic(u.as_coxeter_graph(), disjoint_union(star({1, 3, 3}), affine_d6())));
  EXPECT_FALSE(is_finite_type(u.as_coxeter_graph()));
}

TEST(Unfold, ChainFourFive) {
  auto g = corpus::load("chain_4_5");
  auto u = unfold(g);
  EXPECT_EQ(u.size(), 18u);
  for (std::size_t s = 0; s < g.size(); ++s) EXPECT_EQ(fiber(u, s).size(), 6u);
}

TEST(Unfold, RankTwoFibresAreTypeA) {
  // One A_{m-1} for odd m; for even m the full TLJ_m gives two of them.
  for (int m = 3; m <= 8; ++m) {
    const auto u = unfold(corpus::rank2(m)).as_coxeter_graph();
    const auto comps = components(u);
    EXPECT_EQ(comps.size(), m % 2 ? 1u : 2u) << m;
    for (const auto& c : comps)
      EXPECT_TRUE(are_isomorphic(full_subgraph(u, c), oracle::type_a(static_cast<std::size_t>(m - 1)))) << m;
  }
  // and inside a larger graph: the subgraph over two fibres of the {4,5}-chain
  auto g = corpus::load("chain_4_5");
  auto u = unfold(g);
  for (std::size_t s = 0; s + 1 < g.size(); ++s) {
    auto both = fiber(u, s);
    for (auto v : fiber(u, s + 1)) both.push_back(v);
    const auto sub = full_subgraph(u.as_coxeter_graph(), both);
    const auto m = static_cast<std::size_t>(g.label(s, s + 1));
    for (const auto& c : components(sub))
      EXPECT_TRUE(are_isomorphic(full_subgraph(sub, c), oracle::type_a(m - 1))) << s;
  }
}

TEST(Unfold, Errors) {
  auto u = unfold(corpus::load("i2_5"));
  EXPECT_THROW(fiber(u, 2), GraphError);
  EXPECT_THROW(psi_matrix(u, 7), GraphError);
}

TEST(Unfold, SizeAndFibres) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> label(2, 7);
  std::vector<CoxeterGraph> graphs;
  for (const auto& name : corpus::names()) graphs.push_back(corpus::load(name));
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> labels(1 + trial % 3);
    for (auto& m : labels) m = label(rng);
    graphs.push_back(corpus::chain(labels));
  }
  for (const auto& g : graphs) {
    auto u = unfold(g);
    EXPECT_EQ(u.size(), g.size() * coxeter_fusion_ring(g).rank());
    for (std::size_t s = 0; s < g.size(); ++s) {
      auto f = fiber(u, s);
      for (auto a : f) {
        EXPECT_EQ(u.base_vertex(a), s);
        for (auto b : f) EXPECT_EQ(u.multiplicity(a, b), 0);
      }
    }
    for (const auto& e : u.edges()) EXPECT_TRUE(g.adjacent(u.base_vertex(e.a), u.base_vertex(e.b)));
    EXPECT_EQ(is_finite_type(g), is_finite_type(u.as_coxeter_graph()));
  }
}

TEST(Unfold, EdgeRule) {
  // (s,E) - (t,F) iff E is a summand of Pi(e) (x) F, checked straight from the fusion rules.
  for (const auto& name : corpus::names()) {
    auto g = corpus::load(name);
    auto u = unfold(g);
    const auto& r = u.ring();
    for (std::size_t a = 0; a < u.size(); ++a)
      for (std::size_t b = 0; b < u.size(); ++b) {
        const auto s = u.base_vertex(a), t = u.base_vertex(b);
        int expected = 0;
        if (g.adjacent(s, t)) {
          if (g.label(s, t) == kInfinity)
            expected = u.simple_of(a) == u.simple_of(b) ? 2 : 0;
          else
            expected = static_cast<int>(
                multiply(r, edge_object(g, r, s, t), r.simple(u.simple_of(b)))[u.simple_of(a)]);
        }
        EXPECT_EQ(u.multiplicity(a, b), expected) << name;
      }
  }
}

TEST(Unfold, DisjointUnion) {
  auto i25 = corpus::load("i2_5");
  auto both = unfold(disjoint_union(i25, i25));
  EXPECT_TRUE(are_isomorphic(both.as_coxeter_graph(),
                             disjoint_union(unfold(i25).as_coxeter_graph(), unfold(i25).as_coxeter_graph())));

  // With different label sets each side is unfolded over the ring of the union.
  auto left = corpus::load("i2_4"), right = corpus::load("g2_affine");
  auto whole = disjoint_union(left, right);
  auto ring = coxeter_fusion_ring(whole);
  EXPECT_TRUE(are_isomorphic(unfold(whole).as_coxeter_graph(),
                             disjoint_union(UnfoldedGraph(left, ring).as_coxeter_graph(),
                                            UnfoldedGraph(right, ring).as_coxeter_graph())));
}

TEST(LcmTranslate, Examples) {
  auto g = corpus::load("i2_5");
  auto u = unfold(g);
  EXPECT_TRUE(lcm_translate(u, BraidWord{}).letters.empty());
  auto w = lcm_translate(u, parse_braid_word(g, "s"));
  EXPECT_EQ(w, (BraidWord{{{0, 1}, {1, 1}}}));
  auto inv = lcm_translate(u, parse_braid_word(g, "s^-1 t"));
  EXPECT_EQ(inv, (BraidWord{{{1, -1}, {0, -1}, {2, 1}, {3, 1}}}));
  EXPECT_EQ(lcm_translate(u, CoxeterWord{1}), (CoxeterWord{2, 3}));
}

TEST(Psi, MatchesFoldedReflections) {
  for (const auto& name : corpus::names()) {
    auto g = corpus::load(name);
    auto r = coxeter_fusion_ring(g);
    auto u = unfold(g);
    for (std::size_t s = 0; s < g.size(); ++s) {
      auto psi = psi_matrix(u, s);
      EXPECT_EQ(psi, simple_reflection_matrix(g, r, s)) << name;
      EXPECT_EQ(psi * psi, IntMatrix::identity(u.size()));
    }
  }
}

TEST(Psi, IntertwinesRandomWords) {
  std::mt19937 rng(23);
  for (const auto& name : corpus::names()) {
    auto g = corpus::load(name);
    auto r = coxeter_fusion_ring(g);
    auto u = unfold(g);
    const auto ug = u.as_coxeter_graph();
    const auto ur = coxeter_fusion_ring(ug);
    for (int trial = 0; trial < 25; ++trial) {
      auto w = corpus::random_coxeter_word(rng, g.size(), 10);
      IntMatrix product = IntMatrix::identity(u.size());
      for (auto s : w) product = psi_matrix(u, s) * product;
      EXPECT_EQ(product, coxeter_word_matrix(g, r, w)) << name;
      EXPECT_EQ(coxeter_word_matrix(ug, ur, lcm_translate(u, w)), product) << name;
    }
  }
}
