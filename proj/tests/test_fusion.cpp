#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "corpus.hpp"
#include "coxtwist/fusion.hpp"

using namespace coxtwist;

namespace {

// Frobenius-Perron eigenvalue of left multiplication by simple i, by power
// iteration on the fusion matrix.  Independent of the closed form.
double power_iteration_fpdim(const FusionRing& r, std::size_t i) {
  const std::size_t n = r.rank();
  std::vector<double> v(n, 1.0), w(n);
  double lambda = 0;
  for (int it = 0; it < 5000; ++it) {
    for (std::size_t k = 0; k < n; ++k) {
      w[k] = 0;
      for (std::size_t j = 0; j < n; ++j) w[k] += r.N(i, j, k) * v[j];
    }
    // shift by the identity so that periodic spectra (e.g. Pi_{n-2}) still converge
    for (std::size_t k = 0; k < n; ++k) w[k] += v[k];
    double norm = 0;
    for (double x : w) norm = std::max(norm, std::abs(x));
    lambda = norm;
    for (std::size_t k = 0; k < n; ++k) v[k] = w[k] / norm;
  }
  // with v normalised to max 1, the largest component of (N + 1)v is lambda + 1
  return lambda - 1;
}

std::vector<FusionRing> sample_rings() {
  std::vector<FusionRing> out;
  for (int n = 3; n <= 9; ++n) out.push_back(tlj_ring(n));
  for (int n = 3; n <= 11; n += 2) out.push_back(tlj_even_ring(n));
  out.push_back(deligne_product({tlj_ring(4), tlj_even_ring(5)}));
  out.push_back(deligne_product({tlj_ring(4), tlj_ring(6), tlj_even_ring(7)}));
  for (const auto& name : corpus::names()) out.push_back(coxeter_fusion_ring(corpus::load(name)));
  return out;
}

FusionElement elem(const FusionRing& r, std::initializer_list<long long> c) {
  FusionElement e(r.rank());
  std::size_t i = 0;
  for (auto x : c) e.coefficients.at(i++) = x;
  return e;
}

}  // namespace

TEST(TLJ, FourProducts) {
  auto r = tlj_ring(4);
  ASSERT_EQ(r.rank(), 3u);
  EXPECT_EQ(multiply(r, r.simple(1), r.simple(1)), elem(r, {1, 0, 1}));
  EXPECT_EQ(multiply(r, r.simple(2), r.simple(1)), elem(r, {0, 1, 0}));
  EXPECT_EQ(multiply(r, elem(r, {0, 1, 1}), r.simple(1)), elem(r, {1, 1, 1}));
}

TEST(TLJ, Three) {
  auto r = tlj_ring(3);
  ASSERT_EQ(r.rank(), 2u);
  EXPECT_EQ(multiply(r, r.simple(1), r.simple(1)), r.unit());
  EXPECT_THROW(tlj_ring(2), FusionError);
}

TEST(TLJEven, ThreeIsTrivial) {
  auto r = tlj_even_ring(3);
  EXPECT_EQ(r.rank(), 1u);
  EXPECT_EQ(r.fpdim(0), 1.0);
}

TEST(TLJEven, Fibonacci) {
  auto r = tlj_even_ring(5);
  ASSERT_EQ(r.rank(), 2u);
  EXPECT_EQ(multiply(r, r.simple(1), r.simple(1)), elem(r, {1, 1}));
  EXPECT_NEAR(r.fpdim(1), (1 + std::sqrt(5.0)) / 2, 1e-12);
  EXPECT_THROW(tlj_even_ring(6), FusionError);
  EXPECT_THROW(tlj_even_ring(1), FusionError);
}

TEST(Deligne, Products) {
  EXPECT_EQ(deligne_product({tlj_ring(5)}).rank(), 4u);
  auto fib = deligne_product({tlj_even_ring(3), tlj_even_ring(5)});
  EXPECT_EQ(fib.rank(), 2u);
  EXPECT_EQ(multiply(fib, fib.simple(1), fib.simple(1)), elem(fib, {1, 1}));
  EXPECT_EQ(deligne_product({tlj_ring(4), tlj_even_ring(5)}).rank(), 6u);
  EXPECT_THROW(deligne_product({}), FusionError);
}

TEST(Deligne, AssociativeUpToReindexing) {
  auto a = tlj_ring(4), b = tlj_even_ring(5), c = tlj_ring(3);
  auto left = deligne_product({deligne_product({a, b}), c});
  auto right = deligne_product({a, deligne_product({b, c})});
  ASSERT_EQ(left.rank(), right.rank());
  // tensor-lex order on both sides is the same triple order
  for (std::size_t i = 0; i < left.rank(); ++i)
    for (std::size_t j = 0; j < left.rank(); ++j)
      for (std::size_t k = 0; k < left.rank(); ++k) EXPECT_EQ(left.N(i, j, k), right.N(i, j, k));
}

TEST(CoxeterRing, Choice) {
  EXPECT_EQ(coxeter_fusion_ring(corpus::load("a3")).rank(), 1u);
  EXPECT_EQ(coxeter_fusion_ring(corpus::load("rank2_inf")).rank(), 1u);
  auto fib = coxeter_fusion_ring(corpus::chain({5, 5, kInfinity}));
  EXPECT_EQ(fib.rank(), 2u);
  EXPECT_EQ(coxeter_fusion_ring(corpus::load("chain_4_5")).rank(), 6u);
  EXPECT_EQ(coxeter_fusion_ring(corpus::load("g2_affine")).rank(), 5u);
}

TEST(EdgeObject, Classes) {
  auto g = corpus::load("i2_5");
  auto r = coxeter_fusion_ring(g);
  EXPECT_EQ(edge_object(g, r, 0, 1), r.simple(1));
  EXPECT_EQ(r.label(1), "Pi2");

  auto inf = corpus::load("rank2_inf");
  auto ri = coxeter_fusion_ring(inf);
  EXPECT_EQ(edge_object(inf, ri, 0, 1), 2 * ri.unit());
  EXPECT_DOUBLE_EQ(fpdim(ri, edge_object(inf, ri, 0, 1)), 2.0);

  auto a2 = corpus::load("a2");
  EXPECT_EQ(edge_object(a2, coxeter_fusion_ring(a2), 0, 1), coxeter_fusion_ring(a2).unit());
  EXPECT_THROW(edge_object(corpus::rank2(2), coxeter_fusion_ring(corpus::rank2(2)), 0, 1), std::exception);
}

TEST(EdgeObject, DimensionIsTwoCos) {
  for (const auto& name : corpus::names()) {
    auto g = corpus::load(name);
    auto r = coxeter_fusion_ring(g);
    for (const auto& e : g.edges()) {
      if (e.infinite()) continue;
      EXPECT_LT(std::abs(fpdim(r, edge_object(g, r, e.a, e.b)) - 2 * std::cos(std::numbers::pi / e.m)), 1e-12);
    }
  }
  auto four = coxeter_fusion_ring(corpus::rank2(4));
  EXPECT_NEAR(fpdim(four, edge_object(four, 4)), std::sqrt(2.0), 1e-12);
}

TEST(FusionRing, Invariants) {
  for (const auto& r : sample_rings()) {
    const std::size_t n = r.rank();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        EXPECT_EQ(r.N(0, j, k), j == k ? 1 : 0);
        EXPECT_EQ(r.N(j, 0, k), j == k ? 1 : 0);
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(r.N(i, j, 0), i == j ? 1 : 0);
        for (std::size_t k = 0; k < n; ++k) EXPECT_EQ(r.N(i, j, k), r.N(j, i, k));
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t l = 0; l < n; ++l)
          for (std::size_t m = 0; m < n; ++m) {
            long long lhs = 0, rhs = 0;
            for (std::size_t k = 0; k < n; ++k) {
              lhs += r.N(i, j, k) * r.N(k, l, m);
              rhs += r.N(j, l, k) * r.N(i, k, m);
            }
            EXPECT_EQ(lhs, rhs);
          }
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_GE(r.fpdim(i), 1.0 - 1e-12);
      for (std::size_t j = 0; j < n; ++j)
        EXPECT_NEAR(r.fpdim(i) * r.fpdim(j), fpdim(r, multiply(r, r.simple(i), r.simple(j))), 1e-9);
    }
  }
}

TEST(FusionRing, FpdimMatchesPowerIteration) {
  for (const auto& r : sample_rings())
    for (std::size_t i = 0; i < r.rank(); ++i) EXPECT_NEAR(r.fpdim(i), power_iteration_fpdim(r, i), 1e-7);
}

TEST(FusionRing, ChebyshevRecurrence) {
  for (int n = 3; n <= 12; ++n) {
    auto r = tlj_ring(n);
    const double d = 2 * std::cos(std::numbers::pi / n);
    for (int k = 1; k + 1 <= n - 2; ++k)
      EXPECT_NEAR(r.fpdim(k + 1), d * r.fpdim(k) - r.fpdim(k - 1), 1e-9);
  }
}

TEST(FusionRing, Multiplication) {
  auto r = tlj_ring(4);
  EXPECT_EQ(multiply(r, r.unit(), elem(r, {2, -1, 3})), elem(r, {2, -1, 3}));
  EXPECT_THROW(multiply(r, r.unit(), FusionElement(2)), FusionError);
  EXPECT_DOUBLE_EQ(fpdim(r, r.unit()), 1.0);
}
