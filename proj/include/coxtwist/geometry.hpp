#pragma once

// Central charges on the real reflection representation, the imaginary cone,
// Tits cone and hyperplane-complement tests, and chamber location.
//
// A charge is a complex functional on the real span of the simple roots,
// stored by its values Z(alpha_s).  W acts by (w.Z)(v) = Z(w^-1 v), so the
// simple reflection s sends Z(alpha_t) to Z(alpha_t) - B(alpha_s, alpha_t) Z(alpha_s).
// Equivariant charges evaluate on the fusion lattice through FPdim; a full
// charge is an ordinary charge on the unfolded graph.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "coxgraph.hpp"
#include "fusion.hpp"
#include "lattice.hpp"

namespace coxtwist {

using Complexd = std::complex<double>;
using CentralCharge = std::vector<Complexd>;
using RealVector = std::vector<double>;

inline constexpr double kTolerance = 1e-9;
inline constexpr double kAngularTolerance = 1e-6;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [Y] alpha_s -> FPdim(Y) alpha_s.
inline RealVector embed_real(const CoxeterGraph& g, const FusionRing& r, const LatticeVector& v) {
  const std::size_t R = r.rank();
  if (v.size() != g.size() * R) throw std::invalid_argument("lattice vector has wrong length");
  RealVector out(g.size(), 0.0);
  for (std::size_t s = 0; s < g.size(); ++s)
    for (std::size_t e = 0; e < R; ++e) out[s] += static_cast<double>(v[s * R + e]) * r.fpdim(e);
  return out;
}

inline double real_form(const Eigen::MatrixXd& B, const RealVector& x, const RealVector& y) {
  double sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j)
      sum += x[i] * B(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) * y[j];
  return sum;
}

inline Complexd evaluate(const CentralCharge& Z, const RealVector& x) {
  if (Z.size() != x.size()) throw std::invalid_argument("charge/vector size mismatch");
  Complexd sum = 0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += Z[i] * x[i];
  return sum;
}

/// Equivariant charge evaluated on the fusion lattice.
inline Complexd evaluate(const CoxeterGraph& g, const FusionRing& r, const CentralCharge& Z,
                         const LatticeVector& v) {
  return evaluate(Z, embed_real(g, r, v));
}

inline CentralCharge apply_reflection(const Eigen::MatrixXd& B, const CentralCharge& Z, std::size_t s) {
  CentralCharge out(Z.size());
  for (std::size_t t = 0; t < Z.size(); ++t)
    out[t] = Z[t] - B(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(t)) * Z[s];
  return out;
}

/// Applies the letters of w to Z from left to right.
inline CentralCharge apply_word(const CoxeterGraph& g, const CoxeterWord& w, CentralCharge Z) {
  const auto B = gram_matrix(g);
  for (auto s : w) Z = apply_reflection(B, Z, s);
  return Z;
}

namespace detail {

inline RealVector normalized(RealVector v) {
  double n = 0;
  for (double x : v) n += x * x;
  n = std::sqrt(n);
  for (double& x : v) x /= n;
  return v;
}

inline bool same_direction(const RealVector& a, const RealVector& b) {
  double dot = 0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  return std::acos(std::clamp(dot, -1.0, 1.0)) < kAngularTolerance;
}

}  // namespace detail

/// Unit directions approximating the limit rays of the positive roots.
/// Finite components contribute nothing.  An affine component contributes
/// its exact null ray; any other component contributes the normalised
/// images of positive roots found at depth in (depth/2, depth].
inline std::vector<RealVector> imaginary_cone_samples(const CoxeterGraph& g, const FusionRing& r,
                                                      int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  std::vector<RealVector> out;
  auto push = [&](RealVector v) {
    v = detail::normalized(std::move(v));
    for (const auto& w : out)
      if (detail::same_direction(v, w)) return;
    out.push_back(std::move(v));
  };
  const auto comps = components(g);
  std::optional<RootEnumeration> roots;
  for (const auto& comp : comps) {
    const auto sub = full_subgraph(g, comp);
    if (is_finite_type(sub)) continue;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(gram_matrix(sub));
    const auto& vals = eig.eigenvalues();
    const bool affine = std::abs(vals(0)) <= kTolerance && (vals.size() < 2 || vals(1) > kTolerance);
    if (affine) {
      Eigen::VectorXd null = eig.eigenvectors().col(0);
      if (null.sum() < 0) null = -null;
      RealVector v(g.size(), 0.0);
      for (std::size_t i = 0; i < comp.size(); ++i) v[comp[i]] = std::max(0.0, null(static_cast<Eigen::Index>(i)));
      push(std::move(v));
      continue;
    }
    if (!roots) roots = enumerate_positive_roots(g, r, depth);
    for (std::size_t k = 0; k < roots->roots.size(); ++k) {
      if (2 * roots->depth[k] <= depth) continue;
      auto v = embed_real(g, r, roots->roots[k]);
      if (std::none_of(comp.begin(), comp.end(), [&](std::size_t s) { return v[s] != 0.0; })) continue;
      push(std::move(v));
    }
  }
  return out;
}

/// Middle argument of Z on the samples, in (-pi, pi].
inline double phase_of_imaginary_cone(const CentralCharge& Z, const std::vector<RealVector>& samples) {
  if (samples.empty()) throw GeometryError("no imaginary cone samples");
  const Complexd ref = evaluate(Z, samples.front());
  if (std::abs(ref) < kTolerance) throw GeometryError("charge vanishes on the imaginary cone");
  double lo = 0, hi = 0;
  for (const auto& v : samples) {
    const Complexd z = evaluate(Z, v);
    if (std::abs(z) < kTolerance) throw GeometryError("charge vanishes on the imaginary cone");
    const double a = std::arg(z / ref);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
  }
  if (hi - lo >= std::numbers::pi) throw GeometryError("image of the imaginary cone spans a half-plane");
  double phi = std::arg(ref) + (lo + hi) / 2;
  while (phi <= -std::numbers::pi) phi += 2 * std::numbers::pi;
  while (phi > std::numbers::pi) phi -= 2 * std::numbers::pi;
  return phi;
}

struct Normalization {
  Complexd k{1, 0};
  CentralCharge charge;
};

/// k = exp(i (pi/2 - phi)), so k Z has middle phase pi/2.  No samples (finite
/// type) leaves Z unchanged.
inline Normalization normalize_charge(const CentralCharge& Z, const std::vector<RealVector>& samples) {
  if (samples.empty()) return {Complexd(1, 0), Z};
  const double phi = phase_of_imaginary_cone(Z, samples);
  const Complexd k = std::polar(1.0, std::numbers::pi / 2 - phi);
  Normalization n{k, Z};
  for (auto& z : n.charge) z *= k;
  return n;
}

enum class TriState { yes, no, inconclusive };

inline const char* to_string(TriState t) {
  switch (t) {
    case TriState::yes:
      return "yes";
    case TriState::no:
      return "no";
    case TriState::inconclusive:
      return "inconclusive";
  }
  return "";
}

struct Verdict {
  TriState answer = TriState::inconclusive;
  bool exhaustive = false;  // the answer does not depend on a truncation
  std::string reason;
};

/// Iteration budget: 10 * (positive roots to `depth` + rank), or the value of
/// COXTWIST_MAX_ITER when set.
inline std::size_t default_max_iter(const CoxeterGraph& g, const FusionRing& r, int depth) {
  if (const char* env = std::getenv("COXTWIST_MAX_ITER")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  const auto roots = enumerate_positive_roots(g, r, depth);
  return 10 * (roots.roots.size() + g.size());
}

/// Whether the real functional x (values x(alpha_s)) lies in the interior of
/// the Tits cone.
inline Verdict in_tits_interior(const CoxeterGraph& g, const FusionRing& r, const RealVector& x,
                                int depth, std::size_t max_iter) {
  if (x.size() != g.size()) throw std::invalid_argument("functional has wrong length");
  if (is_finite_type(g)) return {TriState::yes, true, "finite type: the Tits cone is everything"};
  const auto B = gram_matrix(g);
  CentralCharge z(x.begin(), x.end());
  for (std::size_t step = 0; step <= max_iter; ++step) {
    std::optional<std::size_t> s;
    for (std::size_t t = 0; t < g.size() && !s; ++t)
      if (z[t].real() < -kTolerance) s = t;
    if (!s) {
      std::vector<std::size_t> J;
      for (std::size_t t = 0; t < g.size(); ++t)
        if (std::abs(z[t].real()) <= kTolerance) J.push_back(t);
      if (is_finite_type(full_subgraph(g, J)))
        return {TriState::yes, true, "reached the fundamental chamber with finite stabiliser"};
      return {TriState::no, true, "reached the fundamental chamber with infinite stabiliser"};
    }
    if (step == max_iter) break;
    z = apply_reflection(B, z, *s);
  }
  for (const auto& v : imaginary_cone_samples(g, r, depth)) {
    double value = 0;
    for (std::size_t i = 0; i < v.size(); ++i) value += x[i] * v[i];
    if (value <= kTolerance) return {TriState::no, false, "not positive on an imaginary cone sample"};
  }
  return {TriState::inconclusive, false, "descent did not terminate within the iteration budget"};
}

/// Whether Z avoids every root hyperplane and the imaginary cone, up to the
/// enumeration depth.
inline Verdict in_regular_set(const CoxeterGraph& g, const FusionRing& r, const CentralCharge& Z,
                              int depth, double tol = kTolerance) {
  if (Z.size() != g.size()) throw std::invalid_argument("charge has wrong length");
  const auto roots = enumerate_positive_roots(g, r, depth);
  double smallest = std::numeric_limits<double>::infinity();
  std::string where;
  for (const auto& a : roots.roots) {
    const double m = std::abs(evaluate(g, r, Z, a));
    if (m < smallest) {
      smallest = m;
      where = "a positive root";
    }
  }
  const auto samples = imaginary_cone_samples(g, r, depth);
  for (const auto& v : samples) {
    const double m = std::abs(evaluate(Z, v));
    if (m < smallest) {
      smallest = m;
      where = "an imaginary cone sample";
    }
  }
  const bool exhaustive = roots.complete && samples.empty();
  if (smallest < tol / 10) return {TriState::no, true, "charge vanishes on " + where};
  if (smallest > tol)
    return {TriState::yes, exhaustive,
            exhaustive ? "nonzero on every root" : "nonzero on every root up to the depth bound"};
  return {TriState::inconclusive, false, "charge is within tolerance of zero on " + where};
}

enum class ChamberStatus { located, not_in_interior, max_iterations };

inline const char* to_string(ChamberStatus s) {
  switch (s) {
    case ChamberStatus::located:
      return "located";
    case ChamberStatus::not_in_interior:
      return "not_in_interior";
    case ChamberStatus::max_iterations:
      return "max_iterations";
  }
  return "";
}

struct ChamberReport {
  ChamberStatus status = ChamberStatus::located;
  Complexd k{1, 0};
  CoxeterWord word;       // reflections in the order applied
  CentralCharge charge;   // w . (k Z)
  std::optional<double> phase;  // middle phase of the imaginary cone after normalisation
  std::string reason;
};

/// Z(alpha_s) in the upper half-plane or on the negative real axis, within tol.
inline bool in_complexified_chamber(const CentralCharge& Z, double tol = kTolerance) {
  for (const auto& z : Z)
    if (!(z.imag() > tol || (std::abs(z.imag()) <= tol && z.real() < -tol))) return false;
  return true;
}

/// Finds k in U(1) and w in W with w . k . Z in the normalised complexified
/// chamber.
inline ChamberReport locate_chamber(const CoxeterGraph& g, const FusionRing& r, const CentralCharge& Z,
                                    double tol, std::size_t max_iter, int depth = 12) {
  if (Z.size() != g.size()) throw std::invalid_argument("charge has wrong length");
  ChamberReport rep;
  const auto B = gram_matrix(g);
  const bool finite = is_finite_type(g);
  std::vector<RealVector> samples;
  if (!finite) {
    samples = imaginary_cone_samples(g, r, depth);
    try {
      auto n = normalize_charge(Z, samples);
      rep.k = n.k;
      rep.charge = std::move(n.charge);
    } catch (const GeometryError& e) {
      rep.status = ChamberStatus::not_in_interior;
      rep.reason = e.what();
      rep.charge = Z;
      return rep;
    }
  } else {
    rep.charge = Z;
  }

  // I is W-stable but a finite sample of it is not, so the samples travel
  // with the charge: (w.Z)(w.v) = Z(v).
  std::size_t steps = 0;
  auto step = [&](std::size_t s) {
    rep.charge = apply_reflection(B, rep.charge, s);
    const auto row = static_cast<Eigen::Index>(s);
    for (auto& v : samples) {
      double pairing = 0;
      for (std::size_t t = 0; t < v.size(); ++t) pairing += B(row, static_cast<Eigen::Index>(t)) * v[t];
      v[s] -= pairing;
    }
    rep.word.push_back(s);
    return ++steps <= max_iter;
  };
  for (;;) {
    std::optional<std::size_t> s;
    for (std::size_t t = 0; t < g.size() && !s; ++t)
      if (rep.charge[t].imag() < -tol) s = t;
    if (!s) break;
    if (!step(*s)) {
      rep.status = ChamberStatus::max_iterations;
      rep.reason = "imaginary-part descent exceeded the iteration budget";
      return rep;
    }
  }

  std::vector<std::size_t> J;
  for (std::size_t t = 0; t < g.size(); ++t)
    if (std::abs(rep.charge[t].imag()) <= tol) J.push_back(t);
  if (!is_finite_type(full_subgraph(g, J))) {
    rep.status = ChamberStatus::not_in_interior;
    rep.reason = "stabiliser of the imaginary part is of infinite type";
    return rep;
  }
  for (;;) {
    std::optional<std::size_t> s;
    for (auto t : J) {
      if (std::abs(rep.charge[t].real()) <= tol) {
        rep.status = ChamberStatus::not_in_interior;
        rep.reason = "charge vanishes on a simple root";
        return rep;
      }
      if (!s && rep.charge[t].real() > tol) s = t;
    }
    if (!s) break;
    if (!step(*s)) {
      rep.status = ChamberStatus::max_iterations;
      rep.reason = "descent inside the finite parabolic exceeded the iteration budget";
      return rep;
    }
  }

  if (!samples.empty()) {
    try {
      rep.phase = phase_of_imaginary_cone(rep.charge, samples);
    } catch (const GeometryError& e) {
      rep.status = ChamberStatus::not_in_interior;
      rep.reason = e.what();
      return rep;
    }
  }
  if (!in_complexified_chamber(rep.charge, tol) ||
      (rep.phase && std::abs(*rep.phase - std::numbers::pi / 2) >= kAngularTolerance)) {
    rep.status = ChamberStatus::not_in_interior;
    rep.reason = "final charge fails the chamber verification";
    return rep;
  }
  return rep;
}

}  // namespace coxtwist
