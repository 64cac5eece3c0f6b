#pragma once

#include <cstdint>
#include <sstream>
#include <utility>
#include <vector>

#include "kfk/braid.hpp"
#include "kfk/brown.hpp"
#include "kfk/checked.hpp"
#include "kfk/rational.hpp"
#include "kfk/slope.hpp"

namespace kfk {

// Notation: M is the exterior of a 1-bridge braid K in a solid torus V,
// T1 = dV with meridian mu1 and longitude lambda1, T2 = dN(K) with mu2,
// lambda2. A boundary curve C on T1 is a Slope (p, q) read as
// [C] = q mu1 + p lambda1; p >= 1 is its winding number in V.

struct FibrationVerdict {
  bool fibred = false;
  std::int64_t boundary_components = 0;
  WeightHom weight;
  BrownVerdict brown;

  friend bool operator==(const FibrationVerdict&, const FibrationVerdict&) = default;
};

/// Class c1 xi1 + c2 xi2 in H_2(M, dM), where d xi1 = mu1 - n mu2 and
/// d xi2 = n lambda1 - lambda2.
struct H2Class {
  std::int64_t c1 = 0;
  std::int64_t c2 = 0;

  friend bool operator==(const H2Class&, const H2Class&) = default;
};

/// Values of phi on the boundary classes of M.
struct HomologyWeights {
  std::int64_t phi_mu1 = 0;
  std::int64_t phi_lambda1 = 0;
  std::int64_t phi_mu2 = 0;
  std::int64_t phi_slope = 0;

  friend bool operator==(const HomologyWeights&, const HomologyWeights&) = default;
};

namespace detail {

inline void check_admissible_slope(const BraidParams& params, const Slope& r) {
  if (!is_knot(params)) throw Error(ErrorCode::NotAKnot, "braid closure is not a knot");
  if (r.p() == 0) throw Error(ErrorCode::MeridianSlope, "C is a meridian of V");
  if (checked::gcd(r.p(), params.n()) != 1) {
    throw Error(ErrorCode::WindingNotCoprime, "winding number not coprime to braid index");
  }
}

}  // namespace detail

/// phi(x) = pt - nq, phi(y) = pt - nq + p.
inline WeightHom weight_for_slope(const BraidParams& params, const Slope& r) {
  detail::check_admissible_slope(params, r);
  const std::int64_t wx =
      checked::sub(checked::mul(r.p(), params.t()), checked::mul(params.n(), r.q()));
  const std::int64_t wy = checked::add(wx, r.p());
  if (wx == 0 || wy == 0) throw Error(ErrorCode::ZeroWeight, "phi vanishes on a generator");
  return {wx, wy};
}

/// Evaluates phi through the relations n lambda1 = lambda2, mu1 = n mu2,
/// [y x^-1] = mu2 and lambda1 + t mu2 = [x].
inline HomologyWeights homology_weights(const BraidParams& params, const Slope& r) {
  const WeightHom hom = weight_for_slope(params, r);
  HomologyWeights h;
  h.phi_mu2 = checked::sub(hom.wy, hom.wx);
  h.phi_lambda1 = checked::sub(hom.wx, checked::mul(params.t(), h.phi_mu2));
  h.phi_mu1 = checked::mul(params.n(), h.phi_mu2);
  h.phi_slope = checked::add(checked::mul(r.q(), h.phi_mu1), checked::mul(r.p(), h.phi_lambda1));
  return h;
}

/// Runs Brown's criterion on the braid relator and phi without judging the
/// outcome. fibers_over_slope is the checked entry point.
inline FibrationVerdict evaluate_fibration(const BraidParams& params, const Slope& r) {
  const WeightHom hom = weight_for_slope(params, r);
  FibrationVerdict v;
  v.weight = hom;
  v.brown = brown_criterion(relator(params), hom);
  v.fibred = v.brown.kernel_fg;
  v.boundary_components = params.n();
  return v;
}

/// Fibration of M over the circle whose fibres meet T1 in n curves parallel
/// to r. Every admissible input must come back fibred; a negative Brown
/// verdict throws Falsification carrying the certificate.
inline FibrationVerdict fibers_over_slope(const BraidParams& params, const Slope& r) {
  FibrationVerdict v = evaluate_fibration(params, r);
  if (!v.fibred) {
    std::ostringstream os;
    os << "Brown criterion failed for " << params << " slope " << r << " phi=(" << v.weight.wx
       << ',' << v.weight.wy << ") max positions";
    for (auto i : v.brown.max_positions) os << ' ' << i;
    os << " min positions";
    for (auto i : v.brown.min_positions) os << ' ' << i;
    throw Error(ErrorCode::Falsification, os.str());
  }
  return v;
}

/// [F] = nq xi1 + p xi2.
inline H2Class fibre_class(const BraidParams& params, const Slope& r) {
  (void)weight_for_slope(params, r);
  return {checked::mul(params.n(), r.q()), r.p()};
}

/// Image of a class under H_2(M, dM) -> H_1(T1), as (mu1, lambda1)
/// coefficients: c1 xi1 + c2 xi2 -> c1 mu1 + n c2 lambda1.
inline std::pair<std::int64_t, std::int64_t> outer_boundary(const H2Class& c, std::int64_t n) {
  return {c.c1, checked::mul(n, c.c2)};
}

struct ApproximantClass {
  std::int64_t m = 0;
  H2Class cls;
  Rational error;
};

/// Fibre classes nq_m xi1 + p_m xi2 with p_m = n m v u + 1, q_m = m v^2,
/// m = 1..m_max. The ratio c1/c2 = n q_m / p_m tends to v/u; error is
/// |n q_m / p_m - v/u| = |v| / (|u| |p_m|).
inline std::vector<ApproximantClass> approximate_fibre_classes(const H2Class& target,
                                                               std::int64_t n,
                                                               std::int64_t m_max) {
  const std::int64_t u = target.c1, v = target.c2;
  if (u == 0) throw Error(ErrorCode::InvalidInput, "u = 0: (0, v) is already a fibre class");
  if (checked::gcd(u, v) != 1) throw Error(ErrorCode::InvalidInput, "target must be primitive");
  if (n < 2) throw Error(ErrorCode::InvalidInput, "braid index must be >= 2");
  if (m_max < 1) throw Error(ErrorCode::InvalidInput, "m_max must be >= 1");

  const Rational ratio(v, u);
  std::vector<ApproximantClass> out;
  out.reserve(static_cast<std::size_t>(m_max));
  for (std::int64_t m = 1; m <= m_max; ++m) {
    const std::int64_t p_m = checked::add(checked::mul(checked::mul(n, m), checked::mul(v, u)), 1);
    const std::int64_t q_m = checked::mul(m, checked::mul(v, v));
    const H2Class cls{checked::mul(n, q_m), p_m};
    out.push_back({m, cls, abs(Rational(cls.c1, cls.c2) - ratio)});
  }
  return out;
}

}  // namespace kfk
