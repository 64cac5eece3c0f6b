#pragma once

#include <cstdint>
#include <utility>

#include "kfk/checked.hpp"
#include "kfk/slope.hpp"

namespace kfk {

/// A Berge-Gabai knot of winding number w inside the Heegaard solid torus
/// V1 of L(p, q), with cosmetic surgery slope +/-(m mu0 + lambda0).
struct BGSurgeryInput {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t w = 1;
  std::int64_t m = 0;

  void validate() const {
    if (p < 1) throw Error(ErrorCode::InvalidInput, "p must be positive");
    if (w < 1) throw Error(ErrorCode::InvalidInput, "winding number must be positive");
    if (checked::gcd(p, q) != 1) throw Error(ErrorCode::InvalidInput, "gcd(p, q) must be 1");
    if (checked::gcd(p, w) != 1) throw Error(ErrorCode::InvalidInput, "gcd(p, w) must be 1");
    if (checked::gcd(m, w) != 1) throw Error(ErrorCode::InvalidInput, "gcd(m, w) must be 1");
  }
};

struct SurgeryResult {
  std::int64_t p_prime = 1;
  /// Meridian of the surgered solid torus, m mu1 + w^2 lambda1, as (m, w^2).
  std::pair<std::int64_t, std::int64_t> meridian_image{0, 1};
};

/// Order of H_1 of the lens space obtained by the cosmetic surgery:
/// p' = Delta(m mu1 + w^2 lambda1, q mu1 + p lambda1) = |m p - q w^2|.
inline SurgeryResult cosmetic_surgery_lens(const BGSurgeryInput& in) {
  in.validate();
  const std::int64_t w2 = checked::mul(in.w, in.w);
  const std::int64_t p_prime =
      checked::abs(checked::sub(checked::mul(in.m, in.p), checked::mul(in.q, w2)));
  // Both follow from the gcd preconditions; a failure here is a bug.
  if (p_prime == 0 || checked::gcd(in.p, p_prime) != 1) {
    throw Error(ErrorCode::Falsification, "surgered lens space order not coprime to p");
  }
  return {p_prime, {in.m, w2}};
}

/// The surgery slope m mu0 + lambda0, as a canonical Slope (mu0 coefficient
/// first).
inline Slope surgery_slope(std::int64_t m) { return {m, 1}; }

}  // namespace kfk
