#pragma once

#include <cstdint>
#include <ostream>

#include "kfk/checked.hpp"

namespace kfk {

/// The isometry psi(z, w) = (e^{2 pi i alpha1/a1} z, e^{2 pi i alpha2/a2} w)
/// of S^3, recorded by its rotation orders and angles on the two
/// coordinate circles.
struct CyclicActionParams {
  std::int64_t a1 = 1;
  std::int64_t alpha1 = 0;
  std::int64_t a2 = 1;
  std::int64_t alpha2 = 0;

  void validate() const {
    if (a1 < 1 || a2 < 1) throw Error(ErrorCode::InvalidInput, "rotation orders must be positive");
    if (checked::gcd(alpha1, a1) != 1 || checked::gcd(alpha2, a2) != 1) {
      throw Error(ErrorCode::InvalidInput, "rotation angle must be coprime to its order");
    }
  }
};

/// Combinatorics of the quotient of S^3 by the group Z generated by psi.
/// abar2 is the ramification index along the image of the first core
/// circle, abar1 along the second.
struct QuotientData {
  std::int64_t n = 1;           // |Z|
  std::int64_t abar1 = 1;
  std::int64_t abar2 = 1;
  std::int64_t base_order = 1;  // |pi_1| of the underlying lens space

  friend bool operator==(const QuotientData&, const QuotientData&) = default;
};

inline QuotientData quotient_data(const CyclicActionParams& params) {
  params.validate();
  const std::int64_t g = checked::gcd(params.a1, params.a2);
  return {checked::lcm(params.a1, params.a2), params.a1 / g, params.a2 / g, g};
}

/// Orbi-lens space L(p, q; b1, b2): underlying space L(p, q) with cone
/// angles 2pi/b1 and 2pi/b2 along the Heegaard cores. q is kept in [0, p).
class OrbiLens {
 public:
  OrbiLens(std::int64_t p, std::int64_t q, std::int64_t b1, std::int64_t b2) {
    if (p < 1) throw Error(ErrorCode::InvalidInput, "orbi-lens p must be positive");
    if (b1 < 1 || b2 < 1) throw Error(ErrorCode::InvalidInput, "isotropy orders must be positive");
    if (checked::gcd(p, q) != 1) throw Error(ErrorCode::InvalidInput, "gcd(p, q) must be 1");
    if (checked::gcd(b1, b2) != 1) throw Error(ErrorCode::InvalidInput, "gcd(b1, b2) must be 1");
    p_ = p;
    q_ = checked::mod(q, p);
    b1_ = b1;
    b2_ = b2;
  }

  /// L(p, q; a) := L(p, q; 1, a).
  static OrbiLens with_single_cone(std::int64_t p, std::int64_t q, std::int64_t a) {
    return {p, q, 1, a};
  }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  std::int64_t b1() const noexcept { return b1_; }
  std::int64_t b2() const noexcept { return b2_; }

  friend bool operator==(const OrbiLens&, const OrbiLens&) = default;

  friend std::ostream& operator<<(std::ostream& os, const OrbiLens& l) {
    return os << "L(" << l.p_ << ',' << l.q_ << ';' << l.b1_ << ',' << l.b2_ << ')';
  }

 private:
  std::int64_t p_, q_, b1_, b2_;
};

/// |pi_1^orb(L)| = b1 * b2 * p.
inline std::int64_t fundamental_group_order(const OrbiLens& lens) {
  return checked::mul(checked::mul(lens.b1(), lens.b2()), lens.p());
}

/// Whether the preimage in S^3 of a winding-number-w knot in L(p, q; a) is
/// connected, i.e. gcd(w, a p) == 1. Requires b1 == 1.
inline bool unwrap_is_knot(std::int64_t w, const OrbiLens& lens) {
  if (w < 1) throw Error(ErrorCode::InvalidInput, "winding number must be positive");
  if (lens.b1() != 1) throw Error(ErrorCode::InvalidInput, "unwrap_is_knot expects L(p,q;1,a)");
  return checked::gcd(w, checked::mul(lens.b2(), lens.p())) == 1;
}

}  // namespace kfk
