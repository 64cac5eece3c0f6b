#pragma once

#include <cstdint>
#include <utility>

#include "kfk/brown.hpp"
#include "kfk/checked.hpp"
#include "kfk/laurent.hpp"
#include "kfk/word.hpp"

namespace kfk {

struct FoxDerivatives {
  LaurentPoly2 dX;
  LaurentPoly2 dY;
};

/// Abelianized Fox derivatives dR/dx, dR/dy in Z[X^+-1, Y^+-1].
inline FoxDerivatives fox_derivatives(const Word& word) {
  FoxDerivatives d;
  std::int64_t i = 0, j = 0;  // abelianized prefix
  for (auto l : word) {
    switch (l) {
      case Letter::x: d.dX.add_term(i, j, 1); ++i; break;
      case Letter::X: --i; d.dX.add_term(i, j, -1); break;
      case Letter::y: d.dY.add_term(i, j, 1); ++j; break;
      case Letter::Y: --j; d.dY.add_term(i, j, -1); break;
    }
  }
  return d;
}

/// dX (X - 1) + dY (Y - 1) - (X^a Y^b - 1), where (a, b) are the exponent
/// sums. Always zero; exposed for verification.
inline LaurentPoly2 fox_identity_residual(const Word& word) {
  const auto d = fox_derivatives(word);
  const LaurentPoly2 one = LaurentPoly2::monomial(0, 0);
  const LaurentPoly2 lhs = d.dX * (LaurentPoly2::monomial(1, 0) - one) +
                           d.dY * (LaurentPoly2::monomial(0, 1) - one);
  return lhs - (LaurentPoly2::monomial(word.x_sum(), word.y_sum()) - one);
}

/// X -> T^wx, Y -> T^wy.
inline LaurentPoly1 specialize(const LaurentPoly2& poly, const WeightHom& hom) {
  LaurentPoly1 r;
  for (const auto& [e, c] : poly.terms())
    r.add_term(checked::add(checked::mul(e.first, hom.wx), checked::mul(e.second, hom.wy)), c);
  return r;
}

/// Alexander polynomial of <x, y | R> along phi: the gcd of the specialized
/// Fox derivatives, normalized.
///
/// The identity fX (T^wx - 1) = -fY (T^wy - 1) makes the gcd explicit: with
/// g = gcd(|wx|, |wy|) the cofactor (T^|wy| - 1)/(T^g - 1) divides fX
/// exactly and is coprime to (T^|wx| - 1)/(T^g - 1), so the gcd is
/// fX (T^g - 1) / (T^|wy| - 1). This is linear in the degree, where a
/// remainder sequence is not; polynomial_gcd computes the same value the
/// long way.
inline LaurentPoly1 alexander_specialized(const Word& word, const WeightHom& hom) {
  if (word.x_sum() != 0 || word.y_sum() != 0) {
    throw Error(ErrorCode::NonzeroTotal, "relator must have zero exponent sums");
  }
  if (hom.wx == 0 || hom.wy == 0) {
    throw Error(ErrorCode::NonzeroWeightRequired, "phi(x) and phi(y) must both be nonzero");
  }
  const auto d = fox_derivatives(word);
  const LaurentPoly1 fx = specialize(d.dX, hom);
  if (fx.is_zero()) return {};
  const std::int64_t g = checked::gcd(hom.wx, hom.wy);
  const LaurentPoly1 scaled = fx * LaurentPoly1{{g, 1}, {0, -1}};
  return divide_by_binomial(scaled, checked::abs(hom.wy)).normalized();
}

/// True iff the extreme coefficients are +-1. Throws on the zero polynomial.
inline bool monic_check(const LaurentPoly1& poly) {
  if (poly.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "monicity of the zero polynomial");
  return checked::abs(poly.leading()) == 1 && checked::abs(poly.trailing()) == 1;
}

}  // namespace kfk
