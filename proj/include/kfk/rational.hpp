#pragma once

#include <cstdint>
#include <ostream>

#include "kfk/checked.hpp"

namespace kfk {

/// Exact rational num/den with den > 0 and gcd(num, den) == 1.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1) {
    if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator");
    if (den < 0) {
      num = checked::neg(num);
      den = checked::neg(den);
    }
    const std::int64_t g = checked::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return {checked::sub(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)),
            checked::mul(a.den_, b.den_)};
  }
  friend Rational abs(const Rational& r) { return {checked::abs(r.num_), r.den_}; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b) {
    return checked::mul(a.num_, b.den_) < checked::mul(b.num_, a.den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.num_ << '/' << r.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace kfk
