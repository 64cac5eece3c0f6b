#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kfk/checked.hpp"

namespace kfk {

/// Integer Laurent polynomial in X, Y. Zero coefficients are never stored.
class LaurentPoly2 {
 public:
  using Exponent = std::pair<std::int64_t, std::int64_t>;
  using Terms = std::map<Exponent, std::int64_t>;

  LaurentPoly2() = default;

  static LaurentPoly2 monomial(std::int64_t i, std::int64_t j, std::int64_t c = 1) {
    LaurentPoly2 p;
    p.add_term(i, j, c);
    return p;
  }

  void add_term(std::int64_t i, std::int64_t j, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e.first, e.second, c);
    return a;
  }
  friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e.first, e.second, checked::neg(c));
    return a;
  }
  friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term(checked::add(ea.first, eb.first), checked::add(ea.second, eb.second),
                   checked::mul(ca, cb));
    return r;
  }

  friend bool operator==(const LaurentPoly2&, const LaurentPoly2&) = default;

  /// Sorted "i,j:c" terms separated by spaces; the zero polynomial is "".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << ' ';
      first = false;
      os << e.first << ',' << e.second << ':' << c;
    }
    return os.str();
  }

 private:
  Terms terms_;
};

/// Integer Laurent polynomial in T. Zero coefficients are never stored.
class LaurentPoly1 {
 public:
  using Terms = std::map<std::int64_t, std::int64_t>;

  LaurentPoly1() = default;
  LaurentPoly1(std::initializer_list<std::pair<const std::int64_t, std::int64_t>> init) {
    for (const auto& [e, c] : init) add_term(e, c);
  }

  /// From dense coefficients c[0] + c[1] T + ..., shifted by T^offset.
  static LaurentPoly1 from_dense(const std::vector<std::int64_t>& coeffs, std::int64_t offset = 0) {
    LaurentPoly1 p;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      p.add_term(checked::add(offset, static_cast<std::int64_t>(k)), coeffs[k]);
    return p;
  }

  void add_term(std::int64_t e, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = checked::add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t low_exponent() const { return terms_.begin()->first; }
  std::int64_t high_exponent() const { return terms_.rbegin()->first; }
  std::int64_t leading() const { return terms_.rbegin()->second; }
  std::int64_t trailing() const { return terms_.begin()->second; }
  /// high - low exponent; 0 for the zero polynomial.
  std::int64_t span() const { return is_zero() ? 0 : high_exponent() - low_exponent(); }

  /// Coefficients T^low ... T^high.
  std::vector<std::int64_t> dense() const {
    if (is_zero()) return {};
    std::vector<std::int64_t> out(static_cast<std::size_t>(span()) + 1, 0);
    for (const auto& [e, c] : terms_) out[static_cast<std::size_t>(e - low_exponent())] = c;
    return out;
  }

  /// Unit normalization: lowest exponent 0, positive leading coefficient.
  LaurentPoly1 normalized() const {
    if (is_zero()) return {};
    const std::int64_t shift = low_exponent();
    const std::int64_t sign = leading() < 0 ? -1 : 1;
    LaurentPoly1 r;
    for (const auto& [e, c] : terms_) r.add_term(e - shift, checked::mul(sign, c));
    return r;
  }

  friend LaurentPoly1 operator+(LaurentPoly1 a, const LaurentPoly1& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  friend LaurentPoly1 operator-(LaurentPoly1 a, const LaurentPoly1& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, checked::neg(c));
    return a;
  }
  friend LaurentPoly1 operator*(const LaurentPoly1& a, const LaurentPoly1& b) {
    LaurentPoly1 r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(checked::add(ea, eb), checked::mul(ca, cb));
    return r;
  }

  friend bool operator==(const LaurentPoly1&, const LaurentPoly1&) = default;

  /// Sorted "e:c" terms separated by spaces; the zero polynomial is "".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (!first) os << ' ';
      first = false;
      os << e << ':' << c;
    }
    return os.str();
  }

  static LaurentPoly1 parse(const std::string& text) {
    LaurentPoly1 p;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "bad term '" + tok + "'");
      try {
        p.add_term(std::stoll(tok.substr(0, colon)), std::stoll(tok.substr(colon + 1)));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::InvalidInput, "bad term '" + tok + "'");
      }
    }
    return p;
  }

  /// Human-readable form in T, highest degree first, e.g. "T^2 - 3T + 1".
  std::string pretty() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto [e, c] = *it;
      const std::int64_t mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) os << '-';
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      first = false;
      if (mag != 1 || e == 0) os << mag;
      if (e != 0) {
        os << 'T';
        if (e != 1) os << '^' << e;
      }
    }
    return os.str();
  }

 private:
  Terms terms_;
};

namespace detail {

using BigInt = boost::multiprecision::cpp_int;
using BigPoly = std::vector<BigInt>;  // dense, low degree first, no trailing zeros

inline void trim(BigPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline BigInt content(const BigPoly& p) {
  BigInt g = 0;
  for (const auto& c : p) g = boost::multiprecision::gcd(g, c);
  return g;
}

inline BigPoly primitive_part(BigPoly p) {
  const BigInt c = content(p);
  if (c > 1)
    for (auto& v : p) v /= c;
  return p;
}

/// Pseudo-remainder of a by b (b nonzero).
inline BigPoly pseudo_remainder(BigPoly a, const BigPoly& b) {
  const std::size_t db = b.size() - 1;
  const BigInt& lb = b.back();
  while (a.size() >= b.size()) {
    const BigInt la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& v : a) v *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] -= la * b[k];
    trim(a);
  }
  return a;
}

}  // namespace detail

/// gcd in Z[T, T^-1] up to units, by content and primitive-part polynomial
/// remainder sequence. Result is normalized; gcd(0, 0) = 0.
inline LaurentPoly1 polynomial_gcd(const LaurentPoly1& a, const LaurentPoly1& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  auto to_big = [](const LaurentPoly1& p) {
    detail::BigPoly out;
    for (auto c : p.dense()) out.emplace_back(c);
    return out;
  };
  detail::BigPoly A = to_big(a), B = to_big(b);
  const detail::BigInt c = boost::multiprecision::gcd(detail::content(A), detail::content(B));
  A = detail::primitive_part(std::move(A));
  B = detail::primitive_part(std::move(B));
  if (A.size() < B.size()) std::swap(A, B);
  while (!B.empty()) {
    detail::BigPoly r = detail::pseudo_remainder(A, B);
    A = std::move(B);
    B = detail::primitive_part(std::move(r));
  }
  A = detail::primitive_part(std::move(A));
  std::vector<std::int64_t> coeffs;
  coeffs.reserve(A.size());
  for (auto& v : A) {
    const detail::BigInt scaled = v * c;
    if (scaled > std::numeric_limits<std::int64_t>::max() ||
        scaled < std::numeric_limits<std::int64_t>::min()) {
      throw Error(ErrorCode::Overflow, "gcd coefficient exceeds 64 bits");
    }
    coeffs.push_back(static_cast<std::int64_t>(scaled));
  }
  return LaurentPoly1::from_dense(coeffs).normalized();
}

/// Exact quotient of a by T^N - 1 (N >= 1); throws InexactDivision otherwise.
inline LaurentPoly1 divide_by_binomial(const LaurentPoly1& a, std::int64_t N) {
  if (N < 1) throw Error(ErrorCode::InvalidInput, "binomial degree must be positive");
  if (a.is_zero()) return {};
  const auto f = a.dense();
  const auto d = static_cast<std::int64_t>(f.size()) - 1;
  if (d < N) throw Error(ErrorCode::InexactDivision, "degree below divisor degree");
  // h (T^N - 1) = f  <=>  f_k = h_{k-N} - h_k.
  std::vector<std::int64_t> h(static_cast<std::size_t>(d - N + 1), 0);
  auto at = [&](std::int64_t k) { return k < 0 ? std::int64_t{0} : h[static_cast<std::size_t>(k)]; };
  for (std::int64_t k = 0; k <= d - N; ++k)
    h[static_cast<std::size_t>(k)] = checked::sub(at(k - N), f[static_cast<std::size_t>(k)]);
  for (std::int64_t k = d - N + 1; k <= d; ++k) {
    if (f[static_cast<std::size_t>(k)] != at(k - N))
      throw Error(ErrorCode::InexactDivision, "T^N - 1 does not divide the polynomial");
  }
  return LaurentPoly1::from_dense(h, a.low_exponent());
}

}  // namespace kfk
