#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "kfk/checked.hpp"
#include "kfk/word.hpp"

namespace kfk {

/// A 1-bridge braid sigma_{b-1} ... sigma_0 delta^t on n strands in a solid
/// torus. t only matters mod n (delta^n is central) and is stored in [0, n).
class BraidParams {
 public:
  BraidParams(std::int64_t n, std::int64_t b, std::int64_t t) {
    if (n < 2) throw Error(ErrorCode::InvalidInput, "braid index must be >= 2");
    if (b < 1 || b > n - 1) throw Error(ErrorCode::InvalidInput, "bridge index must lie in [1, n-1]");
    n_ = n;
    b_ = b;
    t_ = checked::mod(t, n);
  }

  std::int64_t n() const noexcept { return n_; }
  std::int64_t b() const noexcept { return b_; }
  std::int64_t t() const noexcept { return t_; }

  friend bool operator==(const BraidParams&, const BraidParams&) = default;
  friend auto operator<=>(const BraidParams&, const BraidParams&) = default;
  friend std::ostream& operator<<(std::ostream& os, const BraidParams& p) {
    return os << "(n=" << p.n_ << ",b=" << p.b_ << ",t=" << p.t_ << ')';
  }

 private:
  std::int64_t n_, b_, t_;
};

/// A permutation of {0, ..., n-1}, images[a] = pi(a).
struct Perm {
  std::vector<std::int64_t> images;

  std::size_t size() const noexcept { return images.size(); }
  std::int64_t operator()(std::int64_t a) const { return images[static_cast<std::size_t>(a)]; }

  bool is_bijection() const {
    std::vector<bool> seen(images.size(), false);
    for (auto v : images) {
      if (v < 0 || static_cast<std::size_t>(v) >= images.size() || seen[static_cast<std::size_t>(v)])
        return false;
      seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
  }

  /// Length of the cycle through a.
  std::size_t cycle_length(std::int64_t a) const {
    std::size_t len = 1;
    for (auto v = (*this)(a); v != a; v = (*this)(v)) ++len;
    return len;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
};

/// Strand permutation of the braid: a -> a+t+1 below the bridge, b -> t,
/// a -> a+t above it (all mod n).
inline Perm permutation(const BraidParams& params) {
  const auto n = params.n(), b = params.b(), t = params.t();
  Perm pi;
  pi.images.resize(static_cast<std::size_t>(n));
  for (std::int64_t a = 0; a < n; ++a) {
    std::int64_t image;
    if (a < b) {
      image = (a + t + 1) % n;
    } else if (a == b) {
      image = t;
    } else {
      image = (a + t) % n;
    }
    pi.images[static_cast<std::size_t>(a)] = image;
  }
  return pi;
}

/// The closed braid is a knot iff its permutation is a single n-cycle.
inline bool is_knot(const BraidParams& params) {
  return permutation(params).cycle_length(0) == static_cast<std::size_t>(params.n());
}

/// w = w_1 ... w_{n-1}, w_j = y if pi^j(b) < b and x if pi^j(b) > b.
inline Word strand_word(const BraidParams& params) {
  if (!is_knot(params)) throw Error(ErrorCode::NotAKnot, "braid closure is not a knot");
  const Perm pi = permutation(params);
  Word w;
  std::int64_t a = params.b();
  for (std::int64_t j = 1; j < params.n(); ++j) {
    a = pi(a);
    w.push_back(a < params.b() ? Letter::y : Letter::x);
  }
  return w;
}

/// Relator R = y w x y^-1 w^-1 x^-1 of the exterior's fundamental group
/// <x, y | R>. Length 2n+2, cyclically reduced, zero exponent sums.
inline Word relator(const BraidParams& params) {
  const Word w = strand_word(params);
  Word r;
  r.push_back(Letter::y);
  r.append(w);
  r.push_back(Letter::x);
  r.push_back(Letter::Y);
  r.append(w.inverse());
  r.push_back(Letter::X);
  return r;
}

/// All knotted parameter triples with n in [2, max_n], in lexicographic
/// (n, b, t) order.
inline std::vector<BraidParams> knotted_braids(std::int64_t max_n) {
  std::vector<BraidParams> out;
  for (std::int64_t n = 2; n <= max_n; ++n)
    for (std::int64_t b = 1; b < n; ++b)
      for (std::int64_t t = 0; t < n; ++t) {
        BraidParams params(n, b, t);
        if (is_knot(params)) out.push_back(params);
      }
  return out;
}

}  // namespace kfk
