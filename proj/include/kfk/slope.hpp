#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <tuple>
#include <vector>

#include "kfk/checked.hpp"

namespace kfk {

/// A slope on a torus: the +/- class of a primitive element p*mu + q*lambda
/// of H_1(T). Stored in canonical form, p > 0 or (p, q) == (0, 1).
class Slope {
 public:
  /// Builds the canonical representative of +/-(p, q). Throws InvalidInput
  /// unless gcd(|p|, |q|) == 1.
  Slope(std::int64_t p, std::int64_t q) {
    if (checked::gcd(p, q) != 1) {
      throw Error(ErrorCode::InvalidInput, "slope coordinates must be coprime");
    }
    if (p < 0 || (p == 0 && q < 0)) {
      p = checked::neg(p);
      q = checked::neg(q);
    }
    p_ = p;
    q_ = q;
  }

  static Slope meridian() { return {1, 0}; }
  static Slope longitude() { return {0, 1}; }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Slope& s) {
    return os << '(' << s.p_ << ',' << s.q_ << ')';
  }

 private:
  std::int64_t p_ = 1;
  std::int64_t q_ = 0;
};

/// +1 or -1.
class Sign {
 public:
  constexpr explicit Sign(int value) : value_(value) {
    if (value != 1 && value != -1) throw Error(ErrorCode::InvalidInput, "sign must be +1 or -1");
  }
  static constexpr Sign plus() { return Sign(1); }
  static constexpr Sign minus() { return Sign(-1); }
  constexpr int value() const noexcept { return value_; }
  friend constexpr bool operator==(Sign, Sign) = default;

 private:
  int value_;
};

/// Geometric intersection number |p1 q2 - p2 q1|.
inline std::int64_t distance(const Slope& r1, const Slope& r2) {
  return checked::abs(
      checked::sub(checked::mul(r1.p(), r2.q()), checked::mul(r2.p(), r1.q())));
}

/// Image of r under an orientation-reversing involution acting on the cusp
/// basis by mu -> -eps*mu, lambda -> eps*lambda.
inline Slope involution_image(const Slope& r, Sign eps) {
  return {checked::mul(-eps.value(), r.p()), checked::mul(eps.value(), r.q())};
}

/// Delta(r, theta(r)) = 2|pq|, independent of eps.
inline std::int64_t involution_distance(const Slope& r) {
  return checked::mul(2, checked::abs(checked::mul(r.p(), r.q())));
}

/// All canonical slopes with |p|, |q| <= bound, ordered by (max(|p|,|q|), p,
/// |q|, q descending). The order is part of the contract: it decides the
/// witness returned by max_close_clique.
inline std::vector<Slope> canonical_slopes(std::int64_t bound) {
  std::vector<Slope> out;
  if (bound < 1) return out;
  out.emplace_back(0, 1);
  for (std::int64_t p = 1; p <= bound; ++p) {
    for (std::int64_t q = -bound; q <= bound; ++q) {
      if (checked::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  auto key = [](const Slope& s) {
    const std::int64_t h = std::max(s.p(), checked::abs(s.q()));
    return std::tuple(h, s.p(), checked::abs(s.q()), -s.q());
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const Slope& a, const Slope& b) { return key(a) < key(b); });
  return out;
}

struct CliqueResult {
  std::size_t size = 0;
  std::vector<Slope> witness;
};

/// Largest set of canonical slopes with |p|, |q| <= bound that are pairwise
/// at distance <= 1, by exhaustive Bron-Kerbosch search.
inline CliqueResult max_close_clique(std::int64_t bound) {
  if (bound < 1) throw Error(ErrorCode::InvalidInput, "clique bound must be >= 1");
  const auto slopes = canonical_slopes(bound);
  const std::size_t count = slopes.size();
  std::vector<std::vector<std::size_t>> adj(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (distance(slopes[i], slopes[j]) <= 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }
  }

  std::vector<std::size_t> best;
  std::vector<std::size_t> current;
  auto adjacent = [&](std::size_t u, std::size_t v) {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
  };
  for (auto& row : adj) std::sort(row.begin(), row.end());

  // Candidates are kept in ascending index order so the first maximum found
  // is the lexicographically smallest one.
  auto expand = [&](auto&& self, std::vector<std::size_t> cand,
                    std::vector<std::size_t> excluded) -> void {
    if (cand.empty() && excluded.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + cand.size() <= best.size()) return;
    while (!cand.empty()) {
      const std::size_t v = cand.front();
      cand.erase(cand.begin());
      std::vector<std::size_t> next_cand, next_excl;
      for (auto u : cand)
        if (adjacent(u, v)) next_cand.push_back(u);
      for (auto u : excluded)
        if (adjacent(u, v)) next_excl.push_back(u);
      current.push_back(v);
      self(self, std::move(next_cand), std::move(next_excl));
      current.pop_back();
      excluded.push_back(v);
    }
  };
  std::vector<std::size_t> all(count);
  std::iota(all.begin(), all.end(), std::size_t{0});
  expand(expand, std::move(all), {});

  CliqueResult result;
  result.size = best.size();
  for (auto i : best) result.witness.push_back(slopes[i]);
  return result;
}

}  // namespace kfk
