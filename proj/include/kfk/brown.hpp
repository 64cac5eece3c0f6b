#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kfk/checked.hpp"
#include "kfk/word.hpp"

namespace kfk {

/// A homomorphism from the free group on x, y to Z, phi(x) = wx, phi(y) = wy.
struct WeightHom {
  std::int64_t wx = 0;
  std::int64_t wy = 0;

  std::int64_t operator()(Letter l) const noexcept {
    switch (l) {
      case Letter::x: return wx;
      case Letter::X: return -wx;
      case Letter::y: return wy;
      case Letter::Y: return -wy;
    }
    return 0;
  }

  WeightHom negated() const { return {checked::neg(wx), checked::neg(wy)}; }

  friend bool operator==(const WeightHom&, const WeightHom&) = default;
};

/// Certificate for Brown's criterion. Positions are 1-based indices into
/// prefix_values.
struct BrownVerdict {
  bool kernel_fg = false;
  std::vector<std::int64_t> prefix_values;
  std::int64_t max_value = 0;
  std::vector<std::size_t> max_positions;
  std::int64_t min_value = 0;
  std::vector<std::size_t> min_positions;

  friend bool operator==(const BrownVerdict&, const BrownVerdict&) = default;
};

/// v_i = phi(R_1 ... R_i) for i = 1..m. Indexing by the prefix that ends at
/// letter i; since the total is 0 this attains the same values, with the
/// same multiplicities, as the proper initial segments R_1 ... R_{i-1}.
inline std::vector<std::int64_t> prefix_values(const Word& word, const WeightHom& hom) {
  std::vector<std::int64_t> values;
  values.reserve(word.size());
  std::int64_t acc = 0;
  for (auto l : word) {
    acc = checked::add(acc, hom(l));
    values.push_back(acc);
  }
  if (acc != 0) throw Error(ErrorCode::NonzeroTotal, "relator has nonzero total weight");
  return values;
}

/// Brown's criterion for G = <x, y | R> and phi nonzero on both generators:
/// ker(phi) is finitely generated iff the prefix values attain their maximum
/// and minimum exactly once each.
inline BrownVerdict brown_criterion(const Word& word, const WeightHom& hom) {
  if (hom.wx == 0 || hom.wy == 0) {
    throw Error(ErrorCode::NonzeroWeightRequired, "phi(x) and phi(y) must both be nonzero");
  }
  if (word.empty()) throw Error(ErrorCode::TrivialRelator, "empty relator");
  if (!word.is_cyclically_reduced()) {
    throw Error(ErrorCode::NotCyclicallyReduced, "relator " + word.str() + " is not cyclically reduced");
  }

  BrownVerdict v;
  v.prefix_values = prefix_values(word, hom);
  const auto [lo, hi] = std::minmax_element(v.prefix_values.begin(), v.prefix_values.end());
  v.max_value = *hi;
  v.min_value = *lo;
  for (std::size_t i = 0; i < v.prefix_values.size(); ++i) {
    if (v.prefix_values[i] == v.max_value) v.max_positions.push_back(i + 1);
    if (v.prefix_values[i] == v.min_value) v.min_positions.push_back(i + 1);
  }
  v.kernel_fg = v.max_positions.size() == 1 && v.min_positions.size() == 1;
  return v;
}

}  // namespace kfk
