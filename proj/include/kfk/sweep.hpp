#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <iterator>
#include <optional>
#include <ostream>
#include <set>
#include <thread>
#include <vector>

#include "kfk/alexander.hpp"
#include "kfk/braid.hpp"
#include "kfk/fibration.hpp"

namespace kfk {

/// Exhaustive fibration check over all knotted (n, b, t) with n <= max_n and
/// all admissible slopes 1 <= p <= max_slope, |q| <= max_slope.
struct SweepConfig {
  std::int64_t max_n = 12;
  std::int64_t max_slope = 15;
  unsigned threads = 1;
  bool check_alexander = true;
};

struct SweepRow {
  std::int64_t n = 0, b = 0, t = 0, p = 0, q = 0;
  WeightHom weight;
  std::vector<std::size_t> max_positions;
  std::vector<std::size_t> min_positions;
  bool fibred = false;
  bool mixed_sign = false;
  bool localized = true;        // only meaningful when mixed_sign
  bool distinct_mod_n = true;   // only meaningful when mixed_sign
  std::optional<bool> alexander_monic;
  std::int64_t alexander_span = 0;
};

struct SweepSummary {
  std::size_t braids = 0;
  std::size_t cases = 0;
  std::size_t fibred = 0;
  std::size_t falsifications = 0;
  std::size_t skipped_zero_weight = 0;
  std::size_t mixed_sign_cases = 0;
  std::size_t localization_violations = 0;
  std::size_t modular_violations = 0;
  std::size_t fox_identity_violations = 0;
  std::size_t alexander_checked = 0;
  std::size_t alexander_agreements = 0;
  std::vector<SweepRow> rows;  // lexicographic in (n, b, t, p, q)
};

/// When wx < 0 < wy: max positions within {1..n}, min positions within
/// {n+2..2n+1}.
inline bool mixed_sign_localized(const BrownVerdict& v, std::int64_t n) {
  const auto un = static_cast<std::size_t>(n);
  for (auto i : v.max_positions)
    if (i < 1 || i > un) return false;
  for (auto i : v.min_positions)
    if (i < un + 2 || i > 2 * un + 1) return false;
  return true;
}

/// Values at positions [first, last] (1-based) are pairwise distinct mod n.
inline bool distinct_mod_n(const std::vector<std::int64_t>& values, std::size_t first,
                           std::size_t last, std::int64_t n) {
  std::set<std::int64_t> seen;
  for (std::size_t i = first; i <= last; ++i)
    if (!seen.insert(checked::mod(values[i - 1], n)).second) return false;
  return true;
}

namespace detail {

inline void sweep_braid(const BraidParams& params, const SweepConfig& cfg, SweepSummary& out) {
  const Word rel = relator(params);
  if (!fox_identity_residual(rel).is_zero()) ++out.fox_identity_violations;
  const auto n = params.n();
  const auto un = static_cast<std::size_t>(n);
  for (std::int64_t p = 1; p <= cfg.max_slope; ++p) {
    if (checked::gcd(p, n) != 1) continue;
    for (std::int64_t q = -cfg.max_slope; q <= cfg.max_slope; ++q) {
      if (checked::gcd(p, q) != 1) continue;
      const Slope r(p, q);
      FibrationVerdict v;
      try {
        v = evaluate_fibration(params, r);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroWeight) throw;
        ++out.skipped_zero_weight;
        continue;
      }
      SweepRow row;
      row.n = n;
      row.b = params.b();
      row.t = params.t();
      row.p = p;
      row.q = q;
      row.weight = v.weight;
      row.max_positions = v.brown.max_positions;
      row.min_positions = v.brown.min_positions;
      row.fibred = v.fibred;
      ++out.cases;
      if (v.fibred) {
        ++out.fibred;
      } else {
        ++out.falsifications;
      }
      row.mixed_sign = v.weight.wx < 0 && 0 < v.weight.wy;
      if (row.mixed_sign) {
        ++out.mixed_sign_cases;
        row.localized = mixed_sign_localized(v.brown, n);
        row.distinct_mod_n = distinct_mod_n(v.brown.prefix_values, 1, un, n) &&
                             distinct_mod_n(v.brown.prefix_values, un + 2, 2 * un + 1, n);
        if (!row.localized) ++out.localization_violations;
        if (!row.distinct_mod_n) ++out.modular_violations;
      }
      if (cfg.check_alexander) {
        const LaurentPoly1 delta = alexander_specialized(rel, v.weight);
        ++out.alexander_checked;
        row.alexander_monic = !delta.is_zero() && monic_check(delta);
        row.alexander_span = delta.span();
        if (*row.alexander_monic == row.fibred) ++out.alexander_agreements;
      }
      out.rows.push_back(std::move(row));
    }
  }
}

inline void merge_into(SweepSummary& total, SweepSummary&& part) {
  total.cases += part.cases;
  total.fibred += part.fibred;
  total.falsifications += part.falsifications;
  total.skipped_zero_weight += part.skipped_zero_weight;
  total.mixed_sign_cases += part.mixed_sign_cases;
  total.localization_violations += part.localization_violations;
  total.modular_violations += part.modular_violations;
  total.fox_identity_violations += part.fox_identity_violations;
  total.alexander_checked += part.alexander_checked;
  total.alexander_agreements += part.alexander_agreements;
  std::move(part.rows.begin(), part.rows.end(), std::back_inserter(total.rows));
}

}  // namespace detail

/// Braids are distributed over worker threads; per-braid results are merged
/// in braid order, so the output does not depend on the thread count.
inline SweepSummary run_sweep(const SweepConfig& cfg) {
  if (cfg.max_n < 2) throw Error(ErrorCode::InvalidInput, "max_n must be >= 2");
  if (cfg.max_slope < 1) throw Error(ErrorCode::InvalidInput, "max_slope must be >= 1");
  const auto braids = knotted_braids(cfg.max_n);
  std::vector<SweepSummary> parts(braids.size());
  std::atomic<std::size_t> next{0};
  const unsigned threads = std::max(1u, cfg.threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < threads; ++k) {
    pool.emplace_back([&, k] {
      try {
        for (std::size_t i = next++; i < braids.size(); i = next++)
          detail::sweep_braid(braids[i], cfg, parts[i]);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  try {
    for (std::size_t i = next++; i < braids.size(); i = next++)
      detail::sweep_braid(braids[i], cfg, parts[i]);
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SweepSummary total;
  total.braids = braids.size();
  for (auto& part : parts) detail::merge_into(total, std::move(part));
  return total;
}

inline void write_csv(std::ostream& os, const SweepSummary& summary) {
  auto join = [&](const std::vector<std::size_t>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ";" : "") << v[i];
  };
  os << "n,b,t,p,q,wx,wy,max_pos,min_pos,fibred\n";
  for (const auto& r : summary.rows) {
    os << r.n << ',' << r.b << ',' << r.t << ',' << r.p << ',' << r.q << ',' << r.weight.wx << ','
       << r.weight.wy << ',';
    join(r.max_positions);
    os << ',';
    join(r.min_positions);
    os << ',' << (r.fibred ? "true" : "false") << '\n';
  }
}

}  // namespace kfk
