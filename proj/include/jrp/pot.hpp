#pragma once

#include <cmath>
#include <vector>

#include "jrp/instance.hpp"

namespace jrp {

/// A power-of-two replenishment interval, stored as the integer exponent z
/// with value = base * 2^z. Keeping the exponent exact means interval
/// comparisons (coalition membership, policy ordering) never touch floating
/// point.
struct pot_interval {
  int exponent = 0;
  double value(double base) const { return std::ldexp(base, exponent); }
};

inline double pot_value(double base, int exponent) { return std::ldexp(base, exponent); }

/// Rounds b to the multiplicatively nearest power-of-two multiple of base:
/// exponent = floor(log2(b/base) + 1/2). The returned interval a satisfies
/// a in (b/sqrt(2), sqrt(2)*b]; the upper boundary is closed. Throws
/// validation_error for b <= 0.
pot_interval pot_round(double b, double base);

/// Largest exponent z with base * 2^z <= x. Throws validation_error for
/// x <= 0.
int pot_floor(double x, double base);

/// One interval per retailer, aligned with instance order.
struct policy {
  std::vector<int> exps;

  std::size_t size() const { return exps.size(); }
  int min_exponent() const;
  bool operator==(const policy&) const = default;
};

/// Inclusive exponent range of admissible intervals for one retailer.
struct strategy_range {
  int lo = 0;
  int hi = 0;

  int width() const { return hi - lo; }
  bool contains(int z) const { return lo <= z && z <= hi; }
};

/// Admissible interval exponents per retailer. The upper bound is the
/// largest interval a retailer could ever prefer even when paying the whole
/// major setup; the lower bound prunes intervals it would never halve into
/// given its minimum possible share of the major setup.
struct strategy_set {
  std::vector<strategy_range> ranges;

  std::size_t size() const { return ranges.size(); }
};

/// Builds the strategy set for the given weights. The minimum possible share
/// m_i is w_i / sum(w) for positive-weight retailers, 0 for zero-weight
/// retailers when some weight is positive, and 1/n when all weights vanish.
/// When K_i + m_i*K0 degenerates to zero the lower bound falls back to the
/// retailer's centralized exponent minus zero_weight_clamp.
strategy_set make_strategy_set(const instance& inst, const std::vector<double>& weights,
                               int zero_weight_clamp = 4);

}  // namespace jrp
