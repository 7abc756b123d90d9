#include "jrp/pot.hpp"

#include <algorithm>
#include <cmath>

#include "jrp/centralized.hpp"

namespace jrp {

namespace {

// Containment checks in squared form so the sqrt(2) boundaries need no
// irrational constant: a <= sqrt(2)*b  <=>  a^2 <= 2*b^2 and
// a > b/sqrt(2)  <=>  2*a^2 > b^2, with a = 2^z exact.
bool upper_ok(int z, double r) { return std::ldexp(1.0, 2 * z) <= 2.0 * r * r; }
bool lower_ok(int z, double r) { return std::ldexp(1.0, 2 * z + 1) > r * r; }

}  // namespace

pot_interval pot_round(double b, double base) {
  if (!(b > 0.0)) throw validation_error("pot_round requires a positive value");
  if (!(base > 0.0)) throw validation_error("pot_round requires a positive base");
  const double r = b / base;
  int z = static_cast<int>(std::floor(std::log2(r) + 0.5));
  if (std::abs(z) < 500) {
    // log2 can land a hair on the wrong side of an integer; the window
    // (r/sqrt2, sqrt2*r] contains exactly one power of two, so at most one
    // step fixes it.
    while (!upper_ok(z, r)) --z;
    while (!lower_ok(z, r)) ++z;
  }
  return pot_interval{z};
}

int pot_floor(double x, double base) {
  if (!(x > 0.0)) throw validation_error("pot_floor requires a positive value");
  if (!(base > 0.0)) throw validation_error("pot_floor requires a positive base");
  const double r = x / base;
  int z = static_cast<int>(std::floor(std::log2(r)));
  if (std::abs(z) < 900) {
    while (std::ldexp(1.0, z) > r) --z;
    while (std::ldexp(1.0, z + 1) <= r) ++z;
  }
  return z;
}

int policy::min_exponent() const {
  return *std::min_element(exps.begin(), exps.end());
}

strategy_set make_strategy_set(const instance& inst, const std::vector<double>& weights,
                               int zero_weight_clamp) {
  const std::size_t n = inst.size();
  if (weights.size() != n) throw validation_error("one weight per retailer required");
  double total_weight = 0.0;
  for (double w : weights) total_weight += w;

  strategy_set gamma;
  gamma.ranges.resize(n);

  // The centralized exponents are only needed for the degenerate
  // zero-weight, zero-minor-setup floor; computed lazily.
  policy tc;
  auto centralized_exponent = [&](std::size_t i) {
    if (tc.exps.empty()) tc = centralized_policy(inst);
    return tc.exps[i];
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = inst.retailers[i];
    const double h_slope = r.holding_slope();
    const double hi_value = std::sqrt(2.0 * (inst.major_setup + r.minor_setup) / h_slope);
    const int hi = pot_floor(hi_value, inst.base);

    double min_share;
    if (total_weight > 0.0) {
      min_share = weights[i] / total_weight;
    } else {
      min_share = 1.0 / static_cast<double>(n);  // all-zero weights split equally
    }

    int lo;
    const double floor_setup = r.minor_setup + min_share * inst.major_setup;
    if (floor_setup > 0.0) {
      lo = pot_floor(std::sqrt(floor_setup / (2.0 * h_slope)), inst.base);
    } else {
      lo = centralized_exponent(i) - zero_weight_clamp;
    }

    if (lo > hi) throw std::logic_error("strategy set empty, bound inversion");
    gamma.ranges[i] = strategy_range{lo, hi};
  }
  return gamma;
}

}  // namespace jrp
