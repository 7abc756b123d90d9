#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "jrp/centralized.hpp"
#include "jrp/cost.hpp"
#include "jrp/generators.hpp"
#include "jrp/instance.hpp"
#include "jrp/pot.hpp"

namespace jrp_test {

inline double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline jrp::instance b8_instance() { return jrp::gen_k_private_pair().first; }

inline jrp::instance random_instance(std::mt19937_64& rng, std::size_t max_n) {
  const std::size_t n = 1 + rng() % max_n;
  return jrp::gen_random(n, rng());
}

/// Nonnegative weights with at least one positive entry; zero_prob controls
/// how often a retailer is a free rider.
inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n,
                                          double zero_prob = 0.2) {
  std::vector<double> w(n, 0.0);
  bool any_positive = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (unit(rng) >= zero_prob) {
      w[i] = std::exp(unit(rng) * 4.0 - 2.0);
      any_positive = true;
    }
  }
  if (!any_positive) w[rng() % n] = 1.0;
  return w;
}

inline jrp::policy random_policy_in(const jrp::strategy_set& gamma, std::mt19937_64& rng) {
  jrp::policy pol;
  for (const auto& r : gamma.ranges) {
    pol.exps.push_back(r.lo + static_cast<int>(rng() % static_cast<std::uint64_t>(r.width() + 1)));
  }
  return pol;
}

/// Independent share oracle: walks the explicit order timeline over one
/// hyperperiod. At every multiple of T_min the participant set is everyone
/// whose interval divides the time point, and the major setup splits by
/// weight (equally in all-zero groups). Exponent span must stay modest.
inline std::vector<double> timeline_shares(const jrp::instance& inst,
                                           const std::vector<double>& weights,
                                           const jrp::policy& pol) {
  const std::size_t n = inst.size();
  int zmin = pol.exps[0], zmax = pol.exps[0];
  for (int z : pol.exps) {
    zmin = std::min(zmin, z);
    zmax = std::max(zmax, z);
  }
  const std::uint64_t steps = std::uint64_t{1} << (zmax - zmin);
  std::vector<double> pay(n, 0.0);
  for (std::uint64_t t = 0; t < steps; ++t) {
    double group_weight = 0.0;
    std::size_t group_size = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t period = std::uint64_t{1} << (pol.exps[j] - zmin);
      if (t % period == 0) {
        group_weight += weights[j];
        ++group_size;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t period = std::uint64_t{1} << (pol.exps[j] - zmin);
      if (t % period == 0) {
        pay[j] += jrp::share_fraction(weights[j], group_weight, group_size) * inst.major_setup;
      }
    }
  }
  const double hyperperiod = jrp::pot_value(inst.base, zmax);
  for (double& p : pay) p /= hyperperiod;
  return pay;
}

}  // namespace jrp_test
