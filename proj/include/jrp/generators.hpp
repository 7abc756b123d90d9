#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "jrp/instance.hpp"

namespace jrp {

/// n identical retailers with K0=1, K_i=0, h_i=1, d_i=2 (H_i=1), base 1.
/// The all-ones profile is an equilibrium of cost n+1 under every symmetric
/// rule while the centralized cost is about 3*sqrt(n)/sqrt(2), so the
/// anarchy ratio grows like sqrt(n). Requires n >= 2.
instance gen_symmetric_poa(std::size_t n);

/// Two-retailer pair with K0=5, unit H, base 1, minor setups (1,6) and
/// (6,1). The instances differ only in the private minor setups, so any rule
/// blind to them assigns both the same weights and loses at least 5% on one
/// of them.
std::pair<instance, instance> gen_k_private_pair();

/// Adversarial holding rates for a fixed weight vector: K0=1, K_i=0, d_i=2
/// and h_i = w_i / (w_1 + ... + w_i), so H_i = h_i. Weights must be positive
/// and ascending. With equal weights the holding rates are harmonic and the
/// stability gap grows like sqrt(ln n).
instance gen_adaptive_h(const std::vector<double>& ascending_weights);

/// Log-uniform parameter ranges for random instances. Minor setups get an
/// atom at zero so the degenerate strategy-floor path is exercised.
struct random_ranges {
  double k0_lo = 0.1, k0_hi = 100.0;
  double k_lo = 0.1, k_hi = 10.0;
  double h_lo = 0.1, h_hi = 10.0;
  double d_lo = 0.1, d_hi = 10.0;
  double k_zero_prob = 0.2;
};

/// Seed-deterministic random instance. Draws come from mt19937_64 mapped to
/// [0,1) via the top 53 bits, so the stream is identical on every platform;
/// the draw order is K0 first, then per retailer the zero-atom coin, the
/// minor setup, the holding rate and the demand rate.
instance gen_random(std::size_t n, const random_ranges& ranges, std::uint64_t seed);

inline instance gen_random(std::size_t n, std::uint64_t seed) {
  return gen_random(n, random_ranges{}, seed);
}

}  // namespace jrp
