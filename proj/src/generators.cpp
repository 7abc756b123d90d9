#include "jrp/generators.hpp"

#include <cmath>
#include <random>

namespace jrp {

namespace {

retailer_params make_retailer(int id, double k, double h, double d) {
  retailer_params r;
  r.id = id;
  r.minor_setup = k;
  r.holding_rate = h;
  r.demand_rate = d;
  return r;
}

// Top 53 bits of the raw draw; identical on every conforming platform.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo * std::exp(unit_draw(rng) * std::log(hi / lo));
}

}  // namespace

instance gen_symmetric_poa(std::size_t n) {
  if (n < 2) throw validation_error("symmetric family needs at least two retailers");
  instance inst;
  inst.base = 1.0;
  inst.major_setup = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    inst.retailers.push_back(make_retailer(static_cast<int>(i) + 1, 0.0, 1.0, 2.0));
  }
  validate_instance(inst);
  return inst;
}

std::pair<instance, instance> gen_k_private_pair() {
  instance first;
  first.base = 1.0;
  first.major_setup = 5.0;
  first.retailers = {make_retailer(1, 1.0, 1.0, 2.0), make_retailer(2, 6.0, 1.0, 2.0)};
  instance second = first;
  second.retailers[0].minor_setup = 6.0;
  second.retailers[1].minor_setup = 1.0;
  validate_instance(first);
  validate_instance(second);
  return {first, second};
}

instance gen_adaptive_h(const std::vector<double>& ascending_weights) {
  if (ascending_weights.empty()) throw validation_error("adaptive family needs weights");
  instance inst;
  inst.base = 1.0;
  inst.major_setup = 1.0;
  double prefix = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < ascending_weights.size(); ++i) {
    const double w = ascending_weights[i];
    if (!(w > 0.0)) throw validation_error("adaptive weights must be positive");
    if (w < prev) throw validation_error("adaptive weights must be ascending");
    prev = w;
    prefix += w;
    inst.retailers.push_back(make_retailer(static_cast<int>(i) + 1, 0.0, w / prefix, 2.0));
  }
  validate_instance(inst);
  return inst;
}

instance gen_random(std::size_t n, const random_ranges& ranges, std::uint64_t seed) {
  if (n < 1) throw validation_error("random instance needs at least one retailer");
  if (!(ranges.k0_lo > 0.0 && ranges.k0_hi >= ranges.k0_lo) ||
      !(ranges.k_lo > 0.0 && ranges.k_hi >= ranges.k_lo) ||
      !(ranges.h_lo > 0.0 && ranges.h_hi >= ranges.h_lo) ||
      !(ranges.d_lo > 0.0 && ranges.d_hi >= ranges.d_lo) ||
      !(ranges.k_zero_prob >= 0.0 && ranges.k_zero_prob <= 1.0)) {
    throw validation_error("invalid generator ranges");
  }

  std::mt19937_64 rng(seed);
  instance inst;
  inst.base = 1.0;
  inst.major_setup = log_uniform(rng, ranges.k0_lo, ranges.k0_hi);
  for (std::size_t i = 0; i < n; ++i) {
    const bool zero_minor = unit_draw(rng) < ranges.k_zero_prob;
    const double k = log_uniform(rng, ranges.k_lo, ranges.k_hi);
    const double h = log_uniform(rng, ranges.h_lo, ranges.h_hi);
    const double d = log_uniform(rng, ranges.d_lo, ranges.d_hi);
    inst.retailers.push_back(make_retailer(static_cast<int>(i) + 1, zero_minor ? 0.0 : k, h, d));
  }
  validate_instance(inst);
  return inst;
}

}  // namespace jrp
