#include "jrp/cost.hpp"

#include <algorithm>
#include <numeric>

namespace jrp {

double share_fraction(double w_i, double group_weight, std::size_t group_size) {
  if (group_weight > 0.0) return w_i / group_weight;
  return 1.0 / static_cast<double>(group_size);
}

double system_cost(const instance& inst, const policy& pol) {
  double total = 0.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const auto& r = inst.retailers[i];
    const double t = pot_value(inst.base, pol.exps[i]);
    total += r.holding_slope() * t + r.minor_setup / t;
  }
  total += inst.major_setup / pot_value(inst.base, pol.min_exponent());
  return total;
}

std::vector<double> allocate_major(const instance& inst, const std::vector<double>& weights,
                                   const policy& pol) {
  const std::size_t n = inst.size();
  if (weights.size() != n || pol.size() != n) {
    throw validation_error("weights and policy must match the retailer count");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pol.exps[a] != pol.exps[b]) return pol.exps[a] < pol.exps[b];
    return inst.retailers[a].id < inst.retailers[b].id;
  });

  // Group tied intervals into levels; the cumulative coalition at each level
  // is everyone at or below it, and its total weight is nondecreasing, so
  // all-zero-weight coalitions form a prefix of the level list. Each
  // coalition weight is summed in instance position order, never in level
  // order, so equal coalitions produce bit-identical sums across policies.
  struct level {
    int exponent;
    std::size_t first, last;  // index range into `order`, inclusive
    double cum_weight;
    std::size_t cum_count;
  };
  std::vector<level> levels;
  for (std::size_t k = 0; k < n;) {
    std::size_t j = k;
    while (j + 1 < n && pol.exps[order[j + 1]] == pol.exps[order[k]]) ++j;
    double cum_w = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
      if (pol.exps[m] <= pol.exps[order[k]]) cum_w += weights[m];
    }
    levels.push_back({pol.exps[order[k]], k, j, cum_w, j + 1});
    k = j + 1;
  }

  // Walking levels top-down accumulates each retailer's share as
  //   x_i = w_i * sum_{levels above or at i, weight > 0} freq/W
  //       + sum_{levels above or at i, weight == 0} freq/|coalition|.
  std::vector<double> shares(n, 0.0);
  double acc_weighted = 0.0;
  double acc_equal = 0.0;
  for (std::size_t li = levels.size(); li-- > 0;) {
    const level& lv = levels[li];
    const double t = pot_value(inst.base, lv.exponent);
    const double next_inv =
        li + 1 < levels.size() ? 1.0 / pot_value(inst.base, levels[li + 1].exponent) : 0.0;
    const double freq = 1.0 / t - next_inv;
    if (lv.cum_weight > 0.0) {
      acc_weighted += freq / lv.cum_weight;
    } else {
      acc_equal += freq / static_cast<double>(lv.cum_count);
    }
    for (std::size_t m = lv.first; m <= lv.last; ++m) {
      const std::size_t i = order[m];
      shares[i] = inst.major_setup * (weights[i] * acc_weighted + acc_equal);
    }
  }
  return shares;
}

double major_share_at(const instance& inst, const std::vector<double>& weights,
                      const policy& pol, std::size_t pos) {
  return allocate_major(inst, weights, pol)[pos];
}

double retailer_cost_at(const instance& inst, const std::vector<double>& weights,
                        const policy& pol, std::size_t pos) {
  const auto& r = inst.retailers[pos];
  const double t = pot_value(inst.base, pol.exps[pos]);
  return r.holding_slope() * t + r.minor_setup / t + major_share_at(inst, weights, pol, pos);
}

double retailer_cost(const instance& inst, const std::vector<double>& weights,
                     const policy& pol, int retailer_id) {
  return retailer_cost_at(inst, weights, pol, inst.position_of(retailer_id));
}

cost_breakdown breakdown(const instance& inst, const std::vector<double>& weights,
                         const policy& pol) {
  const std::size_t n = inst.size();
  cost_breakdown out;
  out.holding.resize(n);
  out.minor.resize(n);
  out.major_share = allocate_major(inst, weights, pol);
  out.total.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = inst.retailers[i];
    const double t = pot_value(inst.base, pol.exps[i]);
    out.holding[i] = r.holding_slope() * t;
    out.minor[i] = r.minor_setup / t;
    out.total[i] = out.holding[i] + out.minor[i] + out.major_share[i];
  }
  out.system = system_cost(inst, pol);
  return out;
}

}  // namespace jrp
