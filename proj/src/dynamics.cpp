#include "jrp/dynamics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "jrp/centralized.hpp"

namespace jrp {

std::vector<std::size_t> coalition_below(const policy& pol, std::size_t pos) {
  std::vector<std::size_t> members;
  for (std::size_t j = 0; j < pol.size(); ++j) {
    if (pol.exps[j] <= pol.exps[pos]) members.push_back(j);
  }
  return members;
}

bool gain_by_doubling(const instance& inst, const std::vector<double>& weights,
                      const policy& pol, std::size_t pos) {
  double group_weight = 0.0;
  std::size_t group_size = 0;
  for (std::size_t j = 0; j < pol.size(); ++j) {
    if (pol.exps[j] <= pol.exps[pos]) {
      group_weight += weights[j];
      ++group_size;
    }
  }
  const auto& r = inst.retailers[pos];
  const double frac = share_fraction(weights[pos], group_weight, group_size);
  const double t = pot_value(inst.base, pol.exps[pos]);
  return 2.0 * r.holding_slope() * t * t < r.minor_setup + frac * inst.major_setup;
}

bool gain_by_halving(const instance& inst, const std::vector<double>& weights,
                     const strategy_set& gamma, const policy& pol, std::size_t pos) {
  const int half = pol.exps[pos] - 1;
  if (half < gamma.ranges[pos].lo) return false;
  // Coalition evaluated at the halved interval, with pos already moved down.
  double group_weight = weights[pos];
  std::size_t group_size = 1;
  for (std::size_t j = 0; j < pol.size(); ++j) {
    if (j != pos && pol.exps[j] <= half) {
      group_weight += weights[j];
      ++group_size;
    }
  }
  const auto& r = inst.retailers[pos];
  const double frac = share_fraction(weights[pos], group_weight, group_size);
  const double t = pot_value(inst.base, pol.exps[pos]);
  return r.holding_slope() * t * t > 2.0 * (r.minor_setup + frac * inst.major_setup);
}

namespace {

// Weight and headcount per exponent so coalition totals during a dynamics
// run cost O(span) instead of O(n). Removing a weight leaves floating-point
// residue in its bucket, so whether a coalition is all-zero-weight is
// decided by an exact count of positive-weight members, never by the sum.
struct exponent_histogram {
  int lo = 0;
  std::vector<double> weight;
  std::vector<int> count;
  std::vector<int> positive;

  explicit exponent_histogram(int lo_exp, int hi_exp)
      : lo(lo_exp), weight(static_cast<std::size_t>(hi_exp - lo_exp + 1), 0.0),
        count(weight.size(), 0), positive(weight.size(), 0) {}

  void add(int z, double w) {
    const std::size_t k = static_cast<std::size_t>(z - lo);
    weight[k] += w;
    ++count[k];
    if (w > 0.0) ++positive[k];
  }
  void remove(int z, double w) {
    const std::size_t k = static_cast<std::size_t>(z - lo);
    weight[k] -= w;
    --count[k];
    if (w > 0.0) --positive[k];
  }

  struct coalition {
    double weight = 0.0;
    std::size_t size = 0;
    bool has_positive = false;
  };

  coalition prefix(int z) const {
    coalition c;
    const std::size_t last = static_cast<std::size_t>(z - lo);
    for (std::size_t k = 0; k <= last; ++k) {
      c.weight += weight[k];
      c.size += static_cast<std::size_t>(count[k]);
      c.has_positive = c.has_positive || positive[k] > 0;
    }
    return c;
  }
};

double coalition_fraction(double w_i, const exponent_histogram::coalition& c) {
  if (c.has_positive) return w_i / c.weight;
  return 1.0 / static_cast<double>(c.size);
}

}  // namespace

dynamics_result run_dynamics(const instance& inst, const std::vector<double>& weights,
                             const std::vector<std::size_t>& order,
                             const dynamics_options& opts) {
  const std::size_t n = inst.size();
  if (order.size() != n) throw validation_error("update order must cover every retailer");
  if (weights.size() != n) throw validation_error("one weight per retailer required");

  const strategy_set gamma = make_strategy_set(inst, weights);
  dynamics_result res;
  res.final = centralized_policy(inst);
  policy& cur = res.final;

  int lo_all = cur.min_exponent();
  int hi_all = cur.exps[0];
  long total_width = 0;
  for (std::size_t i = 0; i < n; ++i) {
    lo_all = std::min({lo_all, gamma.ranges[i].lo, cur.exps[i]});
    hi_all = std::max({hi_all, gamma.ranges[i].hi, cur.exps[i]});
    total_width += gamma.ranges[i].hi - std::min(gamma.ranges[i].lo, cur.exps[i]);
  }

  exponent_histogram hist(lo_all, hi_all);
  for (std::size_t i = 0; i < n; ++i) hist.add(cur.exps[i], weights[i]);

  const int max_sweeps = static_cast<int>(total_width) + 2;
  for (int sweep = 1;; ++sweep) {
    if (sweep > max_sweeps) throw std::logic_error("dynamics failed to terminate");
    bool moved = false;
    for (std::size_t pos : order) {
      const auto& r = inst.retailers[pos];
      const int z = cur.exps[pos];
      const double t = pot_value(inst.base, z);

      if (opts.check_halving && z - 1 >= gamma.ranges[pos].lo) {
        auto below = hist.prefix(z - 1);  // pos itself sits at z, not in the prefix
        below.weight += weights[pos];
        below.size += 1;
        below.has_positive = below.has_positive || weights[pos] > 0.0;
        const double frac = coalition_fraction(weights[pos], below);
        if (r.holding_slope() * t * t > 2.0 * (r.minor_setup + frac * inst.major_setup)) {
          throw std::logic_error("halving opportunity during dynamics");
        }
      }

      const auto group = hist.prefix(z);
      const double frac = coalition_fraction(weights[pos], group);
      if (2.0 * r.holding_slope() * t * t < r.minor_setup + frac * inst.major_setup) {
        if (z + 1 > gamma.ranges[pos].hi) {
          throw std::logic_error("doubling would leave the strategy set");
        }
        hist.remove(z, weights[pos]);
        hist.add(z + 1, weights[pos]);
        cur.exps[pos] = z + 1;
        ++res.move_count;
        moved = true;
        if (opts.record_trace) {
          res.trace.moves.push_back({sweep, r.id, z, z + 1, move_kind::double_up});
        }
      }
    }
    res.sweeps = sweep;
    if (!moved) break;
  }
  res.trace.rounds = res.sweeps;
  return res;
}

policy wpsh_fast(const instance& inst) {
  const uv_partition part = partition_uv(inst);
  std::vector<double> weights(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) weights[i] = inst.retailers[i].holding_slope();

  policy cur = centralized_policy(inst);
  for (std::size_t k = part.ratio_order.size(); k-- > 0;) {
    const std::size_t pos = part.ratio_order[k];
    if (gain_by_doubling(inst, weights, cur, pos)) ++cur.exps[pos];
  }
  return cur;
}

std::vector<std::size_t> default_order(const instance& inst) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.retailers[a].id < inst.retailers[b].id;
  });
  return order;
}

std::vector<std::size_t> order_from_ids(const instance& inst, const std::vector<int>& ids) {
  if (ids.size() != inst.size()) throw validation_error("order must list every retailer id once");
  std::vector<std::size_t> order;
  std::vector<bool> used(inst.size(), false);
  for (int id : ids) {
    const std::size_t pos = inst.position_of(id);
    if (used[pos]) throw validation_error("order repeats retailer id " + std::to_string(id));
    used[pos] = true;
    order.push_back(pos);
  }
  return order;
}

std::vector<std::size_t> shuffled_order(const instance& inst, std::uint64_t seed) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng() % i]);
  }
  return order;
}

}  // namespace jrp
