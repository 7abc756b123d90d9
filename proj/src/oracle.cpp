#include "jrp/oracle.hpp"

#include <algorithm>

#include "jrp/centralized.hpp"

namespace jrp {

bool is_nash(const instance& inst, const std::vector<double>& weights,
             const strategy_set& gamma, const policy& pol) {
  const std::size_t n = inst.size();
  policy probe = pol;
  for (std::size_t i = 0; i < n; ++i) {
    const double current = retailer_cost_at(inst, weights, pol, i);
    for (int z = gamma.ranges[i].lo; z <= gamma.ranges[i].hi; ++z) {
      if (z == pol.exps[i]) continue;
      probe.exps[i] = z;
      if (retailer_cost_at(inst, weights, probe, i) < current) return false;
    }
    probe.exps[i] = pol.exps[i];
  }
  return true;
}

equilibrium_set enumerate_nash(const instance& inst, const std::vector<double>& weights,
                               enumeration_mode mode, std::uint64_t budget) {
  const std::size_t n = inst.size();
  const strategy_set gamma = make_strategy_set(inst, weights);
  const policy tc = centralized_policy(inst);

  equilibrium_set set;
  set.mode = mode;
  set.domain.resize(n);
  std::uint64_t grid = 1;
  for (std::size_t i = 0; i < n; ++i) {
    strategy_range r = gamma.ranges[i];
    if (mode == enumeration_mode::pruned) {
      // No equilibrium lies below the centralized policy, so start there.
      r.lo = std::max(r.lo, tc.exps[i]);
    }
    set.domain[i] = r;
    const std::uint64_t width = static_cast<std::uint64_t>(r.width()) + 1;
    if (grid > budget / width) {
      throw budget_error("policy grid exceeds the oracle budget of " + std::to_string(budget));
    }
    grid *= width;
  }

  policy cur;
  cur.exps.resize(n);
  for (std::size_t i = 0; i < n; ++i) cur.exps[i] = set.domain[i].lo;
  for (;;) {
    ++set.policies_checked;
    if (is_nash(inst, weights, gamma, cur)) {
      set.equilibria.push_back({cur, breakdown(inst, weights, cur)});
    }
    // lexicographic odometer, last coordinate fastest
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur.exps[k] < set.domain[k].hi) {
        ++cur.exps[k];
        for (std::size_t j = k + 1; j < n; ++j) cur.exps[j] = set.domain[j].lo;
        break;
      }
      if (k == 0) {
        set.least = select_least(set);
        set.payoff_dominant = select_payoff_dominant(set);
        return set;
      }
    }
  }
}

std::optional<policy> select_least(const equilibrium_set& set) {
  for (const auto& cand : set.equilibria) {
    bool dominates = true;
    for (const auto& other : set.equilibria) {
      for (std::size_t i = 0; i < cand.pol.size(); ++i) {
        if (cand.pol.exps[i] > other.pol.exps[i]) {
          dominates = false;
          break;
        }
      }
      if (!dominates) break;
    }
    if (dominates) return cand.pol;
  }
  return std::nullopt;
}

std::optional<policy> select_payoff_dominant(const equilibrium_set& set) {
  for (const auto& cand : set.equilibria) {
    bool dominates = true;
    for (const auto& other : set.equilibria) {
      for (std::size_t i = 0; i < cand.pol.size(); ++i) {
        if (cand.costs.total[i] > other.costs.total[i]) {
          dominates = false;
          break;
        }
      }
      if (!dominates) break;
    }
    if (dominates) return cand.pol;
  }
  return std::nullopt;
}

}  // namespace jrp
