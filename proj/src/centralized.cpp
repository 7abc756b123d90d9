#include "jrp/centralized.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace jrp {

namespace {

// K_a/H_a < K_b/H_b compared by cross products; H is always positive.
bool ratio_less(const retailer_params& a, const retailer_params& b) {
  const double lhs = a.minor_setup * b.holding_slope();
  const double rhs = b.minor_setup * a.holding_slope();
  if (lhs != rhs) return lhs < rhs;
  return a.id < b.id;
}

}  // namespace

uv_partition partition_uv(const instance& inst) {
  const std::size_t n = inst.size();
  uv_partition part;
  part.ratio_order.resize(n);
  std::iota(part.ratio_order.begin(), part.ratio_order.end(), std::size_t{0});
  std::sort(part.ratio_order.begin(), part.ratio_order.end(), [&](std::size_t a, std::size_t b) {
    return ratio_less(inst.retailers[a], inst.retailers[b]);
  });

  // i_star is the longest prefix (in K/H order) whose pooled ratio
  // (K0 + sum K) / (sum H) still covers the prefix member's own ratio.
  double prefix_k = 0.0;
  double prefix_h = 0.0;
  std::size_t i_star = 0;
  double k_at_star = 0.0;
  double h_at_star = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const auto& r = inst.retailers[part.ratio_order[j]];
    prefix_k += r.minor_setup;
    prefix_h += r.holding_slope();
    // (K0 + prefix_k)/prefix_h >= K_j/H_j, cross-multiplied
    if ((inst.major_setup + prefix_k) * r.holding_slope() >= r.minor_setup * prefix_h) {
      i_star = j + 1;
      k_at_star = prefix_k;
      h_at_star = prefix_h;
    }
  }

  part.i_star = i_star;
  part.critical_ratio = (inst.major_setup + k_at_star) / h_at_star;

  std::vector<bool> in_joint(n, false);
  for (std::size_t j = 0; j < i_star; ++j) in_joint[part.ratio_order[j]] = true;
  for (std::size_t i = 0; i < n; ++i) {
    (in_joint[i] ? part.joint : part.individual).push_back(i);
  }
  return part;
}

double s_oracle(const instance& inst, std::size_t max_n) {
  const std::size_t n = inst.size();
  if (n > max_n) {
    throw budget_error("s_oracle limited to " + std::to_string(max_n) + " retailers");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    double k = 0.0, h = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        k += inst.retailers[i].minor_setup;
        h += inst.retailers[i].holding_slope();
      }
    }
    best = std::min(best, (inst.major_setup + k) / h);
  }
  return best;
}

policy centralized_policy(const instance& inst) {
  const uv_partition part = partition_uv(inst);
  policy tc;
  tc.exps.resize(inst.size());
  const int joint_exp = pot_round(std::sqrt(part.critical_ratio), inst.base).exponent;
  for (std::size_t i : part.joint) tc.exps[i] = joint_exp;
  for (std::size_t i : part.individual) {
    const auto& r = inst.retailers[i];
    tc.exps[i] = pot_round(std::sqrt(r.minor_setup / r.holding_slope()), inst.base).exponent;
  }
  return tc;
}

}  // namespace jrp
