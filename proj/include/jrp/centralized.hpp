#pragma once

#include <cstddef>
#include <vector>

#include "jrp/instance.hpp"
#include "jrp/pot.hpp"

namespace jrp {

/// Result of splitting the retailers into the joint-order group U and the
/// individual-EOQ group V. Retailers in U share one interval near
/// sqrt(critical_ratio); retailers in V follow their own EOQ interval as if
/// the major setup did not exist. The split is characterized pointwise by
/// K_i <= s*H_i  <=>  i in U.
struct uv_partition {
  std::vector<std::size_t> joint;       // U, positions in instance order
  std::vector<std::size_t> individual;  // V, positions in instance order
  double critical_ratio = 0.0;          // s = (K0 + K(U)) / H(U), time^2
  std::size_t i_star = 0;               // |U|: last joint retailer in the K/H ordering
  std::vector<std::size_t> ratio_order; // positions sorted by K_i/H_i ascending, ties by id
};

/// Computes the partition by scanning retailers in ascending K_i/H_i order
/// and keeping the longest prefix whose pooled ratio stays at or above the
/// prefix member's own ratio. O(n log n).
uv_partition partition_uv(const instance& inst);

/// Exhaustive reference for the critical ratio: minimum of
/// (K0 + K(S)) / H(S) over all nonempty subsets S. Throws budget_error when
/// n exceeds max_n.
double s_oracle(const instance& inst, std::size_t max_n = 20);

/// Optimal centralized power-of-two policy: retailers in U round
/// sqrt(s), retailers in V round sqrt(K_i/H_i), each independently.
policy centralized_policy(const instance& inst);

}  // namespace jrp
