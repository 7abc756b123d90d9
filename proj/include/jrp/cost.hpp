#pragma once

#include <cstddef>
#include <vector>

#include "jrp/instance.hpp"
#include "jrp/pot.hpp"

namespace jrp {

/// Fraction of a joint order's major setup paid by a member with weight w_i
/// when the whole group has total weight group_weight and group_size
/// members. Groups made entirely of zero-weight retailers split equally.
double share_fraction(double w_i, double group_weight, std::size_t group_size);

/// System average cost per unit time:
///   sum_i (H_i*T_i + K_i/T_i) + K0/T_min.
double system_cost(const instance& inst, const policy& pol);

/// Per-retailer major-setup shares x_i under weighted proportional sharing.
/// Retailers are ranked by interval (ties by id); the joint order at level m
/// has frequency 1/T_m - 1/T_{m+1} and is shared by everyone at or below
/// that level in proportion to their weights. Shares sum to K0/T_min.
std::vector<double> allocate_major(const instance& inst, const std::vector<double>& weights,
                                   const policy& pol);

/// Major share of a single retailer (by position); same value as the
/// corresponding allocate_major entry.
double major_share_at(const instance& inst, const std::vector<double>& weights,
                      const policy& pol, std::size_t pos);

/// Full cost of retailer at position pos: H_i*T_i + K_i/T_i + x_i.
double retailer_cost_at(const instance& inst, const std::vector<double>& weights,
                        const policy& pol, std::size_t pos);

/// Same, addressed by retailer id; throws validation_error for unknown ids.
double retailer_cost(const instance& inst, const std::vector<double>& weights,
                     const policy& pol, int retailer_id);

/// Per-retailer holding, minor-setup and major-share components plus totals.
struct cost_breakdown {
  std::vector<double> holding;
  std::vector<double> minor;
  std::vector<double> major_share;
  std::vector<double> total;  // f_i = holding + minor + major_share
  double system = 0.0;        // C(T)
};

cost_breakdown breakdown(const instance& inst, const std::vector<double>& weights,
                         const policy& pol);

}  // namespace jrp
