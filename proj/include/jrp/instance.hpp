#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jrp {

struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// Cost parameters of one retailer. Holding cost grows linearly in the
/// replenishment interval with slope holding_slope() = h*d/2 (average stock
/// d*T/2 held at rate h).
struct retailer_params {
  int id = 0;
  double minor_setup = 0.0;   // paid once per order this retailer joins
  double holding_rate = 0.0;  // per item per unit time
  double demand_rate = 0.0;   // items per unit time

  double holding_slope() const { return 0.5 * holding_rate * demand_rate; }
};

/// A joint replenishment instance: the shared major setup cost, the base
/// planning period that all power-of-two intervals are measured against,
/// and the retailer list (order of the list is the canonical index order).
struct instance {
  double base = 1.0;
  double major_setup = 0.0;
  std::vector<retailer_params> retailers;

  std::size_t size() const { return retailers.size(); }

  /// Position of the retailer with the given id; throws validation_error
  /// if the id is unknown.
  std::size_t position_of(int retailer_id) const;
};

/// Checks every sign and shape constraint (positive base, major setup,
/// holding and demand rates, nonnegative minor setups, nonempty retailer
/// list, unique ids). Throws validation_error naming the offending field.
void validate_instance(const instance& inst);

}  // namespace jrp
