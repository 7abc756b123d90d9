#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jrp/instance.hpp"
#include "jrp/oracle.hpp"
#include "jrp/pot.hpp"
#include "jrp/rules.hpp"

namespace jrp {

enum class check_status { pass, fail, not_applicable };

struct bound_check {
  std::string name;
  double bound = 0.0;     // NaN when not applicable
  double measured = 0.0;
  check_status status = check_status::not_applicable;
};

struct efficiency_report {
  std::string instance_digest;
  rule_tag rule = rule_tag::equal;
  std::size_t n = 0;
  double cost_centralized = 0.0;
  double cost_dynamics = 0.0;
  double pos_algorithmic = 0.0;          // C(T^w) / C(T^c)
  std::optional<double> pos_empirical;   // min NE cost / C(T^c), oracle runs only
  std::optional<double> poa_empirical;   // max NE cost / C(T^c)
  double gamma_w = 1.0;                  // +infinity marks a zero-weight retailer
  double jump_ratio = 1.0;               // max_i T^w_i / T^c_i
  std::optional<double> eps_max;         // wps_hat only
  double base = 1.0;
  policy tc, tw;
  std::vector<bound_check> checks;
};

/// Measures one (instance, rule) pair: centralized cost, dynamics cost,
/// ratios, and optionally the full equilibrium enumeration for empirical
/// PoS/PoA. Bound checks are attached to the returned report.
efficiency_report efficiency(const instance& inst, const weight_vector& w, bool with_oracle,
                             std::uint64_t budget = default_oracle_budget);

/// Every numbered bound applicable to the report's rule, each compared with
/// 1e-9 slack:
///   wps_h            PoS <= 1.25
///   finite gamma_w   jump ratio <= 2*sqrt(1+gamma_w)
///                    PoS <= 4*sqrt(ceil(log2 gamma_w)) + 1/sqrt(2) + 1
///   oracle ran       PoA <= (3/(2*sqrt(2))) * sqrt(n)
///   wps_hat          PoS <= min of the two epsilon envelopes
/// Checks whose premise fails are reported as not_applicable, never
/// silently dropped.
std::vector<bound_check> bound_checks(const efficiency_report& report);

bool all_applicable_pass(const std::vector<bound_check>& checks);

}  // namespace jrp
