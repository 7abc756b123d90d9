#include "jrp/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "jrp/centralized.hpp"
#include "jrp/cost.hpp"
#include "jrp/dynamics.hpp"
#include "jrp/json_io.hpp"

namespace jrp {

namespace {

constexpr double slack = 1e-9;

bool within(double measured, double bound) {
  return measured <= bound + std::max(slack, slack * std::abs(bound));
}

// ceil(log2(x)) with a guard so values a few ulp above an exact power of two
// do not bump the bound up a whole notch.
int ceil_log2(double x) {
  const double raw = std::ceil(std::log2(x) - 1e-12);
  return std::max(0, static_cast<int>(raw));
}

double total_setup(const instance& inst, const policy& pol) {
  double setup = inst.major_setup / pot_value(inst.base, pol.min_exponent());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    setup += inst.retailers[i].minor_setup / pot_value(inst.base, pol.exps[i]);
  }
  return setup;
}

}  // namespace

efficiency_report efficiency(const instance& inst, const weight_vector& w, bool with_oracle,
                             std::uint64_t budget) {
  efficiency_report rep;
  rep.instance_digest = digest_hex(instance_to_json(inst));
  rep.rule = w.tag;
  rep.n = inst.size();
  rep.base = inst.base;

  rep.tc = centralized_policy(inst);
  rep.cost_centralized = system_cost(inst, rep.tc);

  const dynamics_result dyn = run_dynamics(inst, w.w, default_order(inst));
  rep.tw = dyn.final;
  rep.cost_dynamics = system_cost(inst, rep.tw);
  rep.pos_algorithmic = rep.cost_dynamics / rep.cost_centralized;

  int max_jump = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    max_jump = std::max(max_jump, rep.tw.exps[i] - rep.tc.exps[i]);
  }
  rep.jump_ratio = std::ldexp(1.0, max_jump);

  // Intervals only grow from the centralized start, so the total setup cost
  // cannot either; anything else is an implementation fault.
  if (total_setup(inst, rep.tw) > total_setup(inst, rep.tc)) {
    throw std::logic_error("setup cost increased along the dynamics");
  }

  rep.gamma_w = gamma_ratio(inst, w);
  if (w.tag == rule_tag::wps_hat) rep.eps_max = epsilon_max(inst, w);

  if (with_oracle) {
    const equilibrium_set set = enumerate_nash(inst, w.w, enumeration_mode::full, budget);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& e : set.equilibria) {
      lo = std::min(lo, e.costs.system);
      hi = std::max(hi, e.costs.system);
    }
    if (!set.equilibria.empty()) {
      rep.pos_empirical = lo / rep.cost_centralized;
      rep.poa_empirical = hi / rep.cost_centralized;
    }
  }

  rep.checks = bound_checks(rep);
  return rep;
}

std::vector<bound_check> bound_checks(const efficiency_report& rep) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const bool finite_gamma = std::isfinite(rep.gamma_w);
  std::vector<bound_check> checks;

  if (rep.rule == rule_tag::wps_h) {
    checks.push_back({"wps_h_pos", 1.25, rep.pos_algorithmic,
                      within(rep.pos_algorithmic, 1.25) ? check_status::pass : check_status::fail});
  }

  if (finite_gamma) {
    const double jump_bound = 2.0 * std::sqrt(1.0 + rep.gamma_w);
    checks.push_back({"jump_ratio", jump_bound, rep.jump_ratio,
                      within(rep.jump_ratio, jump_bound) ? check_status::pass : check_status::fail});
    const double pos_bound =
        4.0 * std::sqrt(static_cast<double>(ceil_log2(rep.gamma_w))) + 1.0 / std::numbers::sqrt2 + 1.0;
    checks.push_back({"pos_general", pos_bound, rep.pos_algorithmic,
                      within(rep.pos_algorithmic, pos_bound) ? check_status::pass : check_status::fail});
  } else {
    checks.push_back({"jump_ratio", nan, rep.jump_ratio, check_status::not_applicable});
    checks.push_back({"pos_general", nan, rep.pos_algorithmic, check_status::not_applicable});
  }

  if (rep.poa_empirical) {
    const double poa_bound = 1.5 / std::numbers::sqrt2 * std::sqrt(static_cast<double>(rep.n));
    checks.push_back({"poa_universal", poa_bound, *rep.poa_empirical,
                      within(*rep.poa_empirical, poa_bound) ? check_status::pass : check_status::fail});
  } else {
    checks.push_back({"poa_universal", nan, nan, check_status::not_applicable});
  }

  if (rep.rule == rule_tag::wps_hat && rep.eps_max) {
    const double eps = *rep.eps_max;
    const int m = ceil_log2(eps * eps);  // ceil(2*log2(eps))
    const double grouped = 4.0 * std::sqrt(static_cast<double>(m)) + 1.0 / std::numbers::sqrt2 + 1.0;
    const double direct = 2.0 * std::sqrt(1.0 + eps * eps);
    const double bound = std::min(grouped, direct);
    checks.push_back({"wps_hat_pos", bound, rep.pos_algorithmic,
                      within(rep.pos_algorithmic, bound) ? check_status::pass : check_status::fail});
  }

  return checks;
}

bool all_applicable_pass(const std::vector<bound_check>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const bound_check& c) { return c.status == check_status::fail; });
}

}  // namespace jrp
