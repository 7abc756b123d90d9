#include "jrp/rules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jrp/centralized.hpp"

namespace jrp {

std::string rule_name(rule_tag tag) {
  switch (tag) {
    case rule_tag::equal: return "equal";
    case rule_tag::wps_o: return "wps-o";
    case rule_tag::wps_h: return "wps-h";
    case rule_tag::wps_d: return "wps-d";
    case rule_tag::wps_hat: return "wps-hat";
    case rule_tag::custom: return "custom";
  }
  return "?";
}

weight_vector make_weights(const rule_spec& spec, const instance& inst) {
  const std::size_t n = inst.size();
  weight_vector out;
  out.tag = spec.tag;
  out.w.resize(n);

  switch (spec.tag) {
    case rule_tag::equal:
      std::fill(out.w.begin(), out.w.end(), 1.0);
      break;
    case rule_tag::wps_h:
      for (std::size_t i = 0; i < n; ++i) out.w[i] = inst.retailers[i].holding_slope();
      break;
    case rule_tag::wps_d:
      for (std::size_t i = 0; i < n; ++i) out.w[i] = inst.retailers[i].demand_rate;
      break;
    case rule_tag::wps_o: {
      // Joint-order retailers carry (H_i*s - K_i)/K0, which is nonnegative
      // exactly on U and sums to 1; individual-EOQ retailers ride free.
      const uv_partition part = partition_uv(inst);
      for (std::size_t i : part.joint) {
        const auto& r = inst.retailers[i];
        out.w[i] = std::max(
            0.0, (r.holding_slope() * part.critical_ratio - r.minor_setup) / inst.major_setup);
      }
      for (std::size_t i : part.individual) out.w[i] = 0.0;
      break;
    }
    case rule_tag::wps_hat: {
      if (spec.aux.size() != n) {
        throw validation_error("wps-hat needs one holding-rate estimate per retailer");
      }
      for (double e : spec.aux) {
        if (!(e > 0.0)) throw validation_error("wps-hat estimates must be positive");
      }
      out.estimates = spec.aux;
      for (std::size_t i = 0; i < n; ++i) {
        out.w[i] = 0.5 * spec.aux[i] * inst.retailers[i].demand_rate;
      }
      break;
    }
    case rule_tag::custom: {
      if (spec.aux.size() != n) {
        throw validation_error("custom rule needs one weight per retailer");
      }
      for (double w : spec.aux) {
        if (!(w >= 0.0)) throw validation_error("custom weights must be nonnegative");
      }
      if (n > 1 && std::all_of(spec.aux.begin(), spec.aux.end(), [](double w) { return w == 0.0; })) {
        throw validation_error("custom weights must include a positive entry");
      }
      out.w = spec.aux;
      break;
    }
  }
  return out;
}

double gamma_ratio(const instance& inst, const weight_vector& w) {
  const std::size_t n = inst.size();
  if (n == 1) return 1.0;
  bool any_zero = false, any_positive = false;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.w[i] > 0.0) {
      any_positive = true;
      const double ratio = inst.retailers[i].holding_slope() / w.w[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    } else {
      any_zero = true;  // H_i > 0 always, so a zero weight is an infinite ratio
    }
  }
  if (any_zero && any_positive) return std::numeric_limits<double>::infinity();
  if (!any_positive) return 1.0;
  return hi / lo;
}

double gamma_d(const instance& inst) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (const auto& r : inst.retailers) {
    lo = std::min(lo, r.holding_rate);
    hi = std::max(hi, r.holding_rate);
  }
  return hi / lo;
}

double epsilon_max(const instance& inst, const weight_vector& w) {
  if (w.estimates.size() != inst.size()) {
    throw validation_error("epsilon_max needs a wps-hat weight vector with estimates");
  }
  double eps = 1.0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const double ratio = w.estimates[i] / inst.retailers[i].holding_rate;
    eps = std::max(eps, std::max(ratio, 1.0 / ratio));
  }
  return eps;
}

}  // namespace jrp
