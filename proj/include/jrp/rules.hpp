#pragma once

#include <string>
#include <vector>

#include "jrp/instance.hpp"

namespace jrp {

enum class rule_tag { equal, wps_o, wps_h, wps_d, wps_hat, custom };

std::string rule_name(rule_tag tag);

/// Action-independent weights realizing a weighted proportional sharing rule
/// on one instance. For wps_hat the holding-rate estimates used to build the
/// weights are retained so the estimation error can be reported later.
struct weight_vector {
  std::vector<double> w;
  rule_tag tag = rule_tag::custom;
  std::vector<double> estimates;  // h-hat per retailer, wps_hat only
};

/// How to build a weight vector; aux carries holding-rate estimates for
/// wps_hat or explicit weights for custom.
struct rule_spec {
  rule_tag tag = rule_tag::equal;
  std::vector<double> aux;
};

/// Weight constructions:
///   equal    w_i = 1
///   wps_o    w_i = (H_i*s - K_i)/K0 on U, 0 on V (needs the partition)
///   wps_h    w_i = H_i
///   wps_d    w_i = d_i
///   wps_hat  w_i = hhat_i * d_i / 2, estimates hhat_i > 0 required
///   custom   explicit nonnegative weights, at least one positive for n >= 2
weight_vector make_weights(const rule_spec& spec, const instance& inst);

/// Heterogeneity ratio gamma_w = max_i(H_i/w_i) / min_i(H_i/w_i) over
/// positive-weight retailers. Returns +infinity when some retailer has zero
/// weight while another has positive weight; returns 1 for n = 1.
double gamma_ratio(const instance& inst, const weight_vector& w);

/// Holding-rate spread gamma_d = max_i h_i / min_i h_i.
double gamma_d(const instance& inst);

/// Worst multiplicative estimation error max_i max(hhat_i/h_i, h_i/hhat_i)
/// of a wps_hat weight vector. Throws validation_error if the vector does
/// not carry estimates.
double epsilon_max(const instance& inst, const weight_vector& w);

}  // namespace jrp
