#pragma once

#include <string>
#include <vector>

#include "jrp/dynamics.hpp"
#include "jrp/instance.hpp"
#include "jrp/metrics.hpp"
#include "jrp/oracle.hpp"
#include "jrp/rules.hpp"

namespace jrp {

/// Shortest decimal representation that parses back to the same double,
/// capped at 12 significant digits. Non-finite values print as inf/-inf/nan
/// tokens; callers decide how to embed those.
std::string fmt_double(double x);

/// FNV-1a 64-bit hex digest, used to fingerprint instances in reports.
std::string digest_hex(const std::string& text);

/// Canonical instance file: {"base":..,"K0":..,"retailers":[{"id","K","h","d"},..]}.
/// Parsing is strict: unknown fields, wrong types and fractional ids are
/// rejected with validation_error.
instance parse_instance_json(const std::string& text);
std::string instance_to_json(const instance& inst);

instance load_instance_file(const std::string& path);

/// Rule grammar: equal | wps-o | wps-h | wps-d | wps-hat:<estimates.json> |
/// custom:<weights.json>. The aux files are JSON arrays aligned with the
/// instance's retailer order.
rule_spec parse_rule_string(const std::string& text);

std::string trace_to_json_lines(const instance& inst, const dynamics_trace& trace);
std::string equilibrium_set_to_json(const instance& inst, const equilibrium_set& set);
std::string report_to_json(const efficiency_report& report);

std::string csv_header();
std::string report_to_csv_row(const efficiency_report& report, std::uint64_t seed);

}  // namespace jrp
