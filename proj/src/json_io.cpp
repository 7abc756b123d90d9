#include "jrp/json_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace jrp {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_strict(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw validation_error(std::string("invalid JSON: ") + e.what());
  }
}

double number_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw validation_error(where + ": missing field \"" + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number()) throw validation_error(where + ": field \"" + key + "\" must be a number");
  return v.get<double>();
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : allowed) {
      if (item.key() == k) known = true;
    }
    if (!known) throw validation_error(where + ": unknown field \"" + item.key() + "\"");
  }
}

std::vector<double> parse_number_array_file(const std::string& path) {
  const json j = parse_strict(read_file(path));
  if (!j.is_array()) throw validation_error(path + ": expected a JSON array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw validation_error(path + ": expected a JSON array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

// Numeric token for JSON/CSV; callers quote non-finite markers where needed.
std::string num(double x) { return fmt_double(x); }

std::string num_or_quoted(double x) {
  if (std::isfinite(x)) return fmt_double(x);
  return "\"" + fmt_double(x) + "\"";
}

std::string policy_values(const instance& inst, const policy& pol) {
  std::string out = "[";
  for (std::size_t i = 0; i < pol.size(); ++i) {
    if (i) out += ",";
    out += num(pot_value(inst.base, pol.exps[i]));
  }
  return out + "]";
}

std::string double_array(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += num(xs[i]);
  }
  return out + "]";
}

const char* status_name(check_status st) {
  switch (st) {
    case check_status::pass: return "pass";
    case check_status::fail: return "fail";
    case check_status::not_applicable: return "not_applicable";
  }
  return "?";
}

}  // namespace

std::string fmt_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::string best;
  for (int prec = 1; prec <= 12; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x && (best.empty() || std::strlen(buf) < best.size())) {
      best = buf;  // shortest round-tripping form, e.g. "10" over "1e+01"
    }
  }
  if (!best.empty()) return best;
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string digest_hex(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

instance parse_instance_json(const std::string& text) {
  const json j = parse_strict(text);
  if (!j.is_object()) throw validation_error("instance: expected a JSON object");
  reject_unknown(j, {"base", "K0", "retailers"}, "instance");

  instance inst;
  inst.base = number_field(j, "base", "instance");
  inst.major_setup = number_field(j, "K0", "instance");
  if (!j.contains("retailers") || !j.at("retailers").is_array()) {
    throw validation_error("instance: \"retailers\" must be an array");
  }
  for (const auto& rj : j.at("retailers")) {
    if (!rj.is_object()) throw validation_error("retailer entries must be objects");
    reject_unknown(rj, {"id", "K", "h", "d"}, "retailer");
    if (!rj.contains("id") || !rj.at("id").is_number_integer()) {
      throw validation_error("retailer: \"id\" must be an integer");
    }
    retailer_params r;
    r.id = rj.at("id").get<int>();
    const std::string where = "retailer " + std::to_string(r.id);
    r.minor_setup = number_field(rj, "K", where);
    r.holding_rate = number_field(rj, "h", where);
    r.demand_rate = number_field(rj, "d", where);
    inst.retailers.push_back(r);
  }
  validate_instance(inst);
  return inst;
}

std::string instance_to_json(const instance& inst) {
  std::string out = "{\"base\":" + num(inst.base) + ",\"K0\":" + num(inst.major_setup) +
                    ",\"retailers\":[";
  for (std::size_t i = 0; i < inst.retailers.size(); ++i) {
    const auto& r = inst.retailers[i];
    if (i) out += ",";
    out += "{\"id\":" + std::to_string(r.id) + ",\"K\":" + num(r.minor_setup) +
           ",\"h\":" + num(r.holding_rate) + ",\"d\":" + num(r.demand_rate) + "}";
  }
  return out + "]}";
}

instance load_instance_file(const std::string& path) {
  return parse_instance_json(read_file(path));
}

rule_spec parse_rule_string(const std::string& text) {
  if (text == "equal") return {rule_tag::equal, {}};
  if (text == "wps-o") return {rule_tag::wps_o, {}};
  if (text == "wps-h") return {rule_tag::wps_h, {}};
  if (text == "wps-d") return {rule_tag::wps_d, {}};
  if (text.rfind("wps-hat:", 0) == 0) {
    return {rule_tag::wps_hat, parse_number_array_file(text.substr(8))};
  }
  if (text.rfind("custom:", 0) == 0) {
    return {rule_tag::custom, parse_number_array_file(text.substr(7))};
  }
  throw validation_error("unknown rule \"" + text +
                         "\" (expected equal | wps-o | wps-h | wps-d | wps-hat:<file> | custom:<file>)");
}

std::string trace_to_json_lines(const instance& inst, const dynamics_trace& trace) {
  (void)inst;
  std::string out;
  for (const auto& m : trace.moves) {
    out += "{\"round\":" + std::to_string(m.round) + ",\"id\":" + std::to_string(m.retailer_id) +
           ",\"from\":" + std::to_string(m.from_exponent) +
           ",\"to\":" + std::to_string(m.to_exponent) + ",\"move\":\"" +
           (m.kind == move_kind::double_up ? "double" : "halve") + "\"}\n";
  }
  return out;
}

std::string equilibrium_set_to_json(const instance& inst, const equilibrium_set& set) {
  std::string out = "{\"mode\":\"";
  out += set.mode == enumeration_mode::pruned ? "pruned" : "full";
  out += "\",\"domain\":[";
  for (std::size_t i = 0; i < set.domain.size(); ++i) {
    if (i) out += ",";
    out += "[" + std::to_string(set.domain[i].lo) + "," + std::to_string(set.domain[i].hi) + "]";
  }
  out += "],\"policies_checked\":" + std::to_string(set.policies_checked) + ",\"equilibria\":[";
  for (std::size_t k = 0; k < set.equilibria.size(); ++k) {
    const auto& e = set.equilibria[k];
    if (k) out += ",";
    out += "{\"T\":" + policy_values(inst, e.pol) + ",\"cost\":" + num(e.costs.system) +
           ",\"f\":" + double_array(e.costs.total) + "}";
  }
  out += "],\"least\":";
  out += set.least ? policy_values(inst, *set.least) : "null";
  out += ",\"payoff_dominant\":";
  out += set.payoff_dominant ? policy_values(inst, *set.payoff_dominant) : "null";
  return out + "}";
}

std::string report_to_json(const efficiency_report& rep) {
  std::string out = "{\"instance\":\"" + rep.instance_digest + "\",\"rule\":\"" +
                    rule_name(rep.rule) + "\",\"n\":" + std::to_string(rep.n);
  out += ",\"cost_centralized\":" + num(rep.cost_centralized);
  out += ",\"cost_dynamics\":" + num(rep.cost_dynamics);
  out += ",\"pos\":" + num(rep.pos_algorithmic);
  out += ",\"pos_empirical\":" + (rep.pos_empirical ? num(*rep.pos_empirical) : "null");
  out += ",\"poa_empirical\":" + (rep.poa_empirical ? num(*rep.poa_empirical) : "null");
  out += ",\"gamma_w\":" + num_or_quoted(rep.gamma_w);
  out += ",\"jump_ratio\":" + num(rep.jump_ratio);
  out += ",\"eps_max\":" + (rep.eps_max ? num(*rep.eps_max) : "null");
  // Policies belong to the instance the digest names; interval values, not exponents.
  out += ",\"Tc\":" + double_array([&] {
    std::vector<double> v;
    for (int z : rep.tc.exps) v.push_back(std::ldexp(rep.base, z));
    return v;
  }());
  out += ",\"Tw\":" + double_array([&] {
    std::vector<double> v;
    for (int z : rep.tw.exps) v.push_back(std::ldexp(rep.base, z));
    return v;
  }());
  out += ",\"checks\":[";
  for (std::size_t i = 0; i < rep.checks.size(); ++i) {
    const auto& c = rep.checks[i];
    if (i) out += ",";
    out += "{\"name\":\"" + c.name + "\",\"bound\":";
    out += std::isnan(c.bound) ? "null" : num(c.bound);
    out += ",\"measured\":";
    out += std::isnan(c.measured) ? "null" : num(c.measured);
    out += ",\"status\":\"";
    out += status_name(c.status);
    out += "\"}";
  }
  out += "],\"bounds_pass\":";
  out += all_applicable_pass(rep.checks) ? "true" : "false";
  return out + "}";
}

std::string csv_header() { return "seed,n,rule,cost_c,cost_w,pos,gamma_w,jump_ratio,bounds_pass"; }

std::string report_to_csv_row(const efficiency_report& rep, std::uint64_t seed) {
  std::string out = std::to_string(seed) + "," + std::to_string(rep.n) + "," + rule_name(rep.rule);
  out += "," + num(rep.cost_centralized);
  out += "," + num(rep.cost_dynamics);
  out += "," + num(rep.pos_algorithmic);
  out += "," + num(rep.gamma_w);
  out += "," + num(rep.jump_ratio);
  out += all_applicable_pass(rep.checks) ? ",1" : ",0";
  return out;
}

}  // namespace jrp
