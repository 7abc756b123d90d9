#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jrp/centralized.hpp"
#include "jrp/cost.hpp"
#include "jrp/dynamics.hpp"
#include "jrp/generators.hpp"
#include "jrp/json_io.hpp"
#include "jrp/metrics.hpp"
#include "jrp/oracle.hpp"
#include "jrp/rules.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid_input = 2;
constexpr int exit_budget = 3;

std::uint64_t oracle_budget() {
  if (const char* env = std::getenv("JRP_ORACLE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    throw jrp::validation_error("JRP_ORACLE_BUDGET must be a positive integer");
  }
  return jrp::default_oracle_budget;
}

std::vector<std::size_t> parse_order(const jrp::instance& inst, const std::string& spec) {
  if (spec.empty() || spec == "asc") return jrp::default_order(inst);
  if (spec.rfind("random:", 0) == 0) {
    return jrp::shuffled_order(inst, std::strtoull(spec.c_str() + 7, nullptr, 10));
  }
  std::vector<int> ids;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      ids.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw jrp::validation_error("bad order token \"" + tok + "\"");
    }
  }
  return jrp::order_from_ids(inst, ids);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw jrp::validation_error("cannot write file: " + path);
  out << content;
}

std::string ids_json(const jrp::instance& inst, const std::vector<std::size_t>& positions) {
  std::string out = "[";
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(inst.retailers[positions[k]].id);
  }
  return out + "]";
}

std::string values_json(const jrp::instance& inst, const jrp::policy& pol) {
  std::string out = "[";
  for (std::size_t i = 0; i < pol.size(); ++i) {
    if (i) out += ",";
    out += jrp::fmt_double(jrp::pot_value(inst.base, pol.exps[i]));
  }
  return out + "]";
}

std::string doubles_json(const std::vector<double>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += jrp::fmt_double(xs[i]);
  }
  return out + "]";
}

int cmd_centralized(const std::string& path) {
  const jrp::instance inst = jrp::load_instance_file(path);
  const jrp::uv_partition part = jrp::partition_uv(inst);
  const jrp::policy tc = jrp::centralized_policy(inst);
  std::cout << "{\"U\":" << ids_json(inst, part.joint) << ",\"V\":" << ids_json(inst, part.individual)
            << ",\"s\":" << jrp::fmt_double(part.critical_ratio) << ",\"Tc\":" << values_json(inst, tc)
            << ",\"cost\":" << jrp::fmt_double(jrp::system_cost(inst, tc)) << "}\n";
  return exit_ok;
}

int cmd_ne(const std::string& path, const std::string& rule, const std::string& order_spec,
           const std::string& trace_path, bool no_halve_check) {
  const jrp::instance inst = jrp::load_instance_file(path);
  const jrp::weight_vector w = jrp::make_weights(jrp::parse_rule_string(rule), inst);
  const auto order = parse_order(inst, order_spec);
  jrp::dynamics_options opts;
  opts.record_trace = !trace_path.empty();
  opts.check_halving = !no_halve_check;
  const jrp::dynamics_result res = jrp::run_dynamics(inst, w.w, order, opts);
  const jrp::cost_breakdown costs = jrp::breakdown(inst, w.w, res.final);
  if (!trace_path.empty()) {
    write_file(trace_path, jrp::trace_to_json_lines(inst, res.trace));
  }
  std::cout << "{\"rule\":\"" << jrp::rule_name(w.tag) << "\",\"Tw\":" << values_json(inst, res.final)
            << ",\"cost\":" << jrp::fmt_double(costs.system) << ",\"f\":" << doubles_json(costs.total)
            << ",\"moves\":" << res.move_count << "}\n";
  return exit_ok;
}

int cmd_enumerate(const std::string& path, const std::string& rule, const std::string& mode_str) {
  const jrp::instance inst = jrp::load_instance_file(path);
  const jrp::weight_vector w = jrp::make_weights(jrp::parse_rule_string(rule), inst);
  jrp::enumeration_mode mode;
  if (mode_str == "pruned") {
    mode = jrp::enumeration_mode::pruned;
  } else if (mode_str == "full") {
    mode = jrp::enumeration_mode::full;
  } else {
    throw jrp::validation_error("mode must be pruned or full");
  }
  const jrp::equilibrium_set set = jrp::enumerate_nash(inst, w.w, mode, oracle_budget());
  std::cout << jrp::equilibrium_set_to_json(inst, set) << "\n";
  return exit_ok;
}

int cmd_metrics(const std::string& path, const std::string& rule, bool with_oracle) {
  const jrp::instance inst = jrp::load_instance_file(path);
  const jrp::weight_vector w = jrp::make_weights(jrp::parse_rule_string(rule), inst);
  const jrp::efficiency_report rep = jrp::efficiency(inst, w, with_oracle, oracle_budget());
  std::cout << jrp::report_to_json(rep) << "\n";
  return exit_ok;
}

std::vector<double> load_weights_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw jrp::validation_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw jrp::validation_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_array()) throw jrp::validation_error(path + ": expected a JSON array of numbers");
  std::vector<double> out;
  for (const auto& v : j) {
    if (!v.is_number()) throw jrp::validation_error(path + ": expected a JSON array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

int cmd_gen(const std::string& family, std::size_t n, std::uint64_t seed, int pair_index,
            const std::string& weights_path) {
  jrp::instance inst;
  if (family == "symmetric-poa") {
    inst = jrp::gen_symmetric_poa(n);
  } else if (family == "k-private-pair") {
    const auto pair = jrp::gen_k_private_pair();
    if (pair_index != 0 && pair_index != 1) throw jrp::validation_error("--index must be 0 or 1");
    inst = pair_index == 0 ? pair.first : pair.second;
  } else if (family == "adaptive-h") {
    inst = jrp::gen_adaptive_h(weights_path.empty() ? std::vector<double>(n, 1.0)
                                                    : load_weights_file(weights_path));
  } else if (family == "random") {
    inst = jrp::gen_random(n, seed);
  } else {
    throw jrp::validation_error("unknown family \"" + family +
                                "\" (symmetric-poa | k-private-pair | adaptive-h | random)");
  }
  std::cout << jrp::instance_to_json(inst) << "\n";
  std::cerr << "{\"family\":\"" << family << "\",\"n\":" << inst.size() << ",\"seed\":" << seed
            << ",\"prng\":\"mt19937_64 top-53-bit\"}\n";
  return exit_ok;
}

int cmd_batch(const std::string& config_path) {
  std::ifstream in(config_path, std::ios::binary);
  if (!in) throw jrp::validation_error("cannot open file: " + config_path);
  std::ostringstream buf;
  buf << in.rdbuf();
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw jrp::validation_error(std::string("invalid JSON: ") + e.what());
  }

  const std::string family = cfg.value("family", "random");
  const std::size_t n = cfg.value("n", std::size_t{4});
  const std::uint64_t base_seed = cfg.value("seed", std::uint64_t{1});
  const std::size_t trials = cfg.value("trials", std::size_t{1});
  const bool with_oracle = cfg.value("oracle", false);
  const std::string output = cfg.value("output", std::string{});
  if (trials < 1) throw jrp::validation_error("trials must be at least 1");
  if (with_oracle && n > 8) throw jrp::validation_error("oracle runs need n <= 8");
  if (!cfg.contains("rules") || !cfg.at("rules").is_array()) {
    throw jrp::validation_error("config needs a \"rules\" array");
  }
  std::vector<jrp::rule_spec> rules;
  for (const auto& r : cfg.at("rules")) {
    const jrp::rule_spec spec = jrp::parse_rule_string(r.get<std::string>());
    if (spec.tag == jrp::rule_tag::wps_hat || spec.tag == jrp::rule_tag::custom) {
      throw jrp::validation_error("batch rules are limited to equal | wps-o | wps-h | wps-d");
    }
    rules.push_back(spec);
  }

  std::string csv = jrp::csv_header() + "\n";
  std::vector<double> max_pos(rules.size(), 0.0);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = base_seed + t;
    jrp::instance inst;
    if (family == "random") {
      inst = jrp::gen_random(n, seed);
    } else if (family == "symmetric-poa") {
      inst = jrp::gen_symmetric_poa(n);
    } else if (family == "adaptive-h") {
      inst = jrp::gen_adaptive_h(std::vector<double>(n, 1.0));
    } else {
      throw jrp::validation_error("unknown batch family \"" + family + "\"");
    }
    for (std::size_t k = 0; k < rules.size(); ++k) {
      const jrp::weight_vector w = jrp::make_weights(rules[k], inst);
      const jrp::efficiency_report rep = jrp::efficiency(inst, w, with_oracle, oracle_budget());
      max_pos[k] = std::max(max_pos[k], rep.pos_algorithmic);
      csv += jrp::report_to_csv_row(rep, seed) + "\n";
    }
  }
  if (output.empty()) {
    std::cout << csv;
  } else {
    write_file(output, csv);
  }
  // worst ratio seen per rule; an empirical batch maximum, not a supremum
  std::cerr << "{\"empirical_max_pos\":{";
  for (std::size_t k = 0; k < rules.size(); ++k) {
    if (k) std::cerr << ",";
    std::cerr << "\"" << jrp::rule_name(rules[k].tag) << "\":" << jrp::fmt_double(max_pos[k]);
  }
  std::cerr << "}}\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Joint replenishment games under weighted proportional sharing"};
  app.require_subcommand(1);

  std::string instance_path, rule = "equal", order = "asc", trace_path, mode = "pruned";
  std::string family, config_path, weights_path;
  std::size_t gen_n = 4;
  std::uint64_t gen_seed = 1;
  int pair_index = 0;
  bool with_oracle = false;
  bool no_halve_check = false;

  auto* centralized = app.add_subcommand("centralized", "Optimal centralized policy and partition");
  centralized->add_option("instance", instance_path, "instance JSON file")->required();

  auto* ne = app.add_subcommand("ne", "Payoff-dominant Nash equilibrium via better-response dynamics");
  ne->add_option("instance", instance_path)->required();
  ne->add_option("--rule", rule, "equal | wps-o | wps-h | wps-d | wps-hat:<file> | custom:<file>");
  ne->add_option("--order", order, "asc | id,id,... | random:<seed>");
  ne->add_option("--trace", trace_path, "write the move log as JSON lines");
  ne->add_flag("--no-halve-check", no_halve_check, "skip the halving verification on large runs");

  auto* enumerate = app.add_subcommand("enumerate", "Exhaustive Nash enumeration");
  enumerate->add_option("instance", instance_path)->required();
  enumerate->add_option("--rule", rule);
  enumerate->add_option("--mode", mode, "pruned | full");

  auto* metrics = app.add_subcommand("metrics", "Efficiency report with bound checks");
  metrics->add_option("instance", instance_path)->required();
  metrics->add_option("--rule", rule);
  metrics->add_flag("--oracle", with_oracle, "also enumerate equilibria for empirical PoS/PoA");

  auto* gen = app.add_subcommand("gen", "Emit a generated instance");
  gen->add_option("family", family, "symmetric-poa | k-private-pair | adaptive-h | random")->required();
  gen->add_option("--n", gen_n);
  gen->add_option("--seed", gen_seed);
  gen->add_option("--index", pair_index, "which instance of k-private-pair");
  gen->add_option("--weights", weights_path, "ascending weights file for adaptive-h");

  auto* batch = app.add_subcommand("batch", "Run trials from a config file and emit CSV");
  batch->add_option("config", config_path, "batch config JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_invalid_input;
  }

  try {
    if (centralized->parsed()) return cmd_centralized(instance_path);
    if (ne->parsed()) return cmd_ne(instance_path, rule, order, trace_path, no_halve_check);
    if (enumerate->parsed()) return cmd_enumerate(instance_path, rule, mode);
    if (metrics->parsed()) return cmd_metrics(instance_path, rule, with_oracle);
    if (gen->parsed()) return cmd_gen(family, gen_n, gen_seed, pair_index, weights_path);
    if (batch->parsed()) return cmd_batch(config_path);
  } catch (const jrp::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_budget;
  } catch (const jrp::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_invalid_input;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return exit_invalid_input;
}
