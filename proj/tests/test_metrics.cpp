#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "jrp/generators.hpp"
#include "jrp/json_io.hpp"
#include "jrp/metrics.hpp"
#include "test_support.hpp"

using namespace jrp;
using jrp_test::b8_instance;

namespace {

const bound_check* find_check(const efficiency_report& rep, const std::string& name) {
  for (const auto& c : rep.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("efficiency on the two-retailer pair under equal division") {
  const instance inst = b8_instance();
  const weight_vector w = make_weights({rule_tag::equal, {}}, inst);
  const efficiency_report rep = efficiency(inst, w, true);

  CHECK(rep.cost_centralized == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(rep.cost_dynamics == doctest::Approx(10.5).epsilon(1e-12));
  CHECK(rep.pos_algorithmic == doctest::Approx(1.05).epsilon(1e-12));
  CHECK(rep.gamma_w == 1.0);
  CHECK(rep.jump_ratio == 2.0);
  REQUIRE(rep.pos_empirical.has_value());
  REQUIRE(rep.poa_empirical.has_value());
  CHECK(*rep.pos_empirical == doctest::Approx(1.05).epsilon(1e-12));
  CHECK(*rep.poa_empirical == doctest::Approx(1.05).epsilon(1e-12));

  const bound_check* general = find_check(rep, "pos_general");
  REQUIRE(general != nullptr);
  CHECK(general->bound == doctest::Approx(1.0 / std::numbers::sqrt2 + 1.0).epsilon(1e-12));
  CHECK(general->status == check_status::pass);

  const bound_check* jump = find_check(rep, "jump_ratio");
  REQUIRE(jump != nullptr);
  CHECK(jump->bound == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(jump->status == check_status::pass);

  CHECK(find_check(rep, "wps_h_pos") == nullptr);
  CHECK(all_applicable_pass(rep.checks));
}

TEST_CASE("efficiency on the symmetric family with the oracle") {
  const instance sym = gen_symmetric_poa(4);
  const efficiency_report rep = efficiency(sym, make_weights({rule_tag::equal, {}}, sym), true);
  CHECK(rep.pos_algorithmic == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*rep.pos_empirical == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(*rep.poa_empirical == doctest::Approx(1.25).epsilon(1e-12));

  const bound_check* poa = find_check(rep, "poa_universal");
  REQUIRE(poa != nullptr);
  CHECK(poa->bound == doctest::Approx(1.5 / std::numbers::sqrt2 * 2.0).epsilon(1e-12));
  CHECK(poa->status == check_status::pass);
}

TEST_CASE("infinite heterogeneity disables the gamma checks explicitly") {
  const instance inst = b8_instance();
  const efficiency_report rep = efficiency(inst, make_weights({rule_tag::wps_o, {}}, inst), false);
  CHECK(rep.pos_algorithmic == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::isinf(rep.gamma_w));
  CHECK(find_check(rep, "pos_general")->status == check_status::not_applicable);
  CHECK(find_check(rep, "jump_ratio")->status == check_status::not_applicable);
  CHECK(find_check(rep, "poa_universal")->status == check_status::not_applicable);
  CHECK(all_applicable_pass(rep.checks));  // not_applicable is not a failure
}

TEST_CASE("holding-slope rule respects its bound on random instances") {
  std::mt19937_64 rng(1111);
  for (int trial = 0; trial < 150; ++trial) {
    const instance inst = jrp_test::random_instance(rng, 16);
    const efficiency_report rep = efficiency(inst, make_weights({rule_tag::wps_h, {}}, inst), false);
    const bound_check* c = find_check(rep, "wps_h_pos");
    REQUIRE(c != nullptr);
    CHECK(c->bound == 1.25);
    CHECK(c->status == check_status::pass);
    CHECK(rep.pos_algorithmic >= 1.0 - 1e-12);
  }
}

TEST_CASE("estimation rule carries its own envelope") {
  std::mt19937_64 rng(2222);
  const instance inst = jrp_test::random_instance(rng, 8);
  std::vector<double> est;
  for (const auto& r : inst.retailers) {
    est.push_back(r.holding_rate * std::exp(jrp_test::unit(rng) * std::log(4.0) - std::log(2.0)));
  }
  const efficiency_report rep = efficiency(inst, make_weights({rule_tag::wps_hat, est}, inst), false);
  REQUIRE(rep.eps_max.has_value());
  CHECK(*rep.eps_max <= 2.0 + 1e-12);
  const bound_check* c = find_check(rep, "wps_hat_pos");
  REQUIRE(c != nullptr);
  CHECK(c->status == check_status::pass);
  const double eps = *rep.eps_max;
  const double direct = 2.0 * std::sqrt(1.0 + eps * eps);
  CHECK(c->bound <= direct + 1e-12);
}

TEST_CASE("empirical and algorithmic stability ratios coincide") {
  std::mt19937_64 rng(3333);
  for (int trial = 0; trial < 60; ++trial) {
    const instance inst = gen_random(1 + rng() % 4, rng());
    const efficiency_report rep = efficiency(inst, make_weights({rule_tag::equal, {}}, inst), true);
    REQUIRE(rep.pos_empirical.has_value());
    CHECK(*rep.pos_empirical == doctest::Approx(rep.pos_algorithmic).epsilon(1e-12));
    CHECK(*rep.pos_empirical <= *rep.poa_empirical + 1e-12);
  }
}

TEST_CASE("report serialization is deterministic and carries the digest") {
  const instance inst = b8_instance();
  const efficiency_report rep = efficiency(inst, make_weights({rule_tag::equal, {}}, inst), true);
  const std::string once = report_to_json(rep);
  const std::string twice = report_to_json(efficiency(inst, make_weights({rule_tag::equal, {}}, inst), true));
  CHECK(once == twice);
  CHECK(once.find("\"rule\":\"equal\"") != std::string::npos);
  CHECK(once.find("\"pos\":1.05") != std::string::npos);
  CHECK(once.find(digest_hex(instance_to_json(inst))) != std::string::npos);
  CHECK(once.find("\"bounds_pass\":true") != std::string::npos);
}

TEST_CASE("a failing check flips the aggregate") {
  std::vector<bound_check> checks{{"a", 1.0, 0.5, check_status::pass},
                                  {"b", 1.0, 2.0, check_status::fail},
                                  {"c", 1.0, 9.0, check_status::not_applicable}};
  CHECK(!all_applicable_pass(checks));
  checks[1].status = check_status::not_applicable;
  CHECK(all_applicable_pass(checks));
}
