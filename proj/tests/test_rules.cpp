#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "jrp/centralized.hpp"
#include "jrp/generators.hpp"
#include "jrp/rules.hpp"
#include "test_support.hpp"

using namespace jrp;
using jrp_test::b8_instance;
using jrp_test::random_instance;

TEST_CASE("weight constructions on the two-retailer pair") {
  const instance inst = b8_instance();

  const weight_vector opt = make_weights({rule_tag::wps_o, {}}, inst);
  CHECK(opt.w[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(opt.w[1] == 0.0);

  const weight_vector wh = make_weights({rule_tag::wps_h, {}}, inst);
  CHECK(wh.w == std::vector<double>{1.0, 1.0});

  const weight_vector wd = make_weights({rule_tag::wps_d, {}}, inst);
  CHECK(wd.w == std::vector<double>{2.0, 2.0});

  const weight_vector eq = make_weights({rule_tag::equal, {}}, inst);
  CHECK(eq.w == std::vector<double>{1.0, 1.0});
}

TEST_CASE("uniformly scaled estimates reproduce the holding-slope weights") {
  const instance inst = gen_random(5, 11);
  const weight_vector wh = make_weights({rule_tag::wps_h, {}}, inst);
  std::vector<double> est;
  for (const auto& r : inst.retailers) est.push_back(2.5 * r.holding_rate);
  const weight_vector hat = make_weights({rule_tag::wps_hat, est}, inst);
  for (std::size_t i = 0; i < inst.size(); ++i) {
    CHECK(hat.w[i] == doctest::Approx(2.5 * wh.w[i]).epsilon(1e-14));
  }
  CHECK(epsilon_max(inst, hat) == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("weight construction errors") {
  const instance inst = b8_instance();
  CHECK_THROWS_AS(make_weights({rule_tag::wps_hat, {}}, inst), validation_error);
  CHECK_THROWS_AS(make_weights({rule_tag::wps_hat, {1.0, -2.0}}, inst), validation_error);
  CHECK_THROWS_AS(make_weights({rule_tag::custom, {1.0, -1.0}}, inst), validation_error);
  CHECK_THROWS_AS(make_weights({rule_tag::custom, {0.0, 0.0}}, inst), validation_error);
  CHECK_THROWS_AS(make_weights({rule_tag::custom, {1.0}}, inst), validation_error);
  CHECK_THROWS_AS(epsilon_max(inst, make_weights({rule_tag::equal, {}}, inst)), validation_error);
}

TEST_CASE("gamma ratios") {
  const instance inst = b8_instance();
  CHECK(gamma_ratio(inst, make_weights({rule_tag::wps_h, {}}, inst)) == 1.0);
  CHECK(std::isinf(gamma_ratio(inst, make_weights({rule_tag::wps_o, {}}, inst))));

  const instance harmonic = gen_adaptive_h({1.0, 1.0, 1.0, 1.0});
  CHECK(gamma_ratio(harmonic, make_weights({rule_tag::equal, {}}, harmonic)) ==
        doctest::Approx(4.0).epsilon(1e-12));
  CHECK(gamma_d(harmonic) == doctest::Approx(4.0).epsilon(1e-12));

  instance solo;
  solo.major_setup = 1.0;
  solo.retailers.push_back({1, 0.0, 3.0, 1.0});
  CHECK(gamma_ratio(solo, make_weights({rule_tag::equal, {}}, solo)) == 1.0);
}

TEST_CASE("optimal-benchmark weights vanish exactly on the individual group") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 300; ++trial) {
    const instance inst = random_instance(rng, 8);
    const uv_partition part = partition_uv(inst);
    const weight_vector w = make_weights({rule_tag::wps_o, {}}, inst);
    double joint_sum = 0.0;
    for (std::size_t i : part.joint) {
      CHECK(w.w[i] >= 0.0);
      joint_sum += w.w[i];
    }
    for (std::size_t i : part.individual) CHECK(w.w[i] == 0.0);
    CHECK(joint_sum == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("estimation spread bounds the heterogeneity ratio") {
  std::mt19937_64 rng(556);
  for (int trial = 0; trial < 300; ++trial) {
    const instance inst = random_instance(rng, 8);
    std::vector<double> est;
    for (const auto& r : inst.retailers) {
      est.push_back(r.holding_rate * std::exp(jrp_test::unit(rng) * 2.0 - 1.0));
    }
    const weight_vector w = make_weights({rule_tag::wps_hat, est}, inst);
    const double eps = epsilon_max(inst, w);
    CHECK(gamma_ratio(inst, w) <= eps * eps * (1.0 + 1e-12));
  }
}
