#include <algorithm>
#include <cmath>
#include <random>

#include "doctest.h"
#include "jrp/centralized.hpp"
#include "jrp/dynamics.hpp"
#include "jrp/generators.hpp"
#include "jrp/oracle.hpp"
#include "jrp/rules.hpp"
#include "test_support.hpp"

using namespace jrp;
using jrp_test::b8_instance;
using jrp_test::random_weights;

TEST_CASE("is_nash on the worked instances") {
  const instance inst = b8_instance();
  const std::vector<double> w{1.0, 1.0};
  const auto gamma = make_strategy_set(inst, w);
  CHECK(is_nash(inst, w, gamma, policy{{1, 2}}));
  CHECK(!is_nash(inst, w, gamma, policy{{1, 1}}));

  const instance sym = gen_symmetric_poa(4);
  const std::vector<double> we(4, 1.0);
  const auto gsym = make_strategy_set(sym, we);
  CHECK(is_nash(sym, we, gsym, policy{{0, 0, 0, 0}}));
}

TEST_CASE("enumeration of the symmetric four-retailer family") {
  const instance sym = gen_symmetric_poa(4);
  const std::vector<double> w(4, 1.0);
  const auto set = enumerate_nash(sym, w, enumeration_mode::full);

  REQUIRE(set.equilibria.size() == 2);
  CHECK(set.equilibria[0].pol == policy{{-1, -1, -1, -1}});
  CHECK(set.equilibria[0].costs.system == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(set.equilibria[1].pol == policy{{0, 0, 0, 0}});
  CHECK(set.equilibria[1].costs.system == doctest::Approx(5.0).epsilon(1e-12));
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(set.equilibria[0].costs.total[i] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(set.equilibria[1].costs.total[i] == doctest::Approx(1.25).epsilon(1e-12));
  }
  REQUIRE(set.least.has_value());
  CHECK(*set.least == policy{{-1, -1, -1, -1}});
  REQUIRE(set.payoff_dominant.has_value());
  CHECK(*set.payoff_dominant == policy{{-1, -1, -1, -1}});
}

TEST_CASE("enumeration of the two-retailer pair") {
  const instance inst = b8_instance();
  const std::vector<double> w{1.0, 1.0};
  const auto set = enumerate_nash(inst, w, enumeration_mode::full);
  REQUIRE(set.equilibria.size() == 1);
  CHECK(set.equilibria[0].pol == policy{{1, 2}});
  CHECK(*set.least == policy{{1, 2}});
  CHECK(*set.payoff_dominant == policy{{1, 2}});
}

TEST_CASE("single retailer has exactly the strategy-set minimizer") {
  std::mt19937_64 rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const instance inst = gen_random(1, rng());
    const std::vector<double> w{1.0};
    const auto gamma = make_strategy_set(inst, w);
    const auto set = enumerate_nash(inst, w, enumeration_mode::full);
    REQUIRE(set.equilibria.size() == 1);

    const auto& r = inst.retailers[0];
    double best = 0.0;
    int best_z = gamma.ranges[0].lo;
    for (int z = gamma.ranges[0].lo; z <= gamma.ranges[0].hi; ++z) {
      const double t = pot_value(inst.base, z);
      const double f = r.holding_slope() * t + (inst.major_setup + r.minor_setup) / t;
      if (z == gamma.ranges[0].lo || f < best) {
        best = f;
        best_z = z;
      }
    }
    CHECK(set.equilibria[0].pol.exps[0] == best_z);
    CHECK(*set.least == set.equilibria[0].pol);
    CHECK(*set.payoff_dominant == set.equilibria[0].pol);
  }
}

TEST_CASE("pruned and full enumeration agree and dynamics finds the least equilibrium") {
  std::mt19937_64 rng(707);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const instance inst = gen_random(n, rng());
    std::vector<double> w;
    switch (trial % 3) {
      case 0: w.assign(n, 1.0); break;
      case 1: w = make_weights({rule_tag::wps_d, {}}, inst).w; break;
      default: w = random_weights(rng, n); break;
    }

    const auto full = enumerate_nash(inst, w, enumeration_mode::full);
    const auto pruned = enumerate_nash(inst, w, enumeration_mode::pruned);

    REQUIRE(full.equilibria.size() == pruned.equilibria.size());
    for (std::size_t k = 0; k < full.equilibria.size(); ++k) {
      CHECK(full.equilibria[k].pol == pruned.equilibria[k].pol);
    }

    // nothing below the centralized policy
    const policy tc = centralized_policy(inst);
    for (const auto& e : full.equilibria) {
      for (std::size_t i = 0; i < n; ++i) CHECK(e.pol.exps[i] >= tc.exps[i]);
    }

    const auto dyn = run_dynamics(inst, w, default_order(inst));
    REQUIRE(full.least.has_value());
    REQUIRE(full.payoff_dominant.has_value());
    CHECK(dyn.final == *full.least);
    CHECK(dyn.final == *full.payoff_dominant);
  }
}

TEST_CASE("fast holding-slope equilibrium is the payoff-dominant one") {
  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 100; ++trial) {
    const instance inst = gen_random(1 + rng() % 4, rng());
    const weight_vector w = make_weights({rule_tag::wps_h, {}}, inst);
    const auto set = enumerate_nash(inst, w.w, enumeration_mode::full);
    const policy th = wpsh_fast(inst);
    const bool found = std::any_of(set.equilibria.begin(), set.equilibria.end(),
                                   [&](const auto& e) { return e.pol == th; });
    CHECK(found);
    REQUIRE(set.payoff_dominant.has_value());
    CHECK(th == *set.payoff_dominant);
  }
}

TEST_CASE("benchmark weights make the centralized policy an equilibrium") {
  std::mt19937_64 rng(909);
  for (int trial = 0; trial < 100; ++trial) {
    const instance inst = gen_random(1 + rng() % 4, rng());
    const weight_vector w = make_weights({rule_tag::wps_o, {}}, inst);
    const policy tc = centralized_policy(inst);
    const auto gamma = make_strategy_set(inst, w.w);
    CHECK(is_nash(inst, w.w, gamma, tc));

    const auto set = enumerate_nash(inst, w.w, enumeration_mode::full);
    double min_cost = std::numeric_limits<double>::infinity();
    for (const auto& e : set.equilibria) min_cost = std::min(min_cost, e.costs.system);
    CHECK(min_cost == doctest::Approx(system_cost(inst, tc)).epsilon(1e-12));
  }
}

TEST_CASE("budget refusal") {
  const instance big = gen_symmetric_poa(12);
  const std::vector<double> w(12, 1.0);
  CHECK_THROWS_AS(enumerate_nash(big, w, enumeration_mode::full), budget_error);
  CHECK_THROWS_AS(enumerate_nash(b8_instance(), {1.0, 1.0}, enumeration_mode::full, 3), budget_error);
  CHECK_NOTHROW(enumerate_nash(b8_instance(), {1.0, 1.0}, enumeration_mode::full, 4));
}

TEST_CASE("marker selection on a singleton set") {
  const auto set = enumerate_nash(b8_instance(), {1.0, 1.0}, enumeration_mode::pruned);
  REQUIRE(set.equilibria.size() == 1);
  CHECK(*select_least(set) == set.equilibria[0].pol);
  CHECK(*select_payoff_dominant(set) == set.equilibria[0].pol);
}
