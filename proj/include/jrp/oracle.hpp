#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jrp/cost.hpp"
#include "jrp/instance.hpp"
#include "jrp/pot.hpp"

namespace jrp {

constexpr std::uint64_t default_oracle_budget = 10'000'000;

/// True iff no retailer has a strictly cheaper unilateral deviation anywhere
/// in its strategy set, including intervals below its current one. This is
/// the definition-level check: deviations are not restricted to single
/// doubling/halving steps.
bool is_nash(const instance& inst, const std::vector<double>& weights,
             const strategy_set& gamma, const policy& pol);

enum class enumeration_mode { pruned, full };

struct equilibrium_entry {
  policy pol;
  cost_breakdown costs;
};

struct equilibrium_set {
  std::vector<equilibrium_entry> equilibria;     // lexicographic by exponents
  std::optional<policy> least;                   // componentwise-minimal NE
  std::optional<policy> payoff_dominant;         // minimizes every retailer's cost
  std::vector<strategy_range> domain;            // enumerated exponent ranges
  enumeration_mode mode = enumeration_mode::pruned;
  std::uint64_t policies_checked = 0;
};

/// Exhaustive Nash enumeration over a per-retailer exponent grid. Pruned
/// mode restricts the grid to exponents at or above the centralized policy
/// (no equilibrium lies below it); full mode covers the whole strategy set.
/// Throws budget_error if the grid exceeds the policy budget.
equilibrium_set enumerate_nash(const instance& inst, const std::vector<double>& weights,
                               enumeration_mode mode,
                               std::uint64_t budget = default_oracle_budget);

/// Componentwise-minimal equilibrium of the set, if one exists (it is then
/// unique).
std::optional<policy> select_least(const equilibrium_set& set);

/// Equilibrium that weakly minimizes every retailer's cost across the whole
/// set, if one exists. When several tie exactly, the lexicographically first
/// is returned.
std::optional<policy> select_payoff_dominant(const equilibrium_set& set);

}  // namespace jrp
