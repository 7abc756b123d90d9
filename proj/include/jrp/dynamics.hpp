#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jrp/cost.hpp"
#include "jrp/instance.hpp"
#include "jrp/pot.hpp"

namespace jrp {

/// Retailers whose interval does not exceed retailer pos's interval,
/// including pos itself. Under power-of-two nesting this is exactly the set
/// joining every order that pos joins.
std::vector<std::size_t> coalition_below(const policy& pol, std::size_t pos);

/// True iff retailer pos strictly lowers its cost by doubling its interval:
///   2*H_i*T_i^2 < K_i + frac_i(N[T_i]) * K0,
/// with the coalition evaluated at the current interval.
bool gain_by_doubling(const instance& inst, const std::vector<double>& weights,
                      const policy& pol, std::size_t pos);

/// True iff retailer pos strictly lowers its cost by halving its interval:
///   H_i*T_i^2 > 2*(K_i + frac_i(N[T_i/2]) * K0),
/// with the coalition evaluated after the halving. Returns false when the
/// halved interval would fall below the strategy-set floor.
bool gain_by_halving(const instance& inst, const std::vector<double>& weights,
                     const strategy_set& gamma, const policy& pol, std::size_t pos);

enum class move_kind { double_up, halve };

struct move_record {
  int round = 0;
  int retailer_id = 0;
  int from_exponent = 0;
  int to_exponent = 0;
  move_kind kind = move_kind::double_up;
};

struct dynamics_trace {
  std::vector<move_record> moves;
  int rounds = 0;
};

struct dynamics_result {
  policy final;
  dynamics_trace trace;
  std::size_t move_count = 0;
  int sweeps = 0;
};

struct dynamics_options {
  bool record_trace = false;
  /// Evaluate the halving condition on every visit and fail hard if it ever
  /// fires; a fired halve means a broken invariant, not a legal move.
  bool check_halving = true;
};

/// Better-response dynamics from the centralized policy: sweep the retailers
/// in the given visit order, doubling whenever it strictly pays, until a
/// full sweep makes no move. The result is the least Nash equilibrium and
/// does not depend on the order. Throws std::logic_error if a halving
/// opportunity is ever observed or a doubling would leave the strategy set.
dynamics_result run_dynamics(const instance& inst, const std::vector<double>& weights,
                             const std::vector<std::size_t>& order,
                             const dynamics_options& opts = {});

/// Single-pass equilibrium for weights w_i = H_i: visit retailers once in
/// descending K_i/H_i order, doubling when it pays. Every interval ends at
/// its centralized value or exactly double it, and the result matches
/// run_dynamics under the same weights.
policy wpsh_fast(const instance& inst);

/// Visit orders. The default is ascending retailer id.
std::vector<std::size_t> default_order(const instance& inst);
std::vector<std::size_t> order_from_ids(const instance& inst, const std::vector<int>& ids);
std::vector<std::size_t> shuffled_order(const instance& inst, std::uint64_t seed);

}  // namespace jrp
