#include "jrp/instance.hpp"

#include <set>
#include <string>

namespace jrp {

std::size_t instance::position_of(int retailer_id) const {
  for (std::size_t i = 0; i < retailers.size(); ++i) {
    if (retailers[i].id == retailer_id) return i;
  }
  throw validation_error("unknown retailer id " + std::to_string(retailer_id));
}

void validate_instance(const instance& inst) {
  if (!(inst.base > 0.0)) throw validation_error("base period must be positive");
  if (!(inst.major_setup > 0.0)) throw validation_error("K0 must be positive");
  if (inst.retailers.empty()) throw validation_error("retailer list must not be empty");

  std::set<int> seen;
  for (const auto& r : inst.retailers) {
    const std::string who = "retailer " + std::to_string(r.id);
    if (!(r.holding_rate > 0.0)) throw validation_error(who + ": h must be positive");
    if (!(r.demand_rate > 0.0)) throw validation_error(who + ": d must be positive");
    if (!(r.minor_setup >= 0.0)) throw validation_error(who + ": K must be nonnegative");
    if (!seen.insert(r.id).second) throw validation_error("duplicate retailer id " + std::to_string(r.id));
  }
}

}  // namespace jrp
