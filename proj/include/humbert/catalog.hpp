#pragma once

#include <json.hpp>

#include "humbert/rational.hpp"

namespace humbert {

// The complete n = 4 catalog at a parameter pair: ten genus-3 quartic
// curves (one per branch triple), ten genus-2 curves (one per branch pair)
// and five genus-1 cubics (one per omitted branch value), each with its
// uniformizing subgroup and exact equation record. Deterministic order:
// quartic, pair, single; selectors ascending.
nlohmann::json build_catalog(const mpq_class& l1, const mpq_class& l2);

}  // namespace humbert
