#pragma once

#include <string>

#include "mediankit/duality.hpp"
#include "mediankit/poset.hpp"

namespace mediankit {

/// Hasse diagram as DOT text: covers only, ranked bottom-up,
/// deterministic for identical input.
std::string emit_dot(const FinitePoset& p);

/// Dual-space diagram: Hasse covers plus dashed complement pairing.
std::string emit_dot(const DualSpace& x);

} // namespace mediankit
