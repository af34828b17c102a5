#pragma once

#include "qgb/circuit.hpp"

namespace qgb {

/// Rewrites every Cswap as Cx + Toffoli + Cx with the Toffoli expanded
/// into 6 Cx and 9 single-qubit gates (17 ops per Cswap, 8 of them Cx).
/// All other ops pass through unchanged. The result is unitarily
/// equivalent on every basis state.
Circuit decompose_cswap(const Circuit& circuit);

} // namespace qgb
