#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qgb/circuit.hpp"
#include "qgb/statevector.hpp"

namespace qgb {

/// Classical readout of one shot, rendered most-significant bit first
/// (bit string index 0 is classical bit nc-1). Bits never written by a
/// measure stay 0.
struct ShotResult {
    std::string bits;
};

/// Exact outcome probabilities keyed by classical bitstring.
struct OutcomeDistribution {
    std::map<std::string, double> entries;
};

/// Sampled counts keyed by classical bitstring.
struct Histogram {
    std::map<std::string, std::uint64_t> entries;
    std::uint64_t shots = 0;
};

/// Runs one shot. Deterministic function of (circuit, seed, shot_index):
/// the shot's random stream is derived by mixing seed with shot_index.
ShotResult run_shot(const Circuit& circuit, std::uint64_t seed, std::uint64_t shot_index);

/// Histogram of run_shot over shot_index 0..shots-1. Shots are sharded
/// across `workers` threads; the result does not depend on the worker
/// count or merge order. Throws std::invalid_argument when shots == 0.
Histogram run_shots(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed,
                    int workers = 1);

inline constexpr std::uint64_t kDefaultBranchBudget = std::uint64_t{1} << 20;

/// Exact outcome distribution by carrying both projection branches at
/// every Reset and Measure with their Born weights. Throws
/// BranchBudgetError once more than `branch_budget` leaves would be
/// enumerated.
OutcomeDistribution exact_distribution(const Circuit& circuit,
                                       std::uint64_t branch_budget = kDefaultBranchBudget);

/// State just before the first Measure, for circuits whose resets up to
/// that point are deterministic (projection probability 0 or 1). Used to
/// inspect builder circuits mid-flight.
StateVector prefix_state(const Circuit& circuit);

} // namespace qgb
