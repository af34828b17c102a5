#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgb/simulate.hpp"

namespace qgb {

/// Decoded board outputs, each in [0, levels].
struct DecodedSamples {
    std::vector<int> values;
    int levels = 0;

    /// Validates the range invariant. Throws DecodeError on a stray value.
    static DecodedSamples from_values(std::vector<int> values, int levels);
};

struct SummaryStats {
    double mean = 0.0;
    double stddev = 0.0;
    double variance = 0.0; // population convention
};

/// Maps a full readout string (2n+2 bits, most-significant classical index
/// first) to its bin: exactly one '1' must sit on the measured bits
/// c1..c_{2n+1}, at an odd index 2k+1, giving value k. Throws DecodeError
/// on zero/multiple hot bits or a hot bit at an even position.
int decode_one_hot(const std::string& bits, int levels);

/// Decodes every outcome of a distribution; probabilities accumulate per
/// bin. Throws DecodeError if any outcome with weight above `ignore_below`
/// fails to decode.
std::map<int, double> decode_distribution(const OutcomeDistribution& dist, int levels,
                                          double ignore_below = 0.0);

double distribution_mean(const std::map<int, double>& dist);

/// Sums consecutive disjoint blocks of `block_size` values; a trailing
/// partial block is discarded. Every sum lands in [0, block_size * n].
std::vector<int> rescale_blocks(const std::vector<int>& values, int block_size);
std::vector<int> rescale_blocks(const DecodedSamples& samples, int block_size);

/// Population mean/stddev/variance. Throws std::invalid_argument on empty
/// input.
SummaryStats summary_stats(const std::vector<int>& values);
SummaryStats summary_stats(const std::vector<double>& values);
SummaryStats summary_stats(const DecodedSamples& samples);

/// Discrete reference law on integer support [lo, hi].
struct ReferenceDistribution {
    enum class Kind { Binomial, Normal } kind;
    int lo = 0;
    int hi = 0;
    std::vector<double> pmf; // indexed by value - lo

    double at(int value) const;
};

/// pmf(k) = C(n,k) p^k (1-p)^(n-k) on 0..n. Throws on p outside [0,1].
ReferenceDistribution binomial_reference(int n, double p);

/// Normal(mu, sigma2) discretized onto integer bins [lo, hi] by the
/// continuity correction; tail mass folds into the end bins so the pmf
/// sums to 1. Throws on sigma2 <= 0.
ReferenceDistribution normal_reference(double mu, double sigma2, int lo, int hi);

struct ChiSquareResult {
    double statistic = 0.0;
    int dof = 0;
    double critical_001 = 0.0; // 0.001 significance threshold
    bool flag = false;         // statistic exceeds the threshold
    int pooled_bins = 0;
};

struct ComparisonReport {
    double total_variation = 0.0;
    std::optional<ChiSquareResult> chi_square; // present when counts given
};

/// TV distance between two probability maps (keys aligned by union).
double total_variation(const std::map<int, double>& a, const std::map<int, double>& b);

/// TV distance only.
ComparisonReport compare(const std::map<int, double>& dist_a,
                         const std::map<int, double>& dist_b);

/// TV of empirical frequencies plus a Pearson chi-square of the counts
/// against expected counts from the reference. Zero-expectation bins are
/// pooled into the nearest nonzero neighbour before the statistic.
ComparisonReport compare(const std::map<int, std::uint64_t>& counts,
                         const ReferenceDistribution& reference);

} // namespace qgb
