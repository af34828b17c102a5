#include "qgb/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qgb/errors.hpp"

namespace qgb {

int decode_one_hot(const std::string& bits, int levels) {
    const int nc = 2 * levels + 2;
    if (static_cast<int>(bits.size()) != nc)
        throw DecodeError("decode: expected " + std::to_string(nc) + " bits, got " +
                          std::to_string(bits.size()));

    int hot = -1;
    for (int c = 1; c <= 2 * levels + 1; ++c) {
        // bits is rendered most-significant classical index first
        const char bit = bits[static_cast<std::size_t>(nc - 1 - c)];
        if (bit != '0' && bit != '1') throw DecodeError("decode: non-binary character");
        if (bit == '1') {
            if (hot >= 0) throw DecodeError("decode: multiple hot bits in '" + bits + "'");
            hot = c;
        }
    }
    if (hot < 0) throw DecodeError("decode: no hot bit in '" + bits + "'");
    if (hot % 2 == 0)
        throw DecodeError("decode: hot bit at even position " + std::to_string(hot));
    return (hot - 1) / 2;
}

std::map<int, double> decode_distribution(const OutcomeDistribution& dist, int levels,
                                          double ignore_below) {
    std::map<int, double> decoded;
    for (const auto& [bits, prob] : dist.entries) {
        if (prob <= ignore_below) continue;
        decoded[decode_one_hot(bits, levels)] += prob;
    }
    return decoded;
}

double distribution_mean(const std::map<int, double>& dist) {
    double mean = 0.0;
    for (const auto& [value, prob] : dist) mean += value * prob;
    return mean;
}

DecodedSamples DecodedSamples::from_values(std::vector<int> values, int levels) {
    for (int v : values)
        if (v < 0 || v > levels)
            throw DecodeError("decoded value " + std::to_string(v) + " outside [0, " +
                              std::to_string(levels) + "]");
    return DecodedSamples{std::move(values), levels};
}

std::vector<int> rescale_blocks(const std::vector<int>& values, int block_size) {
    if (block_size < 1) throw std::invalid_argument("rescale: block size must be >= 1");
    std::vector<int> sums;
    const std::size_t blocks = values.size() / static_cast<std::size_t>(block_size);
    sums.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        int sum = 0;
        for (int k = 0; k < block_size; ++k)
            sum += values[b * static_cast<std::size_t>(block_size) + k];
        sums.push_back(sum);
    }
    return sums;
}

namespace {

template <typename T>
SummaryStats summarize(const std::vector<T>& values) {
    if (values.empty()) throw std::invalid_argument("summary_stats: empty input");
    double mean = 0.0;
    for (T v : values) mean += static_cast<double>(v);
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (T v : values) {
        const double d = static_cast<double>(v) - mean;
        var += d * d;
    }
    var /= static_cast<double>(values.size());
    return SummaryStats{mean, std::sqrt(var), var};
}

} // namespace

std::vector<int> rescale_blocks(const DecodedSamples& samples, int block_size) {
    return rescale_blocks(samples.values, block_size);
}

SummaryStats summary_stats(const std::vector<int>& values) { return summarize(values); }
SummaryStats summary_stats(const std::vector<double>& values) { return summarize(values); }
SummaryStats summary_stats(const DecodedSamples& samples) { return summarize(samples.values); }

double ReferenceDistribution::at(int value) const {
    if (value < lo || value > hi) return 0.0;
    return pmf[static_cast<std::size_t>(value - lo)];
}

ReferenceDistribution binomial_reference(int n, double p) {
    if (n < 0) throw std::invalid_argument("binomial: n must be >= 0");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial: p must be in [0,1]");

    // Pascal row keeps the coefficients exact in double for the n used here.
    std::vector<double> coeff(static_cast<std::size_t>(n) + 1, 1.0);
    for (int row = 1; row <= n; ++row)
        for (int k = row - 1; k >= 1; --k) coeff[k] += coeff[k - 1];

    ReferenceDistribution ref{ReferenceDistribution::Kind::Binomial, 0, n, {}};
    ref.pmf.resize(coeff.size());
    for (int k = 0; k <= n; ++k)
        ref.pmf[k] = coeff[k] * std::pow(p, k) * std::pow(1.0 - p, n - k);
    return ref;
}

ReferenceDistribution normal_reference(double mu, double sigma2, int lo, int hi) {
    if (sigma2 <= 0.0) throw std::invalid_argument("normal: variance must be positive");
    if (hi < lo) throw std::invalid_argument("normal: empty support");
    const double sigma = std::sqrt(sigma2);
    auto cdf = [&](double x) { return 0.5 * std::erfc((mu - x) / (sigma * std::numbers::sqrt2)); };
    ReferenceDistribution ref{ReferenceDistribution::Kind::Normal, lo, hi, {}};
    ref.pmf.resize(static_cast<std::size_t>(hi - lo) + 1);
    for (int v = lo; v <= hi; ++v) {
        double lower = v == lo ? 0.0 : cdf(v - 0.5);
        double upper = v == hi ? 1.0 : cdf(v + 0.5);
        ref.pmf[static_cast<std::size_t>(v - lo)] = upper - lower;
    }
    return ref;
}

namespace {

double chi_square_critical_001(int dof) {
    // Wilson-Hilferty cube approximation at the 0.999 quantile.
    const double z = 3.090232306167813; // Phi^-1(0.999)
    const double d = static_cast<double>(dof);
    const double t = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
    return d * t * t * t;
}

} // namespace

double total_variation(const std::map<int, double>& a, const std::map<int, double>& b) {
    double tv = 0.0;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            tv += std::abs(ia->second);
            ++ia;
        } else if (ia == a.end() || ib->first < ia->first) {
            tv += std::abs(ib->second);
            ++ib;
        } else {
            tv += std::abs(ia->second - ib->second);
            ++ia;
            ++ib;
        }
    }
    return tv / 2.0;
}

ComparisonReport compare(const std::map<int, double>& dist_a,
                         const std::map<int, double>& dist_b) {
    return ComparisonReport{total_variation(dist_a, dist_b), std::nullopt};
}

ComparisonReport compare(const std::map<int, std::uint64_t>& counts,
                         const ReferenceDistribution& reference) {
    std::uint64_t shots = 0;
    for (const auto& [value, count] : counts) shots += count;
    if (shots == 0) throw std::invalid_argument("compare: empty histogram");

    std::map<int, double> empirical;
    for (const auto& [value, count] : counts)
        empirical[value] = static_cast<double>(count) / static_cast<double>(shots);
    std::map<int, double> expected_map;
    for (int v = reference.lo; v <= reference.hi; ++v) expected_map[v] = reference.at(v);

    ComparisonReport report;
    report.total_variation = total_variation(empirical, expected_map);

    // Bins with zero expectation are pooled into the nearest bin that has
    // one, so the statistic stays defined on sparse tails.
    struct Bin {
        double expected;
        double observed;
    };
    std::vector<Bin> bins;
    const int lo = std::min(reference.lo, counts.empty() ? reference.lo : counts.begin()->first);
    const int hi = std::max(reference.hi, counts.empty() ? reference.hi : counts.rbegin()->first);
    for (int v = lo; v <= hi; ++v) {
        const auto it = counts.find(v);
        const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        bins.push_back({reference.at(v) * static_cast<double>(shots), observed});
    }

    std::vector<Bin> pooled;
    std::vector<int> pending; // indices waiting for a nonzero-expectation host
    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (bins[i].expected > 0.0) {
            pooled.push_back(bins[i]);
            for (int idx : pending) {
                pooled.back().expected += bins[static_cast<std::size_t>(idx)].expected;
                pooled.back().observed += bins[static_cast<std::size_t>(idx)].observed;
            }
            pending.clear();
        } else if (!pooled.empty()) {
            pooled.back().expected += bins[i].expected;
            pooled.back().observed += bins[i].observed;
        } else {
            pending.push_back(static_cast<int>(i));
        }
    }
    if (!pending.empty() && pooled.empty())
        throw std::invalid_argument("compare: reference has no mass on the support");

    ChiSquareResult chi;
    chi.pooled_bins = static_cast<int>(pooled.size());
    for (const Bin& bin : pooled) {
        const double d = bin.observed - bin.expected;
        chi.statistic += d * d / bin.expected;
    }
    chi.dof = std::max(1, chi.pooled_bins - 1);
    chi.critical_001 = chi_square_critical_001(chi.dof);
    chi.flag = chi.statistic > chi.critical_001;
    report.chi_square = chi;
    return report;
}

} // namespace qgb
