// Acceptance suite: runs every release criterion at its pinned tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails. Everything here finishes in well under a minute.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "qgb/builders.hpp"
#include "qgb/circuit.hpp"
#include "qgb/decompose.hpp"
#include "qgb/qasm.hpp"
#include "qgb/simulate.hpp"
#include "qgb/statevector.hpp"
#include "qgb/stats.hpp"

namespace fs = std::filesystem;
using namespace qgb;

namespace {

int failures = 0;
std::vector<std::string> pending_notes;

void note(std::string text) { pending_notes.push_back(std::move(text)); }

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    pending_notes.clear();
    try {
        body();
        std::printf("[%2d] PASS %s\n", number, label.c_str());
    } catch (const std::exception& e) {
        ++failures;
        std::printf("[%2d] FAIL %s: %s\n", number, label.c_str(), e.what());
    }
    for (const std::string& line : pending_notes) std::printf("     %s\n", line.c_str());
    pending_notes.clear();
}

void require(bool ok, const std::string& detail) {
    if (!ok) throw std::runtime_error(detail);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::map<int, double> reference_map(const ReferenceDistribution& ref) {
    std::map<int, double> out;
    for (int v = ref.lo; v <= ref.hi; ++v) out[v] = ref.at(v);
    return out;
}

double linf(const std::map<int, double>& a, const std::map<int, double>& b) {
    double worst = 0.0;
    for (const auto& [k, v] : a) {
        const auto it = b.find(k);
        worst = std::max(worst, std::abs(v - (it == b.end() ? 0.0 : it->second)));
    }
    for (const auto& [k, v] : b)
        if (!a.count(k)) worst = std::max(worst, std::abs(v));
    return worst;
}

double linf(const OutcomeDistribution& a, const OutcomeDistribution& b) {
    double worst = 0.0;
    for (const auto& [k, v] : a.entries) {
        const auto it = b.entries.find(k);
        worst = std::max(worst, std::abs(v - (it == b.entries.end() ? 0.0 : it->second)));
    }
    for (const auto& [k, v] : b.entries)
        if (!a.entries.count(k)) worst = std::max(worst, std::abs(v));
    return worst;
}

DecodedSamples decoded_run(const Circuit& board, int levels, std::uint64_t shots,
                           std::uint64_t seed) {
    std::vector<int> values;
    values.reserve(shots);
    for (std::uint64_t i = 0; i < shots; ++i)
        values.push_back(decode_one_hot(run_shot(board, seed, i).bits, levels));
    return DecodedSamples::from_values(std::move(values), levels);
}

} // namespace

int main() {
    const std::uint64_t kSeed = 20220831;

    criterion(1, "binomial law: exact decode of the n-level board, n = 1..5, Linf <= 1e-10", [] {
        for (int n = 1; n <= 5; ++n) {
            const auto decoded = decode_distribution(exact_distribution(build_qgb(n)), n);
            const double d = linf(decoded, reference_map(binomial_reference(n, 0.5)));
            require(d <= 1e-10, "n=" + std::to_string(n) + " Linf=" + fmt(d));
        }
    });

    criterion(2, "peg state: pre-measure state equals (|0011>+|1001>)/sqrt(2) within 1e-12", [] {
        const StateVector sv = prefix_state(build_peg());
        const double amp = 1.0 / std::numbers::sqrt2;
        for (std::size_t i = 0; i < sv.size(); ++i) {
            const Amplitude expected =
                (i == 3 || i == 9) ? Amplitude(amp, 0.0) : Amplitude(0.0, 0.0);
            require(std::abs(sv[i] - expected) <= 1e-12,
                    "component " + std::to_string(i) + " off by " +
                        fmt(std::abs(sv[i] - expected)));
        }
    });

    criterion(3, "3-peg ratios: one-hot probabilities 0.25/0.5/0.25 within 1e-12", [] {
        const OutcomeDistribution dist = exact_distribution(build_qgb(2));
        require(dist.entries.size() == 3, "expected 3 outcomes");
        require(std::abs(dist.entries.at("000010") - 0.25) <= 1e-12, "p(bin 0)");
        require(std::abs(dist.entries.at("001000") - 0.50) <= 1e-12, "p(bin 1)");
        require(std::abs(dist.entries.at("100000") - 0.25) <= 1e-12, "p(bin 2)");
    });

    criterion(4, "biased peg: 2pi/3 gives 0.75/0.25 within 1e-10 and pi/3 flips it", [] {
        const OutcomeDistribution heavy = exact_distribution(build_biased_peg(Angle::pi_ratio(2, 3)));
        require(std::abs(heavy.entries.at("01") - 0.75) <= 1e-10, "upper at 2pi/3");
        require(std::abs(heavy.entries.at("10") - 0.25) <= 1e-10, "lower at 2pi/3");
        const OutcomeDistribution light = exact_distribution(build_biased_peg(Angle::pi_ratio(1, 3)));
        require(std::abs(light.entries.at("01") - 0.25) <= 1e-10, "upper at pi/3");
        require(std::abs(light.entries.at("10") - 0.75) <= 1e-10, "lower at pi/3");
    });

    static DecodedSamples run4; // criterion 5's samples, reused by criterion 6
    criterion(5, "shot statistics: 20000 seeded shots of the 4-level board", [&] {
        run4 = decoded_run(build_qgb(4), 4, 20000, kSeed);
        const SummaryStats stats = summary_stats(run4);
        require(stats.mean >= 1.95 && stats.mean <= 2.05, "mean " + fmt(stats.mean));
        require(stats.variance >= 0.93 && stats.variance <= 1.07,
                "variance " + fmt(stats.variance));
        note("mean " + fmt(stats.mean) + ", variance " + fmt(stats.variance));
    });

    criterion(6, "block rescale: 2500 block-8 sums with mean 16 +/- 0.3, variance 8 +/- 1", [] {
        require(run4.values.size() == 20000, "criterion 5 run missing");
        const std::vector<int> sums = rescale_blocks(run4, 8);
        require(sums.size() == 2500, "block count " + std::to_string(sums.size()));
        const SummaryStats stats = summary_stats(sums);
        require(std::abs(stats.mean - 16.0) <= 0.3, "block mean " + fmt(stats.mean));
        require(std::abs(stats.variance - 8.0) <= 1.0, "block variance " + fmt(stats.variance));
        note("block mean " + fmt(stats.mean) + ", block variance " + fmt(stats.variance));
    });

    criterion(7, "biased board: sampled mean within 0.10 of the oracle mean", [&] {
        const Circuit board = build_biased_qgb(4, Angle::pi_ratio(2, 3));
        const double oracle_mean =
            distribution_mean(decode_distribution(exact_distribution(board), 4));
        const DecodedSamples values = decoded_run(board, 4, 20000, kSeed + 1);
        const SummaryStats stats = summary_stats(values);
        require(std::abs(stats.mean - oracle_mean) <= 0.10,
                "sampled " + fmt(stats.mean) + " vs oracle " + fmt(oracle_mean));
        note("oracle mean " + fmt(oracle_mean) + ", sampled mean " + fmt(stats.mean));
        const double reported = 2.66; // previously published sampled mean
        if (std::abs(reported - oracle_mean) > 0.25) {
            note("FINDING: published mean " + fmt(reported) + " is " +
                 fmt(std::abs(reported - oracle_mean)) + " away from the oracle mean " +
                 fmt(oracle_mean) + "; it matches the mirrored decode (4 - mean = " +
                 fmt(4.0 - oracle_mean) + ") instead");
        }
    });

    criterion(8, "corpus conformance: emitted circuits token-equal the references, re-emit fixed point", [] {
        const std::string dir = QGB_CORPUS_DIR;
        const std::vector<Angle> angles(10, Angle::pi_ratio(2, 3));
        const std::pair<std::string, Circuit> cases[] = {
            {dir + "/qgb4_unbiased.qasm", build_qgb(4)},
            {dir + "/qgb4_biased.qasm", build_biased_qgb(4, Angle::pi_ratio(2, 3))},
            {dir + "/qgb4_fine_grained.qasm", build_fine_grained_qgb(4, angles)},
        };
        for (const auto& [path, circuit] : cases) {
            const std::string reference = read_file(path);
            const std::string emitted = qasm::emit(circuit);
            require(qasm::token_equal(emitted, reference), "token mismatch against " + path);
            const Circuit reparsed = qasm::lower(qasm::parse(reference));
            require(reparsed == circuit, "parse->lower differs from builder for " + path);
            require(qasm::emit(reparsed) == emitted, "re-emit not a fixed point for " + path);
        }
    });

    criterion(9, "gate-count identities and bounds for n = 1..8", [] {
        for (int n = 1; n <= 8; ++n) {
            const auto unbiased = gate_count(build_qgb(n));
            require(unbiased.total_active ==
                        static_cast<std::size_t>(gate_bound(n, BoardVariant::Unbiased)),
                    "unbiased total at n=" + std::to_string(n));
            const auto biased = gate_count(build_biased_qgb(n, Angle::pi_ratio(2, 3)));
            require(static_cast<long long>(biased.total_active) <=
                        gate_bound(n, BoardVariant::Biased),
                    "biased bound at n=" + std::to_string(n));
        }
        const Circuit fine = build_fine_grained_qgb(4, std::vector<Angle>(10, Angle::pi_ratio(2, 3)));
        const GateCounts counts = gate_count(fine);
        require(counts.by_kind.at(GateKind::Cswap) == 20, "fine cswap count");
        require(counts.by_kind.at(GateKind::Cx) == 16, "fine cx count");
        require(counts.by_kind.at(GateKind::Rx) == 10, "fine rx count");
        require(counts.by_kind.at(GateKind::Reset) == 16, "fine reset count");
        require(counts.by_kind.at(GateKind::X) == 1, "fine x count");
        require(counts.by_kind.at(GateKind::Measure) == 9, "fine measure count");
        note("fine-grained actual active total " + std::to_string(counts.total_active) +
             " vs closed form " + std::to_string(gate_bound(4, BoardVariant::Fine)) +
             " (the closed form counts fewer measures and no paired resets)");
    });

    criterion(10, "decomposition soundness: cswap expansion keeps distributions, Linf <= 1e-10", [] {
        for (const Circuit& c : {build_peg(), build_biased_peg(Angle::pi_ratio(2, 3))}) {
            const double d = linf(exact_distribution(c), exact_distribution(decompose_cswap(c)));
            require(d <= 1e-10, "Linf " + fmt(d));
        }
    });

    criterion(11, "fine-grained reduction: all-pi/2 board matches unbiased for n = 2..4", [] {
        for (int n = 2; n <= 4; ++n) {
            const std::vector<Angle> angles(static_cast<std::size_t>(n) * (n + 1) / 2,
                                            Angle::pi_ratio(1, 2));
            const double d = linf(exact_distribution(build_fine_grained_qgb(n, angles)),
                                  exact_distribution(build_qgb(n)));
            require(d <= 1e-10, "n=" + std::to_string(n) + " Linf=" + fmt(d));
        }
    });

    criterion(12, "determinism: repeated seeded simulate is byte-identical across worker counts", [] {
        const fs::path dir = fs::temp_directory_path() / "qgb_acceptance";
        fs::create_directories(dir);
        const std::string out = (dir / "run.json").string();
        const std::string base = std::string(QGB_CLI_PATH) +
                                 " simulate --levels 2 --shots 2000 --seed 7 --out " + out +
                                 " 2>/dev/null";
        std::string reference;
        for (const char* env : {"QGB_WORKERS=1 ", "QGB_WORKERS=1 ", "QGB_WORKERS=4 ",
                                "QGB_WORKERS=3 ", ""}) {
            const int status = std::system((env + base).c_str());
            require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
                    "simulate invocation failed");
            const std::string bytes = read_file(out);
            if (reference.empty())
                reference = bytes;
            else
                require(bytes == reference, "output bytes changed between runs");
        }
    });

    if (failures == 0) {
        std::printf("acceptance: all 12 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
