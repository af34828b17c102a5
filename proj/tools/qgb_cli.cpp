// Command-line front end: builds Galton board circuits, simulates them,
// post-processes results and reports gate-count analyses. Machine output
// is JSON (results) and CSV (histograms); every file output gets a
// manifest so runs can be reproduced bit for bit.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgb/builders.hpp"
#include "qgb/circuit.hpp"
#include "qgb/decompose.hpp"
#include "qgb/errors.hpp"
#include "qgb/qasm.hpp"
#include "qgb/rng.hpp"
#include "qgb/simulate.hpp"
#include "qgb/stats.hpp"

using json = nlohmann::json;

namespace {

constexpr const char* kToolVersion = "0.1.0";
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitRuntime = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + path + "'");
    out << contents;
}

int worker_count() {
    if (const char* env = std::getenv("QGB_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(std::min(hw, 8u));
}

// --- circuit input shared by simulate/count -------------------------------

struct CircuitInput {
    std::string qasm_file; // empty when built from flags
    int levels = 0;
    std::string bias_theta;      // expression text, empty = unbiased
    std::string peg_angles_file; // per-peg mode

    bool from_flags() const { return qasm_file.empty(); }
};

std::vector<qgb::Angle> load_peg_angles(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<qgb::Angle> angles;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto slash = line.find("//"); slash != std::string::npos)
            line.erase(slash);
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        const auto end = line.find_last_not_of(" \t\r");
        angles.push_back(qgb::qasm::parse_angle_expr(line.substr(begin, end - begin + 1)));
    }
    return angles;
}

qgb::QgbSpec spec_from_input(const CircuitInput& input) {
    if (input.levels < 1) throw UsageError("--levels must be >= 1");
    if (!input.bias_theta.empty() && !input.peg_angles_file.empty())
        throw UsageError("--bias-theta and --peg-angles are mutually exclusive");
    if (!input.peg_angles_file.empty())
        return qgb::QgbSpec::per_peg(input.levels, load_peg_angles(input.peg_angles_file));
    if (!input.bias_theta.empty())
        return qgb::QgbSpec::uniform(input.levels,
                                     qgb::qasm::parse_angle_expr(input.bias_theta));
    return qgb::QgbSpec::unbiased(input.levels);
}

qgb::Circuit load_circuit(const CircuitInput& input) {
    if (!input.from_flags()) {
        const qgb::Circuit circuit = qgb::qasm::lower(qgb::qasm::parse(read_file(input.qasm_file)));
        qgb::validate_or_throw(circuit);
        return circuit;
    }
    return qgb::build(spec_from_input(input));
}

json manifest_for(const std::string& command, const CircuitInput& input) {
    json m;
    m["command"] = command;
    m["tool"] = "qgb";
    m["version"] = kToolVersion;
    if (input.from_flags()) {
        m["levels"] = input.levels;
        if (!input.peg_angles_file.empty()) {
            m["bias"] = "per-peg";
            json angles = json::array();
            for (const auto& a : load_peg_angles(input.peg_angles_file))
                angles.push_back(a.to_qasm());
            m["peg_angles"] = angles;
        } else if (!input.bias_theta.empty()) {
            m["bias"] = "uniform";
            m["theta"] = qgb::qasm::parse_angle_expr(input.bias_theta).to_qasm();
        } else {
            m["bias"] = "unbiased";
        }
    } else {
        m["input"] = input.qasm_file;
    }
    return m;
}

void emit_output(const std::string& text, const std::string& out_path, const json& manifest) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    write_file(out_path, text);
    write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
}

// --- build ----------------------------------------------------------------

int cmd_build(const CircuitInput& input, const std::string& out_path) {
    const qgb::Circuit circuit = qgb::build(spec_from_input(input));
    json manifest = manifest_for("build", input);
    if (!out_path.empty()) manifest["outputs"] = json::array({out_path});
    emit_output(qgb::qasm::emit(circuit), out_path, manifest);
    return 0;
}

// --- simulate ---------------------------------------------------------------

int cmd_simulate(const CircuitInput& input, std::uint64_t shots, std::uint64_t seed,
                 bool exact, const std::string& out_path) {
    const qgb::Circuit circuit = load_circuit(input);
    json manifest = manifest_for("simulate", input);
    manifest["exact"] = exact;
    if (!out_path.empty()) manifest["outputs"] = json::array({out_path});

    json doc;
    if (exact) {
        const qgb::OutcomeDistribution dist = qgb::exact_distribution(circuit);
        json probs;
        for (const auto& [bits, p] : dist.entries) probs[bits] = p;
        doc["probabilities"] = probs;
    } else {
        manifest["shots"] = shots;
        manifest["seed"] = seed;
        const qgb::Histogram hist = qgb::run_shots(circuit, shots, seed, worker_count());
        json counts;
        for (const auto& [bits, count] : hist.entries) counts[bits] = count;
        doc["counts"] = counts;
        doc["shots"] = shots;
        doc["seed"] = seed;
    }
    doc["manifest"] = manifest;

    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

// --- analyze ----------------------------------------------------------------

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string histogram_csv(const std::map<int, std::uint64_t>& counts, int lo, int hi) {
    std::string csv = "value,count\n";
    for (int v = lo; v <= hi; ++v) {
        const auto it = counts.find(v);
        csv += std::to_string(v) + "," +
               std::to_string(it == counts.end() ? std::uint64_t{0} : it->second) + "\n";
    }
    return csv;
}

int infer_levels(const json& doc) {
    if (doc.contains("manifest") && doc["manifest"].contains("levels"))
        return doc["manifest"]["levels"].get<int>();
    const json& table = doc.contains("counts") ? doc["counts"] : doc["probabilities"];
    for (auto it = table.begin(); it != table.end(); ++it) {
        const int nc = static_cast<int>(it.key().size());
        if (nc >= 4 && nc % 2 == 0) return (nc - 2) / 2;
        break;
    }
    throw UsageError("cannot infer board levels from the results file");
}

int cmd_analyze(const std::string& results_path, int block, const std::string& reference,
                double p, std::optional<double> normal_mu, std::optional<double> normal_var,
                const std::string& out_path) {
    json doc;
    try {
        doc = json::parse(read_file(results_path));
    } catch (const json::parse_error& e) {
        throw qgb::ParseError(1, 1, std::string("results file: ") + e.what());
    }
    const int levels = infer_levels(doc);
    std::ostringstream report;
    report << "levels: " << levels << "\n";

    json manifest;
    manifest["command"] = "analyze";
    manifest["tool"] = "qgb";
    manifest["version"] = kToolVersion;
    manifest["input"] = results_path;
    manifest["block"] = block;
    manifest["reference"] = reference;

    if (doc.contains("probabilities")) {
        // Exact-distribution input: moments and distances only.
        std::map<int, double> decoded;
        double skipped = 0.0;
        for (auto it = doc["probabilities"].begin(); it != doc["probabilities"].end(); ++it) {
            try {
                decoded[qgb::decode_one_hot(it.key(), levels)] += it.value().get<double>();
            } catch (const qgb::DecodeError&) {
                skipped += it.value().get<double>();
            }
        }
        double mean = qgb::distribution_mean(decoded);
        double var = 0.0;
        for (const auto& [v, prob] : decoded) var += (v - mean) * (v - mean) * prob;
        report << "exact distribution input\n";
        report << "excluded probability mass (non-one-hot): " << format_double(skipped) << "\n";
        report << "mean: " << format_double(mean) << "\n";
        report << "variance: " << format_double(var) << "\n";
        if (reference == "binomial") {
            const auto ref = qgb::binomial_reference(levels, p);
            std::map<int, double> ref_map;
            for (int v = ref.lo; v <= ref.hi; ++v) ref_map[v] = ref.at(v);
            report << "reference: binomial(" << levels << ", " << format_double(p) << ")\n";
            report << "tv_distance: " << format_double(qgb::total_variation(decoded, ref_map))
                   << "\n";
        }
        std::cout << report.str();
        if (!out_path.empty()) {
            std::string csv = "value,probability\n";
            for (const auto& [v, prob] : decoded)
                csv += std::to_string(v) + "," + format_double(prob) + "\n";
            write_file(out_path, csv);
            manifest["outputs"] = json::array({out_path});
            write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
        }
        return 0;
    }

    if (!doc.contains("counts")) throw UsageError("results file has no counts or probabilities");
    const std::uint64_t seed = doc.contains("seed") ? doc["seed"].get<std::uint64_t>() : 0;

    std::map<int, std::uint64_t> decoded_counts;
    std::map<std::string, std::uint64_t> rejected;
    std::uint64_t good = 0;
    for (auto it = doc["counts"].begin(); it != doc["counts"].end(); ++it) {
        const std::uint64_t count = it.value().get<std::uint64_t>();
        try {
            decoded_counts[qgb::decode_one_hot(it.key(), levels)] += count;
            good += count;
        } catch (const qgb::DecodeError&) {
            rejected[it.key()] += count;
        }
    }
    if (good == 0) throw UsageError("no decodable outcomes in the results file");

    // The stored histogram has no shot order, so the per-shot sequence is
    // rebuilt as a seeded deterministic shuffle of the decoded multiset;
    // block sums then have the statistics of independent draws.
    std::vector<int> sequence;
    sequence.reserve(good);
    for (const auto& [value, count] : decoded_counts)
        for (std::uint64_t k = 0; k < count; ++k) sequence.push_back(value);
    qgb::ShotRng rng(seed, 0x616e616c797a65ull);
    for (std::size_t i = sequence.size(); i > 1; --i)
        std::swap(sequence[i - 1], sequence[rng.next_u64() % i]);

    const qgb::SummaryStats stats = qgb::summary_stats(sequence);
    report << "samples: " << good << "\n";
    std::uint64_t bad = 0;
    for (const auto& [bits, count] : rejected) bad += count;
    report << "excluded non-one-hot outcomes: " << bad << "\n";
    for (const auto& [bits, count] : rejected)
        report << "  rejected '" << bits << "': " << count << "\n";
    report << "mean: " << format_double(stats.mean) << "\n";
    report << "stddev: " << format_double(stats.stddev) << "\n";
    report << "variance: " << format_double(stats.variance) << "\n";

    const std::vector<int> block_sums = qgb::rescale_blocks(sequence, block);
    std::map<int, std::uint64_t> block_counts;
    for (int s : block_sums) ++block_counts[s];
    if (!block_sums.empty()) {
        const qgb::SummaryStats bstats = qgb::summary_stats(block_sums);
        report << "block_size: " << block << "\n";
        report << "blocks: " << block_sums.size() << "\n";
        report << "block_mean: " << format_double(bstats.mean) << "\n";
        report << "block_variance: " << format_double(bstats.variance) << "\n";
    }

    if (reference == "binomial") {
        const auto ref = qgb::binomial_reference(levels, p);
        const qgb::ComparisonReport cmp = qgb::compare(decoded_counts, ref);
        report << "reference: binomial(" << levels << ", " << format_double(p) << ")\n";
        report << "tv_distance: " << format_double(cmp.total_variation) << "\n";
        report << "chi_square: " << format_double(cmp.chi_square->statistic) << " (dof "
               << cmp.chi_square->dof << ", critical@0.001 "
               << format_double(cmp.chi_square->critical_001) << ")\n";
        report << "chi_square_flag: " << (cmp.chi_square->flag ? "exceeded" : "ok") << "\n";
    } else if (reference == "normal" && !block_sums.empty()) {
        const qgb::SummaryStats bstats = qgb::summary_stats(block_sums);
        const double mu = normal_mu.value_or(bstats.mean);
        const double var = normal_var.value_or(bstats.variance);
        const auto ref = qgb::normal_reference(mu, var, 0, block * levels);
        const qgb::ComparisonReport cmp = qgb::compare(block_counts, ref);
        report << "reference: normal(" << format_double(mu) << ", " << format_double(var)
               << ") on block sums\n";
        report << "tv_distance: " << format_double(cmp.total_variation) << "\n";
        report << "chi_square: " << format_double(cmp.chi_square->statistic) << " (dof "
               << cmp.chi_square->dof << ", critical@0.001 "
               << format_double(cmp.chi_square->critical_001) << ")\n";
        report << "chi_square_flag: " << (cmp.chi_square->flag ? "exceeded" : "ok") << "\n";
    }

    std::cout << report.str();

    if (!out_path.empty()) {
        write_file(out_path, histogram_csv(decoded_counts, 0, levels));
        std::string blocks_path = out_path;
        const auto dot = blocks_path.rfind('.');
        blocks_path.insert(dot == std::string::npos ? blocks_path.size() : dot, "_blocks");
        write_file(blocks_path, histogram_csv(block_counts, 0, block * levels));
        manifest["outputs"] = json::array({out_path, blocks_path});
        write_file(out_path + ".manifest.json", manifest.dump(2) + "\n");
    }
    return 0;
}

// --- count ------------------------------------------------------------------

int cmd_count(const CircuitInput& input) {
    const qgb::Circuit circuit = load_circuit(input);
    const qgb::GateCounts counts = qgb::gate_count(circuit);

    std::cout << "qubits: " << circuit.nq << "  clbits: " << circuit.nc << "\n";
    std::cout << "counts:";
    for (const auto& [kind, count] : counts.by_kind)
        std::cout << " " << qgb::kind_name(kind) << "=" << count;
    std::cout << "\n";
    std::cout << "active total: " << counts.total_active
              << " (barriers: " << counts.barriers << ")\n";
    std::cout << "depth: " << qgb::depth(circuit) << "\n";

    // Variant heuristics for file input: rx + barriers = per-peg board,
    // rx alone = uniformly biased, h alone = unbiased.
    const bool has_rx = counts.by_kind.count(qgb::GateKind::Rx) > 0;
    const bool has_barrier = counts.barriers > 0;
    qgb::BoardVariant variant = qgb::BoardVariant::Unbiased;
    std::string variant_name = "unbiased";
    if (input.from_flags()) {
        if (!input.peg_angles_file.empty()) {
            variant = qgb::BoardVariant::Fine;
            variant_name = "fine-grained";
        } else if (!input.bias_theta.empty()) {
            variant = qgb::BoardVariant::Biased;
            variant_name = "biased";
        }
    } else if (has_rx && has_barrier) {
        variant = qgb::BoardVariant::Fine;
        variant_name = "fine-grained";
    } else if (has_rx) {
        variant = qgb::BoardVariant::Biased;
        variant_name = "biased";
    }

    if (circuit.nq >= 4 && circuit.nq % 2 == 0) {
        const int levels = (circuit.nq - 2) / 2;
        const long long bound = qgb::gate_bound(levels, variant);
        std::cout << "variant: " << variant_name << " (levels=" << levels << ")\n";
        std::cout << "formula bound: " << bound << "\n";
        if (static_cast<long long>(counts.total_active) > bound)
            std::cout << "note: active total " << counts.total_active
                      << " exceeds the closed-form total " << bound << "\n";
    }

    const qgb::GateCounts decomposed = qgb::gate_count(qgb::decompose_cswap(circuit));
    std::cout << "decomposed active total: " << decomposed.total_active << " (";
    bool first = true;
    for (const auto& [kind, count] : decomposed.by_kind) {
        if (kind == qgb::GateKind::Barrier) continue;
        if (!first) std::cout << " ";
        std::cout << qgb::kind_name(kind) << "=" << count;
        first = false;
    }
    std::cout << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Galton board circuits: build, simulate, analyze, count"};
    app.require_subcommand(1);

    CircuitInput build_input;
    std::string build_out;
    auto* build = app.add_subcommand("build", "Emit a board circuit as OpenQASM 2.0");
    build->add_option("--levels", build_input.levels, "Board levels (>= 1)")->required();
    build->add_option("--bias-theta", build_input.bias_theta,
                      "Uniform bias angle expression, e.g. 2pi/3");
    build->add_option("--peg-angles", build_input.peg_angles_file,
                      "File with one angle expression per peg");
    build->add_option("--out", build_out, "Output .qasm path (default: stdout)");

    CircuitInput sim_input;
    std::uint64_t shots = 20000;
    std::uint64_t seed = 1;
    bool exact = false;
    std::string sim_out;
    auto* simulate = app.add_subcommand("simulate", "Run shots or the exact distribution");
    simulate->add_option("input", sim_input.qasm_file, "Input .qasm file");
    simulate->add_option("--levels", sim_input.levels, "Build the board instead of reading a file");
    simulate->add_option("--bias-theta", sim_input.bias_theta, "Uniform bias angle expression");
    simulate->add_option("--peg-angles", sim_input.peg_angles_file, "Per-peg angle file");
    simulate->add_option("--shots", shots, "Number of shots (default 20000)");
    simulate->add_option("--seed", seed, "Random seed (default 1)");
    simulate->add_flag("--exact", exact, "Exact outcome probabilities instead of sampling");
    simulate->add_option("--out", sim_out, "Output .json path (default: stdout)");

    std::string analyze_results;
    int block = 8;
    std::string reference = "binomial";
    double ref_p = 0.5;
    std::optional<double> normal_mu, normal_var;
    std::string analyze_out;
    auto* analyze = app.add_subcommand("analyze", "Decode, rescale and compare results");
    analyze->add_option("results", analyze_results, "Results .json from simulate")->required();
    analyze->add_option("--block", block, "Block size for rescaling (default 8)");
    analyze->add_option("--reference", reference, "Reference law: binomial or normal")
        ->check(CLI::IsMember({"binomial", "normal"}));
    analyze->add_option("--p", ref_p, "Binomial success probability (default 0.5)");
    analyze->add_option("--normal-mu", normal_mu, "Normal mean (default: block sample mean)");
    analyze->add_option("--normal-var", normal_var,
                        "Normal variance (default: block sample variance)");
    analyze->add_option("--out", analyze_out, "Decoded histogram .csv path");

    CircuitInput count_input;
    auto* count = app.add_subcommand("count", "Gate counts, depth and formula bounds");
    count->add_option("input", count_input.qasm_file, "Input .qasm file");
    count->add_option("--levels", count_input.levels, "Build the board instead of reading a file");
    count->add_option("--bias-theta", count_input.bias_theta, "Uniform bias angle expression");
    count->add_option("--peg-angles", count_input.peg_angles_file, "Per-peg angle file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build(build_input, build_out);
        if (simulate->parsed()) {
            if (sim_input.qasm_file.empty() && sim_input.levels < 1)
                throw UsageError("simulate needs an input file or --levels");
            if (!sim_input.qasm_file.empty() && sim_input.levels >= 1)
                throw UsageError("give either an input file or --levels, not both");
            if (!exact && shots == 0) throw UsageError("--shots must be >= 1");
            return cmd_simulate(sim_input, shots, seed, exact, sim_out);
        }
        if (analyze->parsed())
            return cmd_analyze(analyze_results, block, reference, ref_p, normal_mu, normal_var,
                               analyze_out);
        if (count->parsed()) {
            if (count_input.qasm_file.empty() && count_input.levels < 1)
                throw UsageError("count needs an input file or --levels");
            return cmd_count(count_input);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qgb::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const qgb::ValidationError& e) {
        std::cerr << "invalid circuit: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}
