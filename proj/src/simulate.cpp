#include "qgb/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

#include "qgb/errors.hpp"
#include "qgb/rng.hpp"

namespace qgb {

namespace {

std::string render_bits(const std::vector<std::uint8_t>& cbits) {
    std::string out(cbits.size(), '0');
    for (std::size_t i = 0; i < cbits.size(); ++i)
        if (cbits[cbits.size() - 1 - i]) out[i] = '1';
    return out;
}

} // namespace

ShotResult run_shot(const Circuit& circuit, std::uint64_t seed, std::uint64_t shot_index) {
    StateVector state(circuit.nq);
    std::vector<std::uint8_t> cbits(static_cast<std::size_t>(circuit.nc), 0);
    ShotRng rng(seed, shot_index);
    for (const GateOp& op : circuit.ops) {
        switch (op.kind) {
            case GateKind::Measure:
                cbits[static_cast<std::size_t>(*op.clbit)] =
                    static_cast<std::uint8_t>(state.measure_collapse(op.qubits[0], rng.next_unit()));
                break;
            case GateKind::Reset:
                state.reset_collapse(op.qubits[0], rng.next_unit());
                break;
            case GateKind::Barrier:
                break;
            default:
                state.apply(op);
                break;
        }
    }
    return ShotResult{render_bits(cbits)};
}

Histogram run_shots(const Circuit& circuit, std::uint64_t shots, std::uint64_t seed,
                    int workers) {
    if (shots == 0) throw std::invalid_argument("run_shots: shots must be >= 1");
    workers = std::max(1, workers);
    const std::uint64_t max_useful = shots < 64 ? 1 : shots / 64;
    workers = static_cast<int>(std::min<std::uint64_t>(workers, max_useful));

    std::vector<std::map<std::string, std::uint64_t>> partials(workers);
    auto run_range = [&](int w, std::uint64_t begin, std::uint64_t end) {
        auto& local = partials[w];
        for (std::uint64_t i = begin; i < end; ++i) ++local[run_shot(circuit, seed, i).bits];
    };

    if (workers == 1) {
        run_range(0, 0, shots);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (shots + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
            const std::uint64_t end = std::min(shots, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_range, w, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    Histogram hist;
    hist.shots = shots;
    for (const auto& local : partials)
        for (const auto& [bits, count] : local) hist.entries[bits] += count;
    return hist;
}

namespace {

struct BranchFrame {
    StateVector state;
    std::vector<std::uint8_t> cbits;
    std::size_t next_op;
    double weight;
};

// Branches lighter than this are numerical dust from angles like pi whose
// cos(pi/2) is not exactly zero; dropping them loses < 1e-20 of mass.
constexpr double kBranchPrune = 1e-24;

} // namespace

OutcomeDistribution exact_distribution(const Circuit& circuit, std::uint64_t branch_budget) {
    OutcomeDistribution dist;
    std::vector<BranchFrame> stack;
    stack.push_back({StateVector(circuit.nq),
                     std::vector<std::uint8_t>(static_cast<std::size_t>(circuit.nc), 0), 0, 1.0});
    std::uint64_t forks = 0;

    while (!stack.empty()) {
        BranchFrame frame = std::move(stack.back());
        stack.pop_back();

        bool vanished = false;
        for (std::size_t idx = frame.next_op; idx < circuit.ops.size(); ++idx) {
            const GateOp& op = circuit.ops[idx];
            if (op.kind == GateKind::Barrier) continue;
            if (kind_is_unitary(op.kind)) {
                frame.state.apply(op);
                continue;
            }

            const int q = op.qubits[0];
            const double p1 = frame.state.probability_one(q);
            const double w1 = frame.weight * p1;
            const double w0 = frame.weight * (1.0 - p1);
            const bool keep1 = w1 > kBranchPrune;
            const bool keep0 = w0 > kBranchPrune;

            if (keep0 && keep1) {
                if (++forks > branch_budget)
                    throw BranchBudgetError("exact_distribution: branch budget exceeded");
                BranchFrame other{frame.state, frame.cbits, idx + 1, w0};
                other.state.project(q, 0);
                if (op.kind == GateKind::Measure)
                    other.cbits[static_cast<std::size_t>(*op.clbit)] = 0;
                stack.push_back(std::move(other));

                frame.state.project(q, 1);
                frame.weight = w1;
            } else if (keep1) {
                frame.state.project(q, 1);
                frame.weight = w1;
            } else if (keep0) {
                frame.state.project(q, 0);
                frame.weight = w0;
            } else {
                vanished = true;
                break;
            }

            const int outcome = keep1 ? 1 : 0;
            if (op.kind == GateKind::Measure) {
                frame.cbits[static_cast<std::size_t>(*op.clbit)] =
                    static_cast<std::uint8_t>(outcome);
            } else if (outcome == 1) {
                frame.state.apply({GateKind::X, {q}, {}, {}});
            }
        }

        if (!vanished) dist.entries[render_bits(frame.cbits)] += frame.weight;
    }
    return dist;
}

StateVector prefix_state(const Circuit& circuit) {
    StateVector state(circuit.nq);
    for (const GateOp& op : circuit.ops) {
        if (op.kind == GateKind::Measure) break;
        if (op.kind == GateKind::Barrier) continue;
        if (op.kind == GateKind::Reset) {
            const double p1 = state.probability_one(op.qubits[0]);
            if (p1 > 1e-12 && p1 < 1.0 - 1e-12)
                throw std::logic_error("prefix_state: non-deterministic reset in prefix");
            state.reset_collapse(op.qubits[0], 0.5);
            continue;
        }
        state.apply(op);
    }
    return state;
}

} // namespace qgb
