#include "qgb/circuit.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "qgb/errors.hpp"

namespace qgb {

const char* kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "h";
        case GateKind::X: return "x";
        case GateKind::T: return "t";
        case GateKind::Tdg: return "tdg";
        case GateKind::Rx: return "rx";
        case GateKind::Cx: return "cx";
        case GateKind::Swap: return "swap";
        case GateKind::Cswap: return "cswap";
        case GateKind::Reset: return "reset";
        case GateKind::Measure: return "measure";
        case GateKind::Barrier: return "barrier";
    }
    return "?";
}

int kind_arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::T:
        case GateKind::Tdg:
        case GateKind::Rx:
        case GateKind::Reset:
        case GateKind::Measure:
            return 1;
        case GateKind::Cx:
        case GateKind::Swap:
            return 2;
        case GateKind::Cswap:
            return 3;
        case GateKind::Barrier:
            return 0;
    }
    return 0;
}

bool kind_is_unitary(GateKind kind) {
    switch (kind) {
        case GateKind::Reset:
        case GateKind::Measure:
        case GateKind::Barrier:
            return false;
        default:
            return true;
    }
}

bool GateOp::operator==(const GateOp& other) const {
    return kind == other.kind && qubits == other.qubits && clbit == other.clbit &&
           angle == other.angle;
}

bool Circuit::operator==(const Circuit& other) const {
    return nq == other.nq && nc == other.nc && ops == other.ops;
}

Circuit& Circuit::h(int q) {
    ops.push_back({GateKind::H, {q}, {}, {}});
    return *this;
}

Circuit& Circuit::x(int q) {
    ops.push_back({GateKind::X, {q}, {}, {}});
    return *this;
}

Circuit& Circuit::t(int q) {
    ops.push_back({GateKind::T, {q}, {}, {}});
    return *this;
}

Circuit& Circuit::tdg(int q) {
    ops.push_back({GateKind::Tdg, {q}, {}, {}});
    return *this;
}

Circuit& Circuit::rx(Angle theta, int q) {
    ops.push_back({GateKind::Rx, {q}, {}, theta});
    return *this;
}

Circuit& Circuit::cx(int control, int target) {
    ops.push_back({GateKind::Cx, {control, target}, {}, {}});
    return *this;
}

Circuit& Circuit::swap(int a, int b) {
    ops.push_back({GateKind::Swap, {a, b}, {}, {}});
    return *this;
}

Circuit& Circuit::cswap(int control, int a, int b) {
    ops.push_back({GateKind::Cswap, {control, a, b}, {}, {}});
    return *this;
}

Circuit& Circuit::reset(int q) {
    ops.push_back({GateKind::Reset, {q}, {}, {}});
    return *this;
}

Circuit& Circuit::measure(int q, int c) {
    ops.push_back({GateKind::Measure, {q}, c, {}});
    return *this;
}

Circuit& Circuit::barrier(std::vector<int> qubits) {
    ops.push_back({GateKind::Barrier, std::move(qubits), {}, {}});
    return *this;
}

namespace {

std::optional<ValidationIssue> check_op(const Circuit& circuit, std::size_t index) {
    const GateOp& op = circuit.ops[index];
    const int arity = kind_arity(op.kind);

    if (op.kind == GateKind::Barrier) {
        if (op.qubits.empty() || op.qubits.size() > static_cast<std::size_t>(circuit.nq))
            return ValidationIssue{index, "arity", "barrier operand count out of range"};
    } else if (op.qubits.size() != static_cast<std::size_t>(arity)) {
        return ValidationIssue{index, "arity",
                               std::string(kind_name(op.kind)) + " expects " +
                                   std::to_string(arity) + " qubit operand(s)"};
    }

    for (int q : op.qubits)
        if (q < 0 || q >= circuit.nq)
            return ValidationIssue{index, "qubit-range",
                                   "qubit index " + std::to_string(q) + " out of range"};

    for (std::size_t i = 0; i < op.qubits.size(); ++i)
        for (std::size_t j = i + 1; j < op.qubits.size(); ++j)
            if (op.qubits[i] == op.qubits[j])
                return ValidationIssue{index, "duplicate-qubit",
                                       std::string(kind_name(op.kind)) +
                                           " repeats qubit operand " +
                                           std::to_string(op.qubits[i])};

    if (op.kind == GateKind::Measure) {
        if (!op.clbit)
            return ValidationIssue{index, "measure-clbit", "measure without classical target"};
        if (*op.clbit < 0 || *op.clbit >= circuit.nc)
            return ValidationIssue{index, "clbit-range",
                                   "classical index " + std::to_string(*op.clbit) +
                                       " out of range"};
    } else if (op.clbit) {
        return ValidationIssue{index, "measure-clbit",
                               "classical operand on a non-measure op"};
    }

    if (op.kind == GateKind::Rx) {
        if (!op.angle) return ValidationIssue{index, "rx-angle", "rx without angle"};
    } else if (op.angle) {
        return ValidationIssue{index, "rx-angle", "angle on a non-rx op"};
    }

    return std::nullopt;
}

} // namespace

std::optional<ValidationIssue> validate(const Circuit& circuit) {
    if (circuit.nq < 1)
        return ValidationIssue{std::numeric_limits<std::size_t>::max(), "registers",
                               "circuit needs at least one qubit"};
    if (circuit.nc < 0)
        return ValidationIssue{std::numeric_limits<std::size_t>::max(), "registers",
                               "negative classical register size"};
    for (std::size_t i = 0; i < circuit.ops.size(); ++i)
        if (auto issue = check_op(circuit, i)) return issue;
    return std::nullopt;
}

void validate_or_throw(const Circuit& circuit) {
    if (auto issue = validate(circuit))
        throw ValidationError(issue->op_index, issue->rule,
                              "op " + std::to_string(issue->op_index) + ": " + issue->message);
}

GateCounts gate_count(const Circuit& circuit) {
    GateCounts counts;
    for (const GateOp& op : circuit.ops) {
        ++counts.by_kind[op.kind];
        if (op.kind == GateKind::Barrier)
            ++counts.barriers;
        else
            ++counts.total_active;
    }
    return counts;
}

int depth(const Circuit& circuit) {
    // busy[i] = last occupied layer of that wire; classical wires follow
    // the qubit wires in the table.
    std::vector<int> busy(static_cast<std::size_t>(circuit.nq) + circuit.nc, 0);
    int max_layer = 0;
    for (const GateOp& op : circuit.ops) {
        if (op.kind == GateKind::Barrier) {
            int fence = 0;
            for (int q : op.qubits) fence = std::max(fence, busy[q]);
            for (int q : op.qubits) busy[q] = fence;
            continue;
        }
        int layer = 0;
        for (int q : op.qubits) layer = std::max(layer, busy[q]);
        if (op.clbit) layer = std::max(layer, busy[circuit.nq + *op.clbit]);
        ++layer;
        for (int q : op.qubits) busy[q] = layer;
        if (op.clbit) busy[circuit.nq + *op.clbit] = layer;
        max_layer = std::max(max_layer, layer);
    }
    return max_layer;
}

} // namespace qgb
