#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qgb/angle.hpp"

namespace qgb {

enum class GateKind {
    H,
    X,
    T,
    Tdg,
    Rx,
    Cx,
    Swap,
    Cswap,
    Reset,
    Measure,
    Barrier,
};

/// QASM mnemonic for the gate kind ("h", "cswap", ...).
const char* kind_name(GateKind kind);

/// Fixed qubit arity per kind; 0 for Barrier (variable, 1..nq).
int kind_arity(GateKind kind);

bool kind_is_unitary(GateKind kind);

/// One circuit instruction. For Cx the order is (control, target); for
/// Cswap it is (control, target, target), matching `cswap q[c],q[a],q[b]`.
struct GateOp {
    GateKind kind;
    std::vector<int> qubits;
    std::optional<int> clbit;   // present iff kind == Measure
    std::optional<Angle> angle; // present iff kind == Rx

    bool operator==(const GateOp& other) const;
};

/// Ordered instruction list over one quantum and one classical register.
/// Treated as immutable once a builder or the QASM front-end returns it.
struct Circuit {
    int nq = 0;
    int nc = 0;
    std::vector<GateOp> ops;

    Circuit() = default;
    Circuit(int num_qubits, int num_clbits) : nq(num_qubits), nc(num_clbits) {}

    Circuit& h(int q);
    Circuit& x(int q);
    Circuit& t(int q);
    Circuit& tdg(int q);
    Circuit& rx(Angle theta, int q);
    Circuit& cx(int control, int target);
    Circuit& swap(int a, int b);
    Circuit& cswap(int control, int a, int b);
    Circuit& reset(int q);
    Circuit& measure(int q, int c);
    Circuit& barrier(std::vector<int> qubits);

    bool operator==(const Circuit& other) const;
};

/// First structural rule violated by a circuit, if any.
struct ValidationIssue {
    std::size_t op_index; // SIZE_MAX for circuit-level issues
    std::string rule;
    std::string message;
};

/// Checks register bounds, per-kind arity, distinct qubit operands, the
/// Measure<->clbit pairing and the Rx<->angle pairing. Returns nullopt
/// when every invariant holds.
std::optional<ValidationIssue> validate(const Circuit& circuit);

/// Throwing form of validate().
void validate_or_throw(const Circuit& circuit);

struct GateCounts {
    std::map<GateKind, std::size_t> by_kind;
    std::size_t total_active = 0; // everything except barriers, measures included
    std::size_t barriers = 0;
};

GateCounts gate_count(const Circuit& circuit);

/// Greedy left-to-right layering depth. An op lands in the earliest layer
/// where all its qubit/clbit operands are free; a barrier fences its
/// operands to a common layer boundary and adds no depth of its own.
int depth(const Circuit& circuit);

} // namespace qgb
