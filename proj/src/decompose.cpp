#include "qgb/decompose.hpp"

namespace qgb {

namespace {

// Textbook Toffoli over Clifford+T: 6 cx and 9 single-qubit gates.
void emit_toffoli(Circuit& out, int c1, int c2, int target) {
    out.h(target);
    out.cx(c2, target);
    out.tdg(target);
    out.cx(c1, target);
    out.t(target);
    out.cx(c2, target);
    out.tdg(target);
    out.cx(c1, target);
    out.t(target);
    out.h(target);
    out.t(c2);
    out.cx(c1, c2);
    out.t(c1);
    out.tdg(c2);
    out.cx(c1, c2);
}

} // namespace

Circuit decompose_cswap(const Circuit& circuit) {
    Circuit out(circuit.nq, circuit.nc);
    out.ops.reserve(circuit.ops.size());
    for (const GateOp& op : circuit.ops) {
        if (op.kind != GateKind::Cswap) {
            out.ops.push_back(op);
            continue;
        }
        const int control = op.qubits[0];
        const int a = op.qubits[1];
        const int b = op.qubits[2];
        out.cx(b, a);
        emit_toffoli(out, control, a, b);
        out.cx(b, a);
    }
    return out;
}

} // namespace qgb
