#include "qgb/qasm.hpp"

namespace qgb::qasm {

namespace {

void append_qubit_list(std::string& out, const std::vector<int>& qubits,
                       const std::string& reg) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (i) out += ',';
        out += reg + "[" + std::to_string(qubits[i]) + "]";
    }
}

} // namespace

std::string emit(const Circuit& circuit, const std::string& qreg_name,
                 const std::string& creg_name) {
    std::string out;
    out.reserve(64 + circuit.ops.size() * 24);
    out += "OPENQASM 2.0;\n";
    out += "include \"qelib1.inc\";\n\n";
    out += "qreg " + qreg_name + "[" + std::to_string(circuit.nq) + "];\n";
    out += "creg " + creg_name + "[" + std::to_string(circuit.nc) + "];\n\n";

    for (const GateOp& op : circuit.ops) {
        switch (op.kind) {
            case GateKind::Rx:
                out += "rx(" + op.angle->to_qasm() + ") ";
                append_qubit_list(out, op.qubits, qreg_name);
                break;
            case GateKind::Measure:
                out += "measure ";
                append_qubit_list(out, op.qubits, qreg_name);
                out += " -> " + creg_name + "[" + std::to_string(*op.clbit) + "]";
                break;
            default:
                out += kind_name(op.kind);
                out += ' ';
                append_qubit_list(out, op.qubits, qreg_name);
                break;
        }
        out += ";\n";
    }
    return out;
}

} // namespace qgb::qasm
