#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstdint>
#include <variant>

#include "qgb/builders.hpp"
#include "qgb/circuit.hpp"
#include "qgb/decompose.hpp"
#include "qgb/errors.hpp"
#include "qgb/qasm.hpp"
#include "qgb/simulate.hpp"
#include "qgb/statevector.hpp"
#include "qgb/stats.hpp"

namespace py = pybind11;

namespace {

// Angles arrive either as radians or as expression strings like "2pi/3".
qgb::Angle to_angle(const std::variant<double, std::string>& value) {
    if (std::holds_alternative<double>(value))
        return qgb::Angle::radians(std::get<double>(value));
    return qgb::qasm::parse_angle_expr(std::get<std::string>(value));
}

std::vector<qgb::Angle> to_angles(const std::vector<std::variant<double, std::string>>& values) {
    std::vector<qgb::Angle> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(to_angle(v));
    return out;
}

qgb::BoardVariant variant_from_name(const std::string& name) {
    if (name == "unbiased") return qgb::BoardVariant::Unbiased;
    if (name == "biased") return qgb::BoardVariant::Biased;
    if (name == "fine") return qgb::BoardVariant::Fine;
    throw std::invalid_argument("variant must be 'unbiased', 'biased' or 'fine'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quantum Galton board circuits: builders, statevector simulation, "
              "OpenQASM 2.0 subset I/O and output statistics";

    py::register_exception<qgb::ParseError>(m, "QasmParseError", PyExc_ValueError);
    py::register_exception<qgb::ValidationError>(m, "CircuitValidationError", PyExc_ValueError);
    py::register_exception<qgb::DecodeError>(m, "DecodeError", PyExc_ValueError);
    py::register_exception<qgb::BranchBudgetError>(m, "BranchBudgetError", PyExc_RuntimeError);

    py::class_<qgb::Circuit>(m, "Circuit")
        .def_readonly("num_qubits", &qgb::Circuit::nq)
        .def_readonly("num_clbits", &qgb::Circuit::nc)
        .def("__len__", [](const qgb::Circuit& c) { return c.ops.size(); })
        .def("__eq__", [](const qgb::Circuit& a, const qgb::Circuit& b) { return a == b; })
        .def("__repr__",
             [](const qgb::Circuit& c) {
                 return "<Circuit qubits=" + std::to_string(c.nq) +
                        " clbits=" + std::to_string(c.nc) +
                        " ops=" + std::to_string(c.ops.size()) + ">";
             })
        .def("depth", [](const qgb::Circuit& c) { return qgb::depth(c); })
        .def("gate_counts", [](const qgb::Circuit& c) {
            py::dict out;
            for (const auto& [kind, count] : qgb::gate_count(c).by_kind)
                out[qgb::kind_name(kind)] = count;
            return out;
        });

    m.def("build_peg", &qgb::build_peg, "Single unbiased peg circuit");
    m.def(
        "build_biased_peg",
        [](const std::variant<double, std::string>& theta) {
            return qgb::build_biased_peg(to_angle(theta));
        },
        py::arg("theta"), "Peg with a leading reset and Rx(theta) split");
    m.def("build_qgb", &qgb::build_qgb, py::arg("levels"), "Unbiased n-level board");
    m.def(
        "build_biased_qgb",
        [](int levels, const std::variant<double, std::string>& theta) {
            return qgb::build_biased_qgb(levels, to_angle(theta));
        },
        py::arg("levels"), py::arg("theta"), "Board with every H replaced by Rx(theta)");
    m.def(
        "build_fine_grained_qgb",
        [](int levels, const std::vector<std::variant<double, std::string>>& angles) {
            return qgb::build_fine_grained_qgb(levels, to_angles(angles));
        },
        py::arg("levels"), py::arg("angles"),
        "Board with one Rx per peg; angles are row-major, top row first");
    m.def(
        "gate_bound",
        [](int levels, const std::string& variant) {
            return qgb::gate_bound(levels, variant_from_name(variant));
        },
        py::arg("levels"), py::arg("variant"),
        "Closed-form gate-count ceiling: 'unbiased', 'biased' or 'fine'");

    m.def("validate", &qgb::validate_or_throw, py::arg("circuit"),
          "Raises CircuitValidationError on the first structural violation");
    m.def("decompose_cswap", &qgb::decompose_cswap, py::arg("circuit"),
          "Expand every cswap over {cx, h, t, tdg}");

    m.def("emit_qasm", &qgb::qasm::emit, py::arg("circuit"), py::arg("qreg_name") = "q",
          py::arg("creg_name") = "c", "OpenQASM 2.0 text for a circuit");
    m.def(
        "parse_qasm",
        [](const std::string& text) { return qgb::qasm::lower(qgb::qasm::parse(text)); },
        py::arg("text"), "Parse OpenQASM 2.0 subset text into a Circuit");
    m.def("qasm_token_equal", &qgb::qasm::token_equal, py::arg("a"), py::arg("b"),
          "Whitespace-insensitive token-stream equality of two QASM texts");

    m.def(
        "run_shot",
        [](const qgb::Circuit& c, std::uint64_t seed, std::uint64_t index) {
            return qgb::run_shot(c, seed, index).bits;
        },
        py::arg("circuit"), py::arg("seed"), py::arg("shot_index"),
        "One deterministic shot; returns the readout bitstring");
    m.def(
        "run_shots",
        [](const qgb::Circuit& c, std::uint64_t shots, std::uint64_t seed, int workers) {
            return qgb::run_shots(c, shots, seed, workers).entries;
        },
        py::arg("circuit"), py::arg("shots"), py::arg("seed"), py::arg("workers") = 1,
        "Histogram of seeded shots; independent of the worker count");
    m.def(
        "exact_distribution",
        [](const qgb::Circuit& c) { return qgb::exact_distribution(c).entries; },
        py::arg("circuit"), "Exact outcome probabilities by branch enumeration");
    m.def(
        "prefix_state",
        [](const qgb::Circuit& c) {
            const qgb::StateVector sv = qgb::prefix_state(c);
            return std::vector<std::complex<double>>(sv.amplitudes());
        },
        py::arg("circuit"), "Statevector amplitudes just before the first measure");

    m.def("decode_one_hot", &qgb::decode_one_hot, py::arg("bits"), py::arg("levels"),
          "Map a one-hot readout string to its bin 0..levels");
    m.def(
        "rescale_blocks",
        [](const std::vector<int>& values, int block_size) {
            return qgb::rescale_blocks(values, block_size);
        },
        py::arg("values"), py::arg("block_size"),
        "Sums of consecutive disjoint blocks; the trailing stub is dropped");
    m.def(
        "summary_stats",
        [](const std::vector<int>& values) {
            const qgb::SummaryStats s = qgb::summary_stats(values);
            py::dict out;
            out["mean"] = s.mean;
            out["stddev"] = s.stddev;
            out["variance"] = s.variance;
            return out;
        },
        py::arg("values"), "Population mean/stddev/variance");
    m.def(
        "binomial_pmf",
        [](int n, double p) { return qgb::binomial_reference(n, p).pmf; },
        py::arg("n"), py::arg("p"), "Binomial(n, p) pmf over 0..n");
    m.def(
        "total_variation",
        [](const std::map<int, double>& a, const std::map<int, double>& b) {
            return qgb::total_variation(a, b);
        },
        py::arg("a"), py::arg("b"), "TV distance between two integer-keyed pmfs");
}
