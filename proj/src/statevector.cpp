#include "qgb/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qgb {

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;

} // namespace

StateVector::StateVector(int num_qubits) : nq_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 30)
        throw std::invalid_argument("statevector: qubit count out of range");
    amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = Amplitude{1.0, 0.0};
}

void StateVector::apply_single(int q, const Amplitude m[2][2]) {
    const std::size_t d = std::size_t{1} << q;
    const std::size_t n = amps_.size();
    for (std::size_t base = 0; base < n; base += 2 * d) {
        for (std::size_t i = base; i < base + d; ++i) {
            const Amplitude a0 = amps_[i];
            const Amplitude a1 = amps_[i + d];
            amps_[i] = m[0][0] * a0 + m[0][1] * a1;
            amps_[i + d] = m[1][0] * a0 + m[1][1] * a1;
        }
    }
}

void StateVector::apply(const GateOp& op) {
    if (!kind_is_unitary(op.kind))
        throw std::invalid_argument(std::string("apply: non-unitary op ") + kind_name(op.kind));
    for (int q : op.qubits)
        if (q < 0 || q >= nq_) throw std::invalid_argument("apply: qubit index out of range");

    switch (op.kind) {
        case GateKind::H: {
            const Amplitude m[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
            apply_single(op.qubits[0], m);
            break;
        }
        case GateKind::X: {
            const std::size_t d = std::size_t{1} << op.qubits[0];
            for (std::size_t i = 0; i < amps_.size(); ++i)
                if (!(i & d)) std::swap(amps_[i], amps_[i | d]);
            break;
        }
        case GateKind::T:
        case GateKind::Tdg: {
            const double sign = op.kind == GateKind::T ? 1.0 : -1.0;
            const Amplitude phase{kInvSqrt2, sign * kInvSqrt2};
            const std::size_t d = std::size_t{1} << op.qubits[0];
            for (std::size_t i = 0; i < amps_.size(); ++i)
                if (i & d) amps_[i] *= phase;
            break;
        }
        case GateKind::Rx: {
            const double half = op.angle->value() / 2.0;
            const Amplitude c{std::cos(half), 0.0};
            const Amplitude s{0.0, -std::sin(half)};
            const Amplitude m[2][2] = {{c, s}, {s, c}};
            apply_single(op.qubits[0], m);
            break;
        }
        case GateKind::Cx: {
            const std::size_t ctrl = std::size_t{1} << op.qubits[0];
            const std::size_t tgt = std::size_t{1} << op.qubits[1];
            for (std::size_t i = 0; i < amps_.size(); ++i)
                if ((i & ctrl) && !(i & tgt)) std::swap(amps_[i], amps_[i | tgt]);
            break;
        }
        case GateKind::Swap: {
            const std::size_t a = std::size_t{1} << op.qubits[0];
            const std::size_t b = std::size_t{1} << op.qubits[1];
            for (std::size_t i = 0; i < amps_.size(); ++i)
                if ((i & a) && !(i & b)) std::swap(amps_[i], amps_[(i & ~a) | b]);
            break;
        }
        case GateKind::Cswap: {
            const std::size_t ctrl = std::size_t{1} << op.qubits[0];
            const std::size_t a = std::size_t{1} << op.qubits[1];
            const std::size_t b = std::size_t{1} << op.qubits[2];
            for (std::size_t i = 0; i < amps_.size(); ++i)
                if ((i & ctrl) && (i & a) && !(i & b))
                    std::swap(amps_[i], amps_[(i & ~a) | b]);
            break;
        }
        default:
            break; // unreachable
    }
}

double StateVector::probability_one(int q) const {
    if (q < 0 || q >= nq_) throw std::invalid_argument("measure: qubit index out of range");
    const std::size_t d = std::size_t{1} << q;
    double p = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (i & d) p += std::norm(amps_[i]);
    return p;
}

double StateVector::project(int q, int outcome) {
    const std::size_t d = std::size_t{1} << q;
    double weight = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i)
        if (((i & d) != 0) == (outcome != 0)) weight += std::norm(amps_[i]);
    if (weight < 1e-30)
        throw std::logic_error("project: zero-norm projection requested");
    const double scale = 1.0 / std::sqrt(weight);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (((i & d) != 0) == (outcome != 0))
            amps_[i] *= scale;
        else
            amps_[i] = Amplitude{0.0, 0.0};
    }
    return weight;
}

int StateVector::measure_collapse(int q, double randomness) {
    const double p1 = probability_one(q);
    const int outcome = randomness < p1 ? 1 : 0;
    project(q, outcome);
    return outcome;
}

void StateVector::reset_collapse(int q, double randomness) {
    if (measure_collapse(q, randomness) == 1)
        apply({GateKind::X, {q}, {}, {}});
}

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const Amplitude& a : amps_) total += std::norm(a);
    return total;
}

} // namespace qgb
