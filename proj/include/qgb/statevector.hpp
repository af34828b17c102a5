#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qgb/circuit.hpp"

namespace qgb {

using Amplitude = std::complex<double>;

/// Dense register of 2^nq complex amplitudes. Basis index bit k is qubit k
/// (qubit 0 is the least-significant bit).
class StateVector {
public:
    explicit StateVector(int num_qubits);

    int num_qubits() const noexcept { return nq_; }
    std::size_t size() const noexcept { return amps_.size(); }

    const Amplitude& operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<Amplitude>& amplitudes() const noexcept { return amps_; }

    /// Applies a unitary op (H, X, T, Tdg, Rx, Cx, Swap, Cswap) in place.
    /// Throws std::invalid_argument for Reset/Measure/Barrier.
    void apply(const GateOp& op);

    /// Probability of reading 1 on qubit q.
    double probability_one(int q) const;

    /// Born-rule collapse: outcome is 1 when randomness < P(1). The state
    /// is projected onto the outcome and renormalized.
    int measure_collapse(int q, double randomness);

    /// Measure-then-flip: qubit q is |0> with certainty afterwards.
    void reset_collapse(int q, double randomness);

    /// Projects onto qubit q == outcome and renormalizes; the projection
    /// weight is returned. Throws on a (near-)zero-norm projection.
    double project(int q, int outcome);

    double norm_squared() const;

private:
    void apply_single(int q, const Amplitude m[2][2]);

    int nq_;
    std::vector<Amplitude> amps_;
};

} // namespace qgb
