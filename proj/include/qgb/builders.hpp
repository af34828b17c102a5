#pragma once

#include <cmath>
#include <vector>

#include "qgb/angle.hpp"
#include "qgb/circuit.hpp"

namespace qgb {

/// Bias mode of a Galton board circuit.
enum class BiasMode {
    Unbiased,     // Hadamard split at every level
    UniformAngle, // one Rx(theta) shared by every level
    PerPeg,       // an independent Rx(theta) per peg
};

/// Requested board: number of levels plus bias mode. PerPeg carries
/// n(n+1)/2 angles, row-major with the top row first and pegs left to
/// right within a row.
struct QgbSpec {
    int levels = 1;
    BiasMode bias = BiasMode::Unbiased;
    Angle theta;                  // UniformAngle only
    std::vector<Angle> peg_angles; // PerPeg only

    static QgbSpec unbiased(int levels);
    static QgbSpec uniform(int levels, Angle theta);
    static QgbSpec per_peg(int levels, std::vector<Angle> angles);
};

/// Split behaviour of one peg: the ball takes the lower-index output with
/// probability sin^2(theta/2).
struct PegBias {
    Angle theta;
    double p_left = 0.5;

    static PegBias from_angle(Angle theta);
};

/// Single peg on four qubits: H q0; X q2; cswap(q0;q1,q2); cx(q2,q0);
/// cswap(q0;q2,q3); measures q1->c0 and q3->c1. The pre-measure state is
/// (|0011> + |1001>)/sqrt(2) in |q3 q2 q1 q0> order.
Circuit build_peg();

/// Peg with a leading reset and Rx(theta) in place of H. theta = 2*pi/3
/// sends the ball to q1 with probability 3/4.
Circuit build_biased_peg(Angle theta);

/// n-level Galton board on 2n+2 qubits (q0 is the recycled control) and
/// 2n+2 classical bits. The ball starts on q_{n+1}; every level is
/// prefixed by reset q0 (the first one lands before the ball X) then H;
/// all working qubits q1..q_{2n+1} are measured to c1..c_{2n+1}.
///
/// Level bodies follow the traversal the n=4 reference circuit uses:
/// a non-final level runs its leftmost peg as an ascending
/// cswap/cx/cswap chain, rebalances the control off that peg's upper
/// output, then sweeps the remaining span right-to-left as a descending
/// cascade; the final level is one full ascending cascade across all
/// pegs. Every level ends with the control recycled, so level splits
/// stay independent and the decoded output is Binomial(n, 1/2).
Circuit build_qgb(int levels);

/// build_qgb with every H replaced by Rx(theta).
Circuit build_biased_qgb(int levels, Angle theta);

/// Per-peg board: each peg gets its own reset + Rx(theta_i) preparation
/// and pegs run left-to-right, top row first (the same order as the
/// angle list). Rows >= 2 end with a pair of barriers across the lower
/// and upper register halves; each row after the first leaves one
/// mispark per interior output, fixed by a cx + reset pair per peg
/// except the leftmost (emitted with the next row's first prep, or
/// before the measures after the last row).
Circuit build_fine_grained_qgb(int levels, const std::vector<Angle>& peg_angles);

/// Circuit for a QgbSpec.
Circuit build(const QgbSpec& spec);

enum class BoardVariant { Unbiased, Biased, Fine };

/// Closed-form gate-count ceiling per variant:
/// unbiased 2n^2+5n+2, biased 3(n^2+n)+n+2, fine-grained 3n^2+3n+1.
long long gate_bound(int levels, BoardVariant variant);

} // namespace qgb
