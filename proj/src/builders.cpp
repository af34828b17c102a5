#include "qgb/builders.hpp"

#include <stdexcept>
#include <utility>

namespace qgb {

QgbSpec QgbSpec::unbiased(int levels) {
    QgbSpec spec;
    spec.levels = levels;
    spec.bias = BiasMode::Unbiased;
    return spec;
}

QgbSpec QgbSpec::uniform(int levels, Angle theta) {
    QgbSpec spec;
    spec.levels = levels;
    spec.bias = BiasMode::UniformAngle;
    spec.theta = theta;
    return spec;
}

QgbSpec QgbSpec::per_peg(int levels, std::vector<Angle> angles) {
    QgbSpec spec;
    spec.levels = levels;
    spec.bias = BiasMode::PerPeg;
    spec.peg_angles = std::move(angles);
    return spec;
}

PegBias PegBias::from_angle(Angle theta) {
    const double s = std::sin(theta.value() / 2.0);
    return PegBias{theta, s * s};
}

Circuit build_peg() {
    Circuit c(4, 2);
    c.h(0);
    c.x(2);
    c.cswap(0, 1, 2);
    c.cx(2, 0);
    c.cswap(0, 2, 3);
    c.measure(1, 0);
    c.measure(3, 1);
    return c;
}

Circuit build_biased_peg(Angle theta) {
    Circuit c(4, 2);
    c.reset(0);
    c.rx(theta, 0);
    c.x(2);
    c.cswap(0, 1, 2);
    c.cx(2, 0);
    c.cswap(0, 2, 3);
    c.measure(1, 0);
    c.measure(3, 1);
    return c;
}

namespace {

void check_levels(int levels) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
}

void check_angle(const Angle& theta) {
    if (!std::isfinite(theta.value()))
        throw std::invalid_argument("peg angle must be finite");
}

// One board level. Before level i the ball sits on positions
// {n+2-i, n+4-i, ..., n+i} and each of those carries a peg. A non-final
// level runs the leftmost peg as an ascending chain, rebalances the
// control off its upper output, then cascades the rest of the span
// downward from the right edge. The final level is a single ascending
// cascade over the whole span.
void emit_level(Circuit& c, int levels, int level) {
    const int lo = levels + 2 - level; // leftmost peg position
    const int hi = levels + level;     // rightmost peg position

    if (level == levels) {
        c.cswap(0, lo - 1, lo);
        for (int q = lo; q < hi; ++q) {
            c.cx(q, 0);
            c.cswap(0, q, q + 1);
        }
        c.cx(hi, 0);
        c.cswap(0, hi, hi + 1);
        return;
    }

    c.cswap(0, lo - 1, lo);
    c.cx(lo, 0);
    c.cswap(0, lo, lo + 1);
    if (level == 1) return;

    c.cx(lo + 1, 0);
    for (int q = hi; q >= lo + 2; --q) {
        c.cswap(0, q, q + 1);
        c.cx(q, 0);
    }
    c.cswap(0, lo + 1, lo + 2);
}

Circuit build_board(int levels, const std::optional<Angle>& theta) {
    check_levels(levels);
    if (theta) check_angle(*theta);
    Circuit c(2 * levels + 2, 2 * levels + 2);
    c.reset(0);
    c.x(levels + 1);
    for (int level = 1; level <= levels; ++level) {
        if (level > 1) c.reset(0);
        if (theta)
            c.rx(*theta, 0);
        else
            c.h(0);
        emit_level(c, levels, level);
    }
    for (int q = 1; q <= 2 * levels + 1; ++q) c.measure(q, q);
    return c;
}

} // namespace

Circuit build_qgb(int levels) { return build_board(levels, std::nullopt); }

Circuit build_biased_qgb(int levels, Angle theta) { return build_board(levels, theta); }

Circuit build_fine_grained_qgb(int levels, const std::vector<Angle>& peg_angles) {
    check_levels(levels);
    const std::size_t peg_total =
        static_cast<std::size_t>(levels) * (static_cast<std::size_t>(levels) + 1) / 2;
    if (peg_angles.size() != peg_total)
        throw std::invalid_argument("per-peg angle list must have n(n+1)/2 entries, got " +
                                    std::to_string(peg_angles.size()));
    for (const Angle& theta : peg_angles) check_angle(theta);

    Circuit c(2 * levels + 2, 2 * levels + 2);
    const int half = levels + 1; // register splits into q0..qn and q_{n+1}..q_{2n+1}

    c.reset(0);
    c.x(levels + 1);

    std::size_t next_angle = 0;
    for (int row = 1; row <= levels; ++row) {
        // Interior outputs of the previous row leave one mispark each; a
        // cx pulls the ball back down and a reset clears the upper line.
        // Both lists interleave with this row's first peg preparation.
        std::vector<int> fixes;
        for (int p = levels + 5 - row; p <= levels + row - 1; p += 2) fixes.push_back(p);

        for (int j = 0; j < row; ++j) {
            const int pos = levels + 2 - row + 2 * j;
            const bool first_of_board = row == 1 && j == 0;
            if (!first_of_board) c.reset(0);
            if (j == 0)
                for (int p : fixes) c.cx(p, p - 1);
            c.rx(peg_angles[next_angle++], 0);
            if (j == 0)
                for (int p : fixes) c.reset(p);
            c.cswap(0, pos - 1, pos);
            c.cx(pos, 0);
            c.cswap(0, pos, pos + 1);
        }

        if (row >= 2) {
            std::vector<int> lower, upper;
            for (int q = 0; q <= levels; ++q) lower.push_back(q);
            for (int q = half; q <= 2 * levels + 1; ++q) upper.push_back(q);
            c.barrier(std::move(lower));
            c.barrier(std::move(upper));
        }
    }

    // Corrections for the last row sit between its barriers and the
    // measures.
    for (int p = 4; p <= 2 * levels; p += 2) c.cx(p, p - 1);
    for (int p = 4; p <= 2 * levels; p += 2) c.reset(p);

    for (int q = 1; q <= 2 * levels + 1; ++q) c.measure(q, q);
    return c;
}

Circuit build(const QgbSpec& spec) {
    switch (spec.bias) {
        case BiasMode::Unbiased: return build_qgb(spec.levels);
        case BiasMode::UniformAngle: return build_biased_qgb(spec.levels, spec.theta);
        case BiasMode::PerPeg: return build_fine_grained_qgb(spec.levels, spec.peg_angles);
    }
    throw std::logic_error("unknown bias mode");
}

long long gate_bound(int levels, BoardVariant variant) {
    if (levels < 1) throw std::invalid_argument("levels must be >= 1");
    const long long n = levels;
    switch (variant) {
        case BoardVariant::Unbiased: return 2 * n * n + 5 * n + 2;
        case BoardVariant::Biased: return 3 * (n * n + n) + n + 2;
        case BoardVariant::Fine: return 3 * n * n + 3 * n + 1;
    }
    throw std::logic_error("unknown board variant");
}

} // namespace qgb
