#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace qgb {

/// Reduced fraction num/den with den > 0.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend bool operator==(const Rational&, const Rational&) = default;
};

/// Rotation angle in radians. When the angle is an exact rational multiple
/// of pi, the fraction is kept alongside the float so emitters can print
/// expressions like `2*pi/3` verbatim while the simulator uses the float.
class Angle {
public:
    Angle() = default;

    /// Angle of pi*num/den radians, fraction stored in lowest terms.
    static Angle pi_ratio(std::int64_t num, std::int64_t den);

    /// Plain numeric angle with no exact form.
    static Angle radians(double value);

    double value() const noexcept { return radians_; }
    const std::optional<Rational>& exact() const noexcept { return exact_; }

    /// QASM spelling: exact form (`pi/2`, `2*pi/3`, `-pi`) when available,
    /// otherwise a decimal with 12 significant digits.
    std::string to_qasm() const;

    bool operator==(const Angle& other) const;

private:
    std::optional<Rational> exact_;
    double radians_ = 0.0;
};

} // namespace qgb
