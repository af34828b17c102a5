#include "qgb/angle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qgb {

namespace {

Rational reduce(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("angle: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

} // namespace

Angle Angle::pi_ratio(std::int64_t num, std::int64_t den) {
    Angle a;
    a.exact_ = reduce(num, den);
    a.radians_ = std::numbers::pi * static_cast<double>(a.exact_->num) /
                 static_cast<double>(a.exact_->den);
    return a;
}

Angle Angle::radians(double value) {
    Angle a;
    a.radians_ = value;
    return a;
}

std::string Angle::to_qasm() const {
    if (exact_) {
        const auto [num, den] = *exact_;
        std::string out;
        if (num == 0) return "0";
        if (num == -1) out = "-pi";
        else if (num == 1) out = "pi";
        else out = std::to_string(num) + "*pi";
        if (den != 1) out += "/" + std::to_string(den);
        return out;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", radians_);
    return buf;
}

bool Angle::operator==(const Angle& other) const {
    if (exact_.has_value() != other.exact_.has_value()) return false;
    if (exact_) return *exact_ == *other.exact_;
    const double scale = std::max(1.0, std::max(std::abs(radians_), std::abs(other.radians_)));
    return std::abs(radians_ - other.radians_) <= 1e-11 * scale;
}

} // namespace qgb
