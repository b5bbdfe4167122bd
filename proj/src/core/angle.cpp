#include "phaserank/angle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "phaserank/errors.hpp"

namespace phaserank {

namespace {

double reduce(double x) {
    double r = std::fmod(x, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // r + 2pi can round up to exactly 2pi for tiny negative r.
    if (r >= kTwoPi) r = 0.0;
    return r;
}

}  // namespace

Angle::Angle(double radians) {
    if (!std::isfinite(radians)) throw DomainError("angle must be finite");
    value_ = reduce(radians);
}

Angle Angle::from_pi_fraction(std::int64_t p, std::int64_t q) {
    if (q == 0) throw DomainError("angle denominator must be nonzero");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
        p /= g;
        q /= g;
    }
    const std::int64_t period = 2 * q;
    std::int64_t r = p % period;
    if (r < 0) r += period;
    Angle a;
    a.value_ = kPi * static_cast<double>(r) / static_cast<double>(q);
    return a;
}

Angle Angle::operator+(Angle other) const {
    Angle a;
    double v = value_ + other.value_;
    if (v >= kTwoPi) v -= kTwoPi;
    a.value_ = v >= kTwoPi ? 0.0 : v;
    return a;
}

Angle Angle::operator-() const {
    Angle a;
    a.value_ = value_ == 0.0 ? 0.0 : reduce(kTwoPi - value_);
    return a;
}

Angle Angle::operator-(Angle other) const { return *this + (-other); }

Angle canonical_angle(double x) { return Angle(x); }

double circular_distance(Angle a, Angle b) {
    const double d = std::fabs(a.radians() - b.radians());
    return std::min(d, kTwoPi - d);
}

Angle arg_of(std::complex<double> z) {
    if (z == std::complex<double>(0.0, 0.0)) throw DomainError("zero has no phase");
    return Angle(std::arg(z));
}

}  // namespace phaserank
