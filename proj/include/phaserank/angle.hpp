#pragma once

#include <complex>
#include <cstdint>
#include <numbers>

namespace phaserank {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point of the unit circle, stored as its argument in [0, 2pi).
class Angle {
public:
    constexpr Angle() = default;

    /// Reduces `radians` modulo 2pi. Throws DomainError on NaN or infinity.
    explicit Angle(double radians);

    /// Exact reduction of p*pi/q: the integer residue is taken before converting
    /// to floating point, so e.g. from_pi_fraction(-1, 2) == from_pi_fraction(3, 2).
    static Angle from_pi_fraction(std::int64_t p, std::int64_t q);

    [[nodiscard]] constexpr double radians() const { return value_; }
    [[nodiscard]] std::complex<double> unit() const { return std::polar(1.0, value_); }

    Angle operator+(Angle other) const;
    Angle operator-(Angle other) const;
    Angle operator-() const;
    Angle& operator+=(Angle other) { return *this = *this + other; }

    friend bool operator==(Angle, Angle) = default;

private:
    double value_ = 0.0;
};

/// x mod 2pi in [0, 2pi).
Angle canonical_angle(double x);

/// Shortest arc length between two points of the circle, in [0, pi].
double circular_distance(Angle a, Angle b);

/// Argument of a nonzero complex number. Throws DomainError for 0.
Angle arg_of(std::complex<double> z);

}  // namespace phaserank
