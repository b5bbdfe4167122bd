#pragma once

// Matrices shared by the unit tests and the acceptance binary.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "phaserank/io.hpp"
#include "phaserank/phase_matrix.hpp"

namespace fixtures {

using phaserank::PhaseMatrix;

inline PhaseMatrix inl(const std::string& s) { return phaserank::io::parse_inline_matrix(s); }

// 3x3, rank 2 with a known singular completion.
inline PhaseMatrix intro3() { return inl("1,1,1;1,i,-i;1,1,i"); }

inline PhaseMatrix theta1() { return inl("1,1,1;1,e^{i3pi/4},e^{-i pi/2};1,e^{-i pi/2},e^{i3pi/4}"); }
inline PhaseMatrix theta2() { return inl("1,1,1;1,i,i;1,i,-1"); }
inline PhaseMatrix theta3() { return inl("1,1,1;1,i,e^{i pi/3};1,e^{i pi/3},i"); }

inline PhaseMatrix scaled3() { return inl("1,1,1;i,e^{i pi/4},e^{i2pi/3};-i,e^{i7pi/6},e^{i4pi/3}"); }
inline PhaseMatrix covered3() { return inl("1,1,1;1,i,e^{i2pi/3};1,-i,e^{i pi/6}"); }
inline PhaseMatrix signs3x4() { return inl("1,1,1,1;1,1,-1,-1;1,-1,1,-1"); }

inline PhaseMatrix sign6() {
    return inl("1,1,1,1,-1,1;-1,1,-1,-1,-1,1;-1,1,-1,1,1,1;-1,-1,1,-1,-1,1;1,1,-1,-1,-1,-1;1,-1,-1,-1,-1,1");
}
inline PhaseMatrix four_i() { return inl("1,1,1,i;1,1,-1,1;1,-1,1,1;-1,1,1,1"); }
inline PhaseMatrix four_w() {
    return inl("1,1,1,1;1,-1,e^{i pi/4},e^{i pi/4};1,e^{i pi/4},-1,e^{i pi/4};1,e^{i pi/4},e^{i pi/4},-1");
}
inline PhaseMatrix eight() {
    return inl("-1,i,-1,i,i,-1,1,1;-1,i,i,i,-i,-i,-i,i;1,i,1,-1,i,i,-i,-1;1,i,1,1,i,1,1,i;"
               "1,i,-1,i,i,-i,-1,1;-i,-i,1,-i,i,-1,-i,-1;-1,i,-1,-i,i,i,-1,-i;i,-1,i,-i,1,-1,-i,-1");
}

// Values from tests/oracles/reference_values.json (numpy/cvxpy).
struct Reference {
    double forster, gamma2_star, forster_star;
};
inline constexpr Reference kSign6{1.7990292302183786, 2.026077907652858, 1.8706947673964145};
inline constexpr Reference kFour{1.5750607643982868, 1.6995577903556887, 1.670594230348222};
inline constexpr Reference kEight{1.838267053148286, 2.0334877678224803, 1.9126777519457134};

inline PhaseMatrix random_matrix(std::size_t n, std::size_t m, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, phaserank::kTwoPi);
    std::vector<phaserank::Angle> e;
    for (std::size_t k = 0; k < n * m; ++k) e.emplace_back(u(rng));
    return {n, m, std::move(e)};
}

inline std::vector<phaserank::Angle> random_angles(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, phaserank::kTwoPi);
    std::vector<phaserank::Angle> e;
    for (std::size_t k = 0; k < n; ++k) e.emplace_back(u(rng));
    return e;
}

}  // namespace fixtures
