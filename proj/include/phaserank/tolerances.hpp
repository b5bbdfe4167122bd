#pragma once

namespace phaserank::tol {

/// Slack for circular-gap comparisons against pi (radians).
inline constexpr double kAngle = 1e-9;
/// Relative-interior LP margin must exceed this to count as interior.
inline constexpr double kLp = 1e-9;
/// A 2x2 minor of unit entries is treated as zero below this modulus.
inline constexpr double kMinor = 1e-9;
/// LP margins inside [-kBoundaryBand, kBoundaryBand] are flagged as boundary cases.
inline constexpr double kBoundaryBand = 10.0 * kLp;
/// Two unit points closer than this are merged for plotting.
inline constexpr double kDedup = 1e-9;

}  // namespace phaserank::tol
