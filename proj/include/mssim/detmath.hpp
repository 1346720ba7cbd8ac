// Platform-stable elementary math for the simulation core.
//
// libm transcendentals (sin, cos, pow) are not bit-identical across C
// libraries, which would break cross-platform reproducibility of runs.
// The helpers here use only IEEE-754 +,-,* (compiled with FP contraction
// off), so every platform computes the same bits. Accuracy is ~1 ulp,
// far below anything the model can observe.

#pragma once

namespace mssim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

/// Unit step vector for a heading in degrees.
/// Convention: 0 deg = +x, 90 deg = +y (math convention, CCW).
Vec2 heading_vector(double heading_deg);

/// x^e. Integer exponents in [0, 64] use binary exponentiation
/// (deterministic); anything else falls back to std::pow.
double pow_det(double x, double e);

/// Normalize an angle in degrees to [0, 360).
double norm_deg(double d);

} // namespace mssim
