#include "mssim/detmath.hpp"

#include <cmath>

namespace mssim {

namespace {

constexpr double kDegToRad = 0.017453292519943295; // pi / 180

// Minimax kernels for |r| <= pi/4 (coefficients from fdlibm's
// __kernel_sin / __kernel_cos, SunPro). Polynomial evaluation only,
// so results are reproducible bit-for-bit.
double kernel_sin(double r) {
    constexpr double S1 = -1.66666666666666324348e-01;
    constexpr double S2 = 8.33333333332248946124e-03;
    constexpr double S3 = -1.98412698298579493134e-04;
    constexpr double S4 = 2.75573137070700676789e-06;
    constexpr double S5 = -2.50507602534068634195e-08;
    constexpr double S6 = 1.58969099521155010221e-10;
    const double z = r * r;
    const double v = z * r;
    const double t = S2 + z * (S3 + z * (S4 + z * (S5 + z * S6)));
    return r + v * (S1 + z * t);
}

double kernel_cos(double r) {
    constexpr double C1 = 4.16666666666666019037e-02;
    constexpr double C2 = -1.38888888888741095749e-03;
    constexpr double C3 = 2.48015872894767294178e-05;
    constexpr double C4 = -2.75573143513906633035e-07;
    constexpr double C5 = 2.08757232129817482790e-09;
    constexpr double C6 = -1.13596475577881948265e-11;
    const double z = r * r;
    const double t = z * (C1 + z * (C2 + z * (C3 + z * (C4 + z * (C5 + z * C6)))));
    return 1.0 - 0.5 * z + t;
}

} // namespace

double norm_deg(double d) {
    double r = std::fmod(d, 360.0); // fmod is exact per IEEE-754
    if (r < 0.0) r += 360.0;
    if (r >= 360.0) r = 0.0;
    return r;
}

Vec2 heading_vector(double heading_deg) {
    const double d = norm_deg(heading_deg);

    // Reduce to [0, 45] degrees via quadrant and sin/cos swap symmetry.
    int quadrant = static_cast<int>(d / 90.0);
    if (quadrant > 3) quadrant = 3;
    double u = d - 90.0 * quadrant; // in [0, 90)
    bool swapped = false;
    if (u > 45.0) {
        u = 90.0 - u;
        swapped = true;
    }
    const double r = u * kDegToRad; // <= pi/4
    double s = kernel_sin(r);
    double c = kernel_cos(r);
    if (swapped) {
        const double tmp = s;
        s = c;
        c = tmp;
    }

    switch (quadrant) {
        case 0: return {c, s};
        case 1: return {-s, c};
        case 2: return {-c, -s};
        default: return {s, -c};
    }
}

double pow_det(double x, double e) {
    const double rounded = std::nearbyint(e);
    if (e == rounded && e >= 0.0 && e <= 64.0) {
        auto n = static_cast<unsigned>(rounded);
        double result = 1.0;
        double base = x;
        while (n > 0) {
            if (n & 1U) result *= base;
            base *= base;
            n >>= 1U;
        }
        return result;
    }
    return std::pow(x, e);
}

} // namespace mssim
