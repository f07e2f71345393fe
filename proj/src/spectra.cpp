#include "opo/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace opo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double golden_section_min(double lo, double hi, const auto& f) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 200 && (b - a) > 1e-10; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

double joint_spectrum(const CovarianceMatrix& cov, JointSpectrumSelector sel) {
    if (cov.has_joints) {
        if (sel.quadrature == Quadrature::amplitude)
            return sel.sign == CombinationSign::difference ? cov.joints.sx_minus
                                                           : cov.joints.sx_plus;
        return sel.sign == CombinationSign::difference ? cov.joints.sp_minus
                                                       : cov.joints.sp_plus;
    }
    const int i = sel.quadrature == Quadrature::amplitude ? 0 : 1;
    const int j = i + 2;
    const double v1 = cov.m(i, i);
    const double v2 = cov.m(j, j);
    const double c = cov.m(i, j);
    if (!std::isfinite(v1) || !std::isfinite(v2) || !std::isfinite(c)) return kInf;
    const double s = sel.sign == CombinationSign::difference ? -1.0 : 1.0;
    return 0.5 * (v1 + v2 + 2.0 * s * c);
}

double sx_minus_closed(const OperatingPoint& point, double omega) {
    const double mu_p = point.mu_prime;
    const double w2 = omega * omega;
    const double a = 4.0 * point.rho * point.rho / (mu_p * mu_p);
    if (a == 0.0) {
        // limit branch: (w^2 + mu/mu') / (w^2 + 1)
        return (w2 + point.mu / mu_p) / (w2 + 1.0);
    }
    const double d = w2 - a;
    return (d * d + a * point.kappa / mu_p + point.mu / mu_p * w2) / (d * d + w2);
}

double sp_plus_closed(const OperatingPoint& point, double omega) {
    return 1.0 - (point.kappa / point.mu_prime) /
                     (omega * omega + point.sigma * point.sigma);
}

SxMinusMinimum min_sx_minus(const OperatingPoint& point) {
    if (point.rho == 0.0)
        return {0.0, point.mu / point.mu_prime}; // monotone from the limit value

    const double wmax = 10.0 * std::max(1.0, 2.0 * point.rho / point.mu_prime);
    auto f = [&](double w) { return sx_minus_closed(point, w); };

    constexpr int kScan = 2000;
    int best = 0;
    double fbest = f(0.0);
    for (int i = 1; i < kScan; ++i) {
        const double fi = f(wmax * i / (kScan - 1));
        if (fi < fbest) {
            fbest = fi;
            best = i;
        }
    }
    const double lo = wmax * std::max(0, best - 1) / (kScan - 1);
    const double hi = wmax * std::min(kScan - 1, best + 1) / (kScan - 1);
    const double wm = golden_section_min(lo, hi, f);
    return {wm, f(wm)};
}

} // namespace opo
