#include "opo/model.hpp"

#include <cmath>
#include <iostream>
#include <numbers>

namespace opo {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Splits x into 2*pi*p + residual with residual in (-pi, pi].
void fold_principal(double x, long& p, double& residual) {
    residual = std::remainder(x, kTwoPi); // in [-pi, pi]
    if (residual <= -kPi) residual += kTwoPi;
    p = std::lround((x - residual) / kTwoPi);
}

void check_branch(int branch) {
    if (branch != 1 && branch != -1)
        throw ParameterOutOfRange("branch must be +1 or -1");
}

} // namespace

void PhysicalCrystal::validate() const {
    if (n1 < 1.0 || n2 < 1.0 || n0 < 1.0)
        throw ParameterOutOfRange("refractive indices must be >= 1");
    if (l <= 0.0) throw ParameterOutOfRange("crystal length must be positive");
    if (omega0 <= 0.0) throw ParameterOutOfRange("pump frequency must be positive");
}

void CavityGeometry::validate() const {
    if (kappa <= 0.0 || kappa > 0.2)
        throw ParameterOutOfRange("kappa must lie in (0, 0.2]");
    if (mu < 0.0 || mu > 0.2)
        throw ParameterOutOfRange("mu must lie in [0, 0.2]");
    if (tau <= 0.0) throw ParameterOutOfRange("round-trip time must be positive");
    if (rho < 0.0) throw ParameterOutOfRange("rho must be non-negative");
    if (rho > 0.2)
        std::cerr << "warning: waveplate angle rho = " << rho
                  << " rad is outside the small-angle regime\n";
}

double crystal_birefringence(const PhysicalCrystal& crystal) {
    crystal.validate();
    return crystal.omega0 / (2.0 * kSpeedOfLight) * (crystal.n2 - crystal.n1) * crystal.l;
}

double coupling_constant(const PhysicalCrystal& crystal, double omega1, double omega2) {
    crystal.validate();
    if (omega1 <= 0.0 || omega2 <= 0.0)
        throw ParameterOutOfRange("mode frequencies must be positive");
    if (std::abs(omega1 + omega2 - crystal.omega0) > 1e-9 * crystal.omega0)
        throw FrequencyMismatch("omega1 + omega2 must equal the pump frequency");
    const double c3 = kSpeedOfLight * kSpeedOfLight * kSpeedOfLight;
    const double radicand = kHbar * crystal.omega0 * omega1 * omega2 /
                            (2.0 * c3 * kVacuumPermittivity * crystal.n0 * crystal.n1 * crystal.n2);
    return crystal.l * crystal.chi2 * std::sqrt(radicand);
}

DetuningResult round_trip_detunings(const PhysicalCrystal& crystal,
                                    const CavityGeometry& cavity, double theta) {
    crystal.validate();
    if (!std::isfinite(theta)) throw ParameterOutOfRange("theta must be finite");

    const double mean_phase = crystal.omega0 / (2.0 * kSpeedOfLight) *
                                  (cavity.n_plate * cavity.e_plate +
                                   crystal.mean_index() * crystal.l + cavity.L) +
                              cavity.mean_mirror_phase();
    const double split = 0.5 * (theta + cavity.zeta2 - cavity.zeta1);

    DetuningResult out;
    fold_principal(mean_phase + split - cavity.psi, out.p1, out.delta1);
    fold_principal(mean_phase - split + cavity.psi, out.p2, out.delta2);
    return out;
}

OperatingPoint min_threshold_point(double kappa, double mu, double rho,
                                   double sigma, int branch) {
    if (kappa <= 0.0 || kappa > 0.2)
        throw ParameterOutOfRange("kappa must lie in (0, 0.2]");
    if (mu < 0.0 || mu > 0.2)
        throw ParameterOutOfRange("mu must lie in [0, 0.2]");
    if (rho < 0.0) throw ParameterOutOfRange("rho must be non-negative");
    if (sigma < 0.0) throw ParameterOutOfRange("sigma must be non-negative");
    check_branch(branch);

    OperatingPoint pt;
    pt.kappa = kappa;
    pt.mu = mu;
    pt.mu_prime = kappa + mu;
    pt.rho = rho;
    pt.sigma = sigma;
    pt.delta1 = branch * 2.0 * rho;
    pt.delta2 = pt.delta1;
    pt.beta = 0.5 * kPi;
    pt.branch = branch;
    return pt;
}

double classical_residual(const OperatingPoint& point, const SteadyState& state) {
    const cplx a1 = std::polar(state.r, state.phi1);
    const cplx a2 = std::polar(state.r, state.phi2);
    // g * A0 with the pump line substituted; g * A0_in = mu' * sigma at input
    // phase zero, so no division by g is ever needed.
    const cplx g_a0 = point.mu_prime * point.sigma - 0.5 * state.g * state.g * a1 * a2;
    const cplx plate = cplx(0.0, 2.0 * point.rho);

    const cplx rhs1 = a1 * cplx(-point.mu_prime, point.delta1) + g_a0 * std::conj(a2) +
                      plate * std::polar(1.0, point.beta) * a2;
    const cplx rhs2 = a2 * cplx(-point.mu_prime, point.delta2) + g_a0 * std::conj(a1) +
                      plate * std::polar(1.0, -point.beta) * a1;
    return std::sqrt(std::norm(rhs1) + std::norm(rhs2));
}

SteadyState steady_state(const OperatingPoint& point, double g) {
    if (g <= 0.0) throw ParameterOutOfRange("coupling g must be positive");
    check_branch(point.branch);
    if (point.sigma < 1.0)
        throw BelowThreshold("sigma below the oscillation threshold");
    if (std::abs(point.beta - 0.5 * kPi) > 1e-9 ||
        std::abs(point.delta1 - point.branch * 2.0 * point.rho) > 1e-9 ||
        std::abs(point.delta2 - point.delta1) > 1e-9)
        throw ParameterOutOfRange("steady_state requires the minimum-threshold configuration");

    // Gain clamping fixes g|a0| = mu'; the pump line then leaves a single
    // real equation for the common amplitude r.
    const double mu_p = point.mu_prime;
    auto f = [&](double r) { return mu_p * point.sigma - 0.5 * g * g * r * r - mu_p; };

    double lo = 0.0, hi = 10.0 * std::sqrt(2.0 * mu_p * point.sigma) / g;
    double flo = f(lo), fhi = f(hi);
    double r = 0.0;
    if (flo <= 0.0) {
        r = 0.0; // at threshold
    } else if (fhi >= 0.0) {
        throw NoConvergence("root bracket failed for the pump line");
    } else {
        bool converged = false;
        for (int it = 0; it < 200; ++it) {
            // secant proposal, bisection fallback
            double mid = lo - flo * (hi - lo) / (fhi - flo);
            if (!(mid > lo && mid < hi)) mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm > 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
            if (hi - lo <= 1e-12 * (1.0 + hi)) {
                r = 0.5 * (lo + hi);
                converged = true;
                break;
            }
        }
        if (!converged) throw NoConvergence("pump line root finder did not converge");
    }

    SteadyState st;
    st.r = r;
    st.g = g;
    // Phase sum set to the pump input phase (zero); the difference is locked
    // to the branch, phi2 - phi1 = branch * pi/2.
    st.phi1 = -point.branch * 0.25 * kPi;
    st.phi2 = point.branch * 0.25 * kPi;
    st.a0 = cplx(mu_p * point.sigma / g - 0.5 * g * r * r, 0.0);

    if (classical_residual(point, st) > 1e-10)
        throw NoConvergence("stationary solution failed the residual check");
    return st;
}

} // namespace opo
