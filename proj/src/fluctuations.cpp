#include "opo/fluctuations.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace opo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr cplx kI{0.0, 1.0};

// Columns of the coupler-port components inside the 10-column input layout.
constexpr int kCoupler[4] = {0, 1, 2, 3};

using Vec10c = Eigen::Matrix<cplx, 1, 10>;

// Output-space functional of one quadrature: coefficients applied to the
// four output field components (dA1, dA1*, dA2, dA2*).
Eigen::Vector4cd quadrature_functional(int beam, bool phase, double phi) {
    Eigen::Vector4cd f = Eigen::Vector4cd::Zero();
    const cplx e_m = std::polar(1.0, -phi);
    const cplx e_p = std::polar(1.0, phi);
    const int base = 2 * beam;
    if (!phase) {
        f(base) = e_m;
        f(base + 1) = e_p;
    } else {
        f(base) = -kI * e_m;
        f(base + 1) = kI * e_p;
    }
    return f;
}

// Symmetrized vacuum expectation of two linear forms in the input
// components: every port contributes 1/2 per ordering of (a, a*).
cplx vacuum_pairing(const Vec10c& a, const Vec10c& b) {
    cplx s = 0.0;
    for (int p = 0; p < 5; ++p)
        s += 0.5 * (a(2 * p) * b(2 * p + 1) + a(2 * p + 1) * b(2 * p));
    return s;
}

} // namespace

FluctuationSystem build_system(const OperatingPoint& point, const SteadyState& state) {
    if (classical_residual(point, state) > 1e-10)
        throw InconsistentState("steady state does not solve the classical equations");

    const cplx a1 = std::polar(state.r, state.phi1);
    const cplx a2 = std::polar(state.r, state.phi2);
    const double g = state.g;
    const cplx g_a0 = g * state.a0;
    const cplx plate_12 = cplx(0.0, 2.0 * point.rho) * std::polar(1.0, point.beta);
    const cplx plate_21 = cplx(0.0, 2.0 * point.rho) * std::polar(1.0, -point.beta);
    const double half_g2 = 0.5 * g * g;

    FluctuationSystem sys;
    sys.mu_prime = point.mu_prime;
    sys.kappa = point.kappa;
    sys.mu = point.mu;

    Mat4c m = Mat4c::Zero();
    // field row for dA1; pump elimination folds -g^2/2 A2* (A2 dA1 + A1 dA2)
    m(0, 0) = cplx(-point.mu_prime, point.delta1) - half_g2 * std::norm(a2);
    m(0, 2) = -half_g2 * a1 * std::conj(a2) + plate_12;
    m(0, 3) = g_a0;
    // conjugate row, columns swapped within each pair
    m(1, 1) = std::conj(m(0, 0));
    m(1, 3) = std::conj(m(0, 2));
    m(1, 2) = std::conj(m(0, 3));
    // field row for dA2
    m(2, 2) = cplx(-point.mu_prime, point.delta2) - half_g2 * std::norm(a1);
    m(2, 0) = -half_g2 * a2 * std::conj(a1) + plate_21;
    m(2, 1) = g_a0;
    m(3, 3) = std::conj(m(2, 2));
    m(3, 1) = std::conj(m(2, 0));
    m(3, 0) = std::conj(m(2, 1));
    sys.drift = m;

    const double tc = std::sqrt(2.0 * point.kappa);
    const double tl = std::sqrt(2.0 * point.mu);
    InputMatrix b = InputMatrix::Zero();
    b(0, 0) = tc;
    b(1, 1) = tc;
    b(2, 2) = tc;
    b(3, 3) = tc;
    b(0, 4) = tl;
    b(1, 5) = tl;
    b(2, 6) = tl;
    b(3, 7) = tl;
    b(0, 8) = g * std::conj(a2);
    b(1, 9) = g * a2;
    b(2, 8) = g * std::conj(a1);
    b(3, 9) = g * a1;
    sys.input_couplings = b;
    return sys;
}

TransferMatrix transfer_matrix(const FluctuationSystem& system, double omega) {
    if (omega < 0.0) throw ParameterOutOfRange("omega must be non-negative");

    // omega is normalized to the cavity cut-off, so omega*tau = 2 mu' Omega.
    const Mat4c a = kI * (2.0 * system.mu_prime * omega) * Mat4c::Identity() - system.drift;
    const InputMatrix& b = system.input_couplings;
    const double tc = std::sqrt(2.0 * system.kappa);

    InputMatrix selector = InputMatrix::Zero();
    for (int j = 0; j < 4; ++j) selector(j, kCoupler[j]) = 1.0;

    Eigen::JacobiSVD<Mat4c> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv(0);
    const double smin = sv(3);
    if (!(smax > 0.0)) throw SingularSystem("zero response matrix");

    TransferMatrix out;
    out.omega = omega;

    if (smin > smax * 1e-14) {
        Eigen::PartialPivLU<Mat4c> lu(a);
        InputMatrix x = lu.solve(b);
        double resid = (a * x - b).norm() / b.norm();
        if (resid > 1e-12) {
            x += lu.solve(b - a * x);
            resid = (a * x - b).norm() / b.norm();
            if (resid > 1e-12)
                throw SingularSystem("linear solve residual above 1e-12");
        }
        out.entries = tc * x - selector;
        return out;
    }

    // Marginal cavity modes occur at zero frequency (threshold amplitude
    // mode, unlocked phase mode at rho = 0). Away from zero frequency a
    // singular response signals an unphysical operating point.
    if (omega > 1e-9)
        throw SingularSystem("condition estimate above 1e14 at nonzero frequency");

    InputMatrix x = InputMatrix::Zero();
    const double bnorm = b.norm();
    for (int k = 0; k < 4; ++k) {
        const Eigen::Vector4cd uk = svd.matrixU().col(k);
        const Eigen::Vector4cd vk = svd.matrixV().col(k);
        const Vec10c drive = uk.adjoint() * b;
        if (sv(k) > smax * 1e-14) {
            x += vk * (drive / sv(k));
        } else if (drive.norm() > 1e-10 * bnorm) {
            out.divergent.push_back(tc * vk);
        }
    }
    out.entries = tc * x - selector;
    return out;
}

CovarianceMatrix output_covariance(const FluctuationSystem& system, double omega,
                                   double phi1, double phi2) {
    const TransferMatrix t = transfer_matrix(system, omega);

    std::array<Eigen::Vector4cd, 4> f; // functionals for x1, p1, x2, p2
    f[0] = quadrature_functional(0, false, phi1);
    f[1] = quadrature_functional(0, true, phi1);
    f[2] = quadrature_functional(1, false, phi2);
    f[3] = quadrature_functional(1, true, phi2);

    auto diverges = [&](const Eigen::Vector4cd& func) {
        for (const auto& w : t.divergent)
            if (std::abs(func.transpose() * w) > 1e-8 * func.norm() * w.norm()) return true;
        return false;
    };
    auto spectral_value = [&](const Eigen::Vector4cd& func) -> double {
        if (diverges(func)) return kInf;
        const Vec10c l = func.transpose() * t.entries;
        return vacuum_pairing(l, l).real();
    };

    CovarianceMatrix cov;
    cov.omega = omega;

    std::array<Vec10c, 4> l;
    std::array<bool, 4> div;
    for (int q = 0; q < 4; ++q) {
        l[q] = f[q].transpose() * t.entries;
        div[q] = diverges(f[q]);
    }
    for (int q = 0; q < 4; ++q) {
        for (int r = q; r < 4; ++r) {
            double value;
            if (div[q] || div[r]) {
                value = kInf;
            } else {
                const cplx v = vacuum_pairing(l[q], l[r]);
                if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
                    throw SingularSystem("covariance entry has a non-real residue");
                value = v.real();
            }
            cov.m(q, r) = value;
            cov.m(r, q) = value;
        }
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    cov.joints.sx_minus = spectral_value((f[0] - f[2]) * inv_sqrt2);
    cov.joints.sx_plus = spectral_value((f[0] + f[2]) * inv_sqrt2);
    cov.joints.sp_minus = spectral_value((f[1] - f[3]) * inv_sqrt2);
    cov.joints.sp_plus = spectral_value((f[1] + f[3]) * inv_sqrt2);
    cov.has_joints = true;
    return cov;
}

namespace detail {

Mat4d flagged_congruence(const Mat4d& r, const Mat4d& m) {
    Mat4d out = Mat4d::Zero();
    for (int q = 0; q < 4; ++q) {
        for (int s = q; s < 4; ++s) {
            double acc = 0.0;
            bool flagged = false;
            for (int i = 0; i < 4 && !flagged; ++i) {
                for (int j = 0; j < 4 && !flagged; ++j) {
                    const double c = r(q, i) * r(s, j);
                    if (c == 0.0) continue;
                    if (!std::isfinite(m(i, j)))
                        flagged = true;
                    else
                        acc += c * m(i, j);
                }
            }
            out(q, s) = flagged ? kInf : acc;
            out(s, q) = out(q, s);
        }
    }
    return out;
}

} // namespace detail

CovarianceMatrix rotate_quadratures(const CovarianceMatrix& cov, double a1, double a2) {
    Mat4d r = Mat4d::Zero();
    r(0, 0) = std::cos(a1);
    r(0, 1) = std::sin(a1);
    r(1, 0) = -std::sin(a1);
    r(1, 1) = std::cos(a1);
    r(2, 2) = std::cos(a2);
    r(2, 3) = std::sin(a2);
    r(3, 2) = -std::sin(a2);
    r(3, 3) = std::cos(a2);

    CovarianceMatrix out;
    out.omega = cov.omega;
    out.m = detail::flagged_congruence(r, cov.m);
    return out;
}

} // namespace opo
