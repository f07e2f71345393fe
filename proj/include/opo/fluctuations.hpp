#ifndef OPO_FLUCTUATIONS_HPP
#define OPO_FLUCTUATIONS_HPP

#include <Eigen/Dense>
#include <vector>

#include "opo/model.hpp"

namespace opo {

using Mat4c = Eigen::Matrix4cd;
using Mat4d = Eigen::Matrix4d;
using InputMatrix = Eigen::Matrix<cplx, 4, 10>;

// Input ports, two conjugate components each:
// columns 0,1 coupler signal; 2,3 coupler idler; 4,5 loss signal;
// 6,7 loss idler; 8,9 pump. Even columns hold the annihilation-like
// component, odd columns its conjugate partner.
inline constexpr int kNumInputs = 10;

/// Linearized intracavity dynamics with the pump eliminated. The state
/// vector is (dA1, dA1*, dA2, dA2*).
struct FluctuationSystem {
    Mat4c drift;
    InputMatrix input_couplings;
    double tau = 1.0;
    double mu_prime = 0.0;
    double kappa = 0.0;
    double mu = 0.0;
};

/// Frequency-domain map from the ten input components to the four output
/// field components at one normalized frequency. When the cavity response
/// is marginal (zero-frequency critical modes) the diverging directions are
/// listed separately and `entries` holds the finite part.
struct TransferMatrix {
    double omega = 0.0;
    InputMatrix entries;
    std::vector<Eigen::Vector4cd> divergent;
};

struct JointValues {
    double sx_minus = 0.0;
    double sx_plus = 0.0;
    double sp_minus = 0.0;
    double sp_plus = 0.0;
};

/// Symmetrized quadrature covariance of the two output beams over the basis
/// (x1, p1, x2, p2), vacuum variance 1. Entries hit by a marginal-mode
/// divergence carry +infinity. Matrices produced by output_covariance also
/// carry the four joint sum/difference spectra evaluated directly from the
/// joint-mode functionals, which stays accurate where the entry combination
/// would cancel and stays finite where individual entries diverge.
struct CovarianceMatrix {
    double omega = 0.0;
    Mat4d m = Mat4d::Identity();
    bool has_joints = false;
    JointValues joints;
};

/// Assembles drift and input couplings from the classical working point.
/// Throws InconsistentState when the state does not solve the classical
/// equations to 1e-10.
FluctuationSystem build_system(const OperatingPoint& point, const SteadyState& state);

/// Solves the linear system at normalized frequency omega (units of the
/// cavity cut-off 2 mu'/tau) and applies the output coupling relation
/// a_out = sqrt(2 kappa) a - a_in on the coupler ports.
TransferMatrix transfer_matrix(const FluctuationSystem& system, double omega);

/// Vacuum-input covariance of the output quadratures defined relative to
/// the stationary phases phi1, phi2.
CovarianceMatrix output_covariance(const FluctuationSystem& system, double omega,
                                   double phi1, double phi2);

/// Rotates each beam's (x, p) pair by its own angle; congruence transform.
CovarianceMatrix rotate_quadratures(const CovarianceMatrix& cov, double a1, double a2);

namespace detail {

/// r * m * r^T with +infinity entries propagated into every output entry
/// they feed with a nonzero coefficient.
Mat4d flagged_congruence(const Mat4d& r, const Mat4d& m);

} // namespace detail

} // namespace opo

#endif
