#ifndef OPO_MODEL_HPP
#define OPO_MODEL_HPP

#include <complex>

#include "opo/errors.hpp"

namespace opo {

using cplx = std::complex<double>;

// SI constants used by the crystal-level formulas.
inline constexpr double kSpeedOfLight = 299792458.0;          // m/s
inline constexpr double kHbar = 1.054571817e-34;              // J s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12; // F/m

/// Nonlinear crystal inside the ring cavity. n1/n2 are the indices seen by
/// the two orthogonally polarized down-converted waves, n0 by the pump.
struct PhysicalCrystal {
    double n1 = 1.0;      // signal index
    double n2 = 1.0;      // idler index
    double l = 0.0;       // crystal length, m
    double chi2 = 0.0;    // effective second-order susceptibility, SI
    double omega0 = 0.0;  // pump angular frequency, rad/s
    double n0 = 1.0;      // pump index

    double mean_index() const { return 0.5 * (n1 + n2); }
    void validate() const;
};

/// Passive cavity data: free propagation, mirror phases, intracavity
/// waveplate, coupling and loss coefficients.
struct CavityGeometry {
    double L = 0.0;       // free propagation length, m
    double zeta1 = 0.0;   // mirror phase, signal
    double zeta2 = 0.0;   // mirror phase, idler
    double n_plate = 1.0; // waveplate index
    double e_plate = 0.0; // waveplate thickness, m
    double psi = 0.0;     // waveplate birefringence, rad
    double rho = 0.0;     // waveplate rotation angle, rad
    double kappa = 0.0;   // coupler loss, r = 1 - kappa
    double mu = 0.0;      // round-trip passive loss
    double tau = 0.0;     // round-trip time, s

    double mean_mirror_phase() const { return 0.5 * (zeta1 + zeta2); }
    void validate() const;
};

/// Normalized parameters of one simulation point. All spectra depend on the
/// cavity only through these numbers.
struct OperatingPoint {
    double kappa = 0.0;
    double mu = 0.0;
    double mu_prime = 0.0; // kappa + mu
    double rho = 0.0;
    double sigma = 1.0;    // pump amplitude normalized to threshold
    double delta1 = 0.0;   // round-trip detuning, signal
    double delta2 = 0.0;   // round-trip detuning, idler
    double beta = 0.0;     // crystal birefringence minus plate birefringence
    int branch = +1;       // sign of the detuning pair, +1 or -1
};

/// Phase-locked classical stationary solution above threshold.
struct SteadyState {
    double r = 0.0;    // common signal/idler amplitude
    double phi1 = 0.0; // signal phase
    double phi2 = 0.0; // idler phase
    cplx a0;           // intracavity pump amplitude
    double g = 0.0;    // nonlinear coupling
};

struct DetuningResult {
    double delta1 = 0.0;
    double delta2 = 0.0;
    long p1 = 0;
    long p2 = 0;
};

/// theta = (omega0 / 2c) (n2 - n1) l. Antisymmetric under n1 <-> n2.
double crystal_birefringence(const PhysicalCrystal& crystal);

/// Effective parametric coupling for a signal/idler pair summing to the pump
/// frequency. Throws FrequencyMismatch unless omega1 + omega2 = omega0.
double coupling_constant(const PhysicalCrystal& crystal, double omega1, double omega2);

/// Splits the two round-trip phases into nearest resonance order p and small
/// residual detuning folded into (-pi, pi].
DetuningResult round_trip_detunings(const PhysicalCrystal& crystal,
                                    const CavityGeometry& cavity, double theta);

/// Operating point at the minimum oscillation threshold: beta = pi/2 and
/// delta1 = delta2 = branch * 2 rho.
OperatingPoint min_threshold_point(double kappa, double mu, double rho,
                                   double sigma, int branch);

/// Phase-locked stationary solution for sigma >= 1. The pump is gain-clamped
/// (|g a0| = mu') and the common amplitude is obtained by rooting the pump
/// line numerically; the result is residual-checked to 1e-10.
SteadyState steady_state(const OperatingPoint& point, double g);

/// Norm of the two stationary field equations evaluated at the state, with
/// the pump eliminated through the pump line. Zero at a true solution.
double classical_residual(const OperatingPoint& point, const SteadyState& state);

} // namespace opo

#endif
