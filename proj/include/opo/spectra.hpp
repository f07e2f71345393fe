#ifndef OPO_SPECTRA_HPP
#define OPO_SPECTRA_HPP

#include "opo/fluctuations.hpp"
#include "opo/model.hpp"

namespace opo {

enum class Quadrature { amplitude, phase };
enum class CombinationSign { sum, difference };

struct JointSpectrumSelector {
    Quadrature quadrature = Quadrature::amplitude;
    CombinationSign sign = CombinationSign::difference;
};

struct SxMinusMinimum {
    double omega = 0.0;
    double value = 0.0;
};

/// Normalized variance of (q1 +/- q2)/sqrt(2); independent vacua give 1.
/// Uses the solver-attached joint values when present (exact where entries
/// diverge, accurate where they nearly cancel), otherwise the entry formula.
double joint_spectrum(const CovarianceMatrix& cov, JointSpectrumSelector sel);

/// Closed form of the amplitude-difference spectrum at a minimum-threshold
/// point; independent of sigma. The 0/0 at omega = rho = 0 resolves to
/// mu/mu' along the omega -> 0 limit.
double sx_minus_closed(const OperatingPoint& point, double omega);

/// Closed form of the phase-sum spectrum, 1 - (kappa/mu')/(omega^2 + sigma^2);
/// independent of rho.
double sp_plus_closed(const OperatingPoint& point, double omega);

/// Global minimum of sx_minus_closed over omega, grid scan refined by
/// golden-section search.
SxMinusMinimum min_sx_minus(const OperatingPoint& point);

} // namespace opo

#endif
