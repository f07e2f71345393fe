#ifndef OPO_OPTIMAL_HPP
#define OPO_OPTIMAL_HPP

#include "opo/fluctuations.hpp"

namespace opo {

/// Second moments of the dark polarization mode and the quadrature rotation
/// that aligns its squeezing ellipse with the measurement axes.
struct DarkModeStats {
    double s_x = 0.0;      // dark-mode amplitude variance (= S_x^-)
    double s_p = 0.0;      // dark-mode phase variance (= S_p^-)
    double c_minus = 0.0;  // normalized x-p cross-correlation
    double theta_opt = 0.0; // ellipse tilt, folded into (-pi/4, pi/4]
};

/// Congruence transform onto the bright/dark polarization modes
/// (A1 +/- A2)/sqrt(2) of the phase-referred beams; basis order
/// (x_bright, p_bright, x_dark, p_dark). Self-inverse.
CovarianceMatrix bright_dark_covariance(const CovarianceMatrix& cov);

/// Reads the dark block of a bright/dark covariance and computes the
/// optimal rotation angle.
DarkModeStats dark_mode_stats(const CovarianceMatrix& cov_bd);

/// Aligns both polarization modes with their squeezing axes (squeezed axis
/// on x for the dark mode, on p for the bright mode) and returns the result
/// in the primed beam basis (x'1, p'1, x'2, p'2).
CovarianceMatrix optimized_pair(const CovarianceMatrix& cov, const DarkModeStats& stats);

/// Inseparability sum evaluated on the optimally squeezed quadratures:
/// S_x of the aligned dark mode plus S_p of the aligned bright mode.
/// Never exceeds duan_sum.
double optimized_duan(const CovarianceMatrix& cov);

} // namespace opo

#endif
