#ifndef OPO_CRITERIA_HPP
#define OPO_CRITERIA_HPP

#include "opo/spectra.hpp"

namespace opo {

/// All scalar entanglement diagnostics at one analysis frequency. Divergent
/// quantities are carried as +infinity; fidelity collapses to 0 when a joint
/// spectrum diverges.
struct CriteriaReport {
    double omega = 0.0;
    double sx_minus = 0.0;
    double sx_plus = 0.0;
    double sp_minus = 0.0;
    double sp_plus = 0.0;
    double cx = 0.0;
    double cp = 0.0;
    double vx = 0.0;
    double vp = 0.0;
    double epr_product = 0.0;
    double duan = 0.0;
    double fidelity = 0.0;
};

/// Normalized cross-correlation of the selected quadrature pair, in [-1, 1].
double normalized_correlation(const CovarianceMatrix& cov, Quadrature q);

/// Optimal-gain inference error min_g Var(q1 - g q2). For symmetric
/// covariances this coincides with the correlation-gain form.
double conditional_variance(const CovarianceMatrix& cov, Quadrature q);

/// Product of the two conditional variances; < 1 demonstrates the EPR
/// paradox. A divergent factor yields +infinity rather than an error.
double epr_product(const CovarianceMatrix& cov);

/// Inseparability sum S_x^- + S_p^+; < 2 certifies entanglement.
double duan_sum(const CovarianceMatrix& cov);

/// Unity-gain teleportation fidelity 1/sqrt((1+S_x^-)(1+S_p^+)).
double fidelity(const CovarianceMatrix& cov);

/// Collects every diagnostic; divergences map to +infinity fields instead of
/// exceptions so grid scans always complete.
CriteriaReport evaluate_criteria(const CovarianceMatrix& cov);

} // namespace opo

#endif
