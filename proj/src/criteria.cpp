#include "opo/criteria.hpp"

#include <cmath>
#include <limits>

namespace opo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct QuadratureEntries {
    double v1, v2, c;
};

QuadratureEntries entries_for(const CovarianceMatrix& cov, Quadrature q) {
    const int i = q == Quadrature::amplitude ? 0 : 1;
    return {cov.m(i, i), cov.m(i + 2, i + 2), cov.m(i, i + 2)};
}

double conditional_variance_or_inf(const CovarianceMatrix& cov, Quadrature q) {
    const auto e = entries_for(cov, q);
    if (!std::isfinite(e.v1) || !std::isfinite(e.v2) || !std::isfinite(e.c)) return kInf;
    if (e.v2 <= 0.0) return kInf;
    return e.v1 - e.c * e.c / e.v2;
}

double correlation_or_inf(const CovarianceMatrix& cov, Quadrature q) {
    const auto e = entries_for(cov, q);
    if (!std::isfinite(e.v1) || !std::isfinite(e.v2) || !std::isfinite(e.c)) return kInf;
    if (e.v1 <= 0.0 || e.v2 <= 0.0) return kInf;
    return e.c / std::sqrt(e.v1 * e.v2);
}

} // namespace

double normalized_correlation(const CovarianceMatrix& cov, Quadrature q) {
    const auto e = entries_for(cov, q);
    if (!std::isfinite(e.v1) || !std::isfinite(e.v2) || !std::isfinite(e.c))
        throw DivergentVariance("correlation undefined on a divergent entry");
    if (e.v1 == 0.0 || e.v2 == 0.0)
        throw ZeroVariance("correlation undefined on a zero variance");
    return e.c / std::sqrt(e.v1 * e.v2);
}

double conditional_variance(const CovarianceMatrix& cov, Quadrature q) {
    const auto e = entries_for(cov, q);
    if (!std::isfinite(e.v1) || !std::isfinite(e.v2) || !std::isfinite(e.c))
        throw DivergentVariance("conditional variance undefined on a divergent entry");
    if (e.v2 == 0.0)
        throw ZeroVariance("inferring beam has zero variance");
    return e.v1 - e.c * e.c / e.v2;
}

double epr_product(const CovarianceMatrix& cov) {
    const double vx = conditional_variance_or_inf(cov, Quadrature::amplitude);
    const double vp = conditional_variance_or_inf(cov, Quadrature::phase);
    if (std::isinf(vx) || std::isinf(vp)) return kInf; // criterion not met
    return vx * vp;
}

double duan_sum(const CovarianceMatrix& cov) {
    return joint_spectrum(cov, {Quadrature::amplitude, CombinationSign::difference}) +
           joint_spectrum(cov, {Quadrature::phase, CombinationSign::sum});
}

double fidelity(const CovarianceMatrix& cov) {
    const double sxm =
        joint_spectrum(cov, {Quadrature::amplitude, CombinationSign::difference});
    const double spp = joint_spectrum(cov, {Quadrature::phase, CombinationSign::sum});
    if (!std::isfinite(sxm) || !std::isfinite(spp)) return 0.0;
    return 1.0 / std::sqrt((1.0 + sxm) * (1.0 + spp));
}

CriteriaReport evaluate_criteria(const CovarianceMatrix& cov) {
    CriteriaReport r;
    r.omega = cov.omega;
    r.sx_minus = joint_spectrum(cov, {Quadrature::amplitude, CombinationSign::difference});
    r.sx_plus = joint_spectrum(cov, {Quadrature::amplitude, CombinationSign::sum});
    r.sp_minus = joint_spectrum(cov, {Quadrature::phase, CombinationSign::difference});
    r.sp_plus = joint_spectrum(cov, {Quadrature::phase, CombinationSign::sum});
    r.cx = correlation_or_inf(cov, Quadrature::amplitude);
    r.cp = correlation_or_inf(cov, Quadrature::phase);
    r.vx = conditional_variance_or_inf(cov, Quadrature::amplitude);
    r.vp = conditional_variance_or_inf(cov, Quadrature::phase);
    r.epr_product = (std::isinf(r.vx) || std::isinf(r.vp)) ? kInf : r.vx * r.vp;
    r.duan = r.sx_minus + r.sp_plus;
    r.fidelity = (std::isfinite(r.sx_minus) && std::isfinite(r.sp_plus))
                     ? 1.0 / std::sqrt((1.0 + r.sx_minus) * (1.0 + r.sp_plus))
                     : 0.0;
    return r;
}

} // namespace opo
