#include "isac/metrics.hpp"

#include <cmath>

namespace isac {

double erfc(double x) { return std::erfc(x); }

namespace {

// Acklam's rational approximation of the standard normal quantile,
// accurate to ~1.2e-9 relative before refinement.
double norm_quantile_estimate(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

} // namespace

double erfc_inv(double p) {
    if (!(p > 0.0 && p < 2.0))
        throw DomainError("erfc_inv: argument must lie in (0, 2)");
    if (p == 1.0)
        return 0.0;

    // erfc(x) = p  <=>  x = -Phi^{-1}(p/2) / sqrt(2)
    double x = -norm_quantile_estimate(0.5 * p) * M_SQRT1_2;

    // Newton on erfc; the correction factor exp(x^2) stays finite for the
    // |x| < 26 range reachable from double-precision p.
    constexpr double half_sqrt_pi = 0.8862269254527580137;
    for (int it = 0; it < 3 && std::abs(x) < 26.0; ++it) {
        const double err = std::erfc(x) - p;
        x += err * half_sqrt_pi * std::exp(x * x);
    }
    return x;
}

double detection_probability(double eta, const DetectionConfig& cfg) {
    if (eta < 0.0)
        throw DomainError("detection_probability: eta must be >= 0");
    return 0.5 * std::erfc(erfc_inv(2.0 * cfg.p_fa) - std::sqrt(eta));
}

namespace {

// v_ij = G^H(theta_j) b(theta_i) = a(theta_j) * (b(theta_j)^H b(theta_i))
CVector cross_response(const Target& tj, const Target& ti, const ArrayGeometry& geom) {
    const CVector aj = steering_vector(geom.n_tx, tj.theta);
    const CVector bj = steering_vector(geom.n_rx, tj.theta);
    const CVector bi = steering_vector(geom.n_rx, ti.theta);
    return aj * bj.dot(bi);
}

double quad_form(const CVector& v, const CMatrix& r) {
    return std::max(0.0, std::real(Cplx(v.dot(r * v))));
}

} // namespace

double target_sinr(int i, const CMatrix& r_x, const TargetSet& targets,
                   double sigma2_r, const ArrayGeometry& geom) {
    const int m = static_cast<int>(targets.size());
    if (i < 0 || i >= m)
        throw InvalidDimensionError("target_sinr: target index out of range");
    if (sigma2_r <= 0.0)
        throw DomainError("target_sinr: sigma2_r must be > 0");
    if (r_x.rows() != geom.n_tx || r_x.cols() != geom.n_tx)
        throw InvalidDimensionError("target_sinr: R_X must be n_tx x n_tx");
    if (hermitian_deviation(r_x) > 1e-8)
        throw ContractViolationError("target_sinr: R_X is not Hermitian within tolerance");

    const CVector vii = cross_response(targets[i], targets[i], geom);
    const double num = targets[i].alpha_sq() * quad_form(vii, r_x);

    double interference = 0.0;
    for (int j = 0; j < m; ++j) {
        if (j == i)
            continue;
        const CVector vij = cross_response(targets[j], targets[i], geom);
        interference += targets[j].alpha_sq() * quad_form(vij, r_x);
    }
    return num / (interference + geom.n_rx * sigma2_r);
}

double comm_sinr(int k, const CMatrix& w_comm, const CMatrix& w_radar,
                 const CVector& h_k, double sigma2_c) {
    const int n_users = static_cast<int>(w_comm.cols());
    if (k < 0 || k >= n_users)
        throw InvalidDimensionError("comm_sinr: user index out of range");
    if (w_comm.rows() != h_k.size() ||
        (w_radar.size() > 0 && w_radar.rows() != h_k.size()))
        throw InvalidDimensionError("comm_sinr: beamformer/channel dimensions disagree");

    const double signal = std::norm(Cplx(h_k.dot(w_comm.col(k))));
    double interference = 0.0;
    for (int i = 0; i < n_users; ++i) {
        if (i != k)
            interference += std::norm(Cplx(h_k.dot(w_comm.col(i))));
    }
    if (w_radar.size() > 0)
        interference += (h_k.adjoint() * w_radar).squaredNorm();
    return signal / (interference + sigma2_c);
}

} // namespace isac
