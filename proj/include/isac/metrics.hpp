#pragma once

#include <vector>

#include "isac/array.hpp"

namespace isac {

/// Point target: complex scattering coefficient (RCS x two-way path loss)
/// and azimuth.
struct Target {
    Cplx alpha;
    double theta;

    double alpha_sq() const { return std::norm(alpha); }
};

using TargetSet = std::vector<Target>;

/// CFAR operating point.
struct DetectionConfig {
    double p_fa = 1e-4;

    DetectionConfig() = default;
    explicit DetectionConfig(double pfa) : p_fa(pfa) {
        if (!(pfa > 0.0 && pfa < 0.5))
            throw DomainError("DetectionConfig: p_fa must lie in (0, 0.5)");
    }
};

/// Complementary error function. Thin wrapper over the C library
/// implementation; absolute error is below 1e-15 on [-6, 6], well inside
/// the 1e-12 budget needed for detection-probability work.
double erfc(double x);

/// Inverse of erfc on (0, 2). Rational initial estimate refined by Newton
/// iterations on erfc itself; round-trips to better than 1e-9 relative.
double erfc_inv(double p);

/// Echo SINR of target i under transmit covariance r_x, after the
/// normalized receive filter b^H(theta_i)/||b(theta_i)||.
double target_sinr(int i, const CMatrix& r_x, const TargetSet& targets,
                   double sigma2_r, const ArrayGeometry& geom);

/// Detection probability at echo SINR eta for the configured false-alarm
/// rate: erfc(erfc_inv(2*p_fa) - sqrt(eta)) / 2.
double detection_probability(double eta, const DetectionConfig& cfg);

/// Downlink SINR of user k given communication beams w_comm (one column per
/// user), sensing beams w_radar, and the user's channel h_k.
double comm_sinr(int k, const CMatrix& w_comm, const CMatrix& w_radar,
                 const CVector& h_k, double sigma2_c);

} // namespace isac
