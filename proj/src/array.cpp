#include "isac/array.hpp"

#include <cmath>

namespace isac {

CVector steering_vector(int n, double theta) {
    if (n < 1)
        throw InvalidDimensionError("steering_vector: n must be >= 1");
    CVector a(n);
    const double phase_step = M_PI * std::sin(theta);
    for (int m = 0; m < n; ++m)
        a[m] = std::polar(1.0, phase_step * m);
    return a;
}

CMatrix target_response(double theta, const ArrayGeometry& geom) {
    const CVector a = steering_vector(geom.n_tx, theta);
    const CVector b = steering_vector(geom.n_rx, theta);
    return b * a.adjoint();
}

double hermitian_deviation(const CMatrix& m) {
    if (m.rows() != m.cols())
        throw InvalidDimensionError("hermitian_deviation: matrix must be square");
    const double norm = m.norm();
    if (norm == 0.0)
        return 0.0;
    return (m - m.adjoint()).norm() / norm;
}

RVector beampattern(const CMatrix& r_x, const RVector& thetas) {
    if (r_x.rows() != r_x.cols())
        throw InvalidDimensionError("beampattern: R_X must be square");
    if (hermitian_deviation(r_x) > 1e-9)
        throw ContractViolationError("beampattern: R_X is not Hermitian within tolerance");
    const int n = static_cast<int>(r_x.rows());
    RVector out(thetas.size());
    for (Eigen::Index t = 0; t < thetas.size(); ++t) {
        const CVector a = steering_vector(n, thetas[t]);
        out[t] = std::real(Cplx(a.dot(r_x * a)));
    }
    return out;
}

} // namespace isac
