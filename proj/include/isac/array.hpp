#pragma once

#include <Eigen/Dense>
#include <complex>

#include "isac/errors.hpp"

namespace isac {

using Cplx = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Co-located transmit/receive uniform linear arrays with half-wavelength
/// element spacing.
struct ArrayGeometry {
    int n_tx = 1;
    int n_rx = 1;

    ArrayGeometry() = default;
    ArrayGeometry(int tx, int rx) : n_tx(tx), n_rx(rx) {
        if (tx < 1 || rx < 1)
            throw InvalidDimensionError("ArrayGeometry: element counts must be >= 1");
    }
};

/// ULA steering vector: element m is exp(j*pi*m*sin(theta)), m = 0..n-1.
CVector steering_vector(int n, double theta);

/// Rank-1 target response G(theta) = b(theta) a(theta)^H, sized n_rx x n_tx.
CMatrix target_response(double theta, const ArrayGeometry& geom);

/// Transmit power toward each angle: a^H(theta) R_X a(theta), linear scale.
/// R_X must be Hermitian within 1e-9 relative Frobenius tolerance.
RVector beampattern(const CMatrix& r_x, const RVector& thetas);

/// Frobenius-relative deviation of M from its Hermitian part.
double hermitian_deviation(const CMatrix& m);

} // namespace isac
