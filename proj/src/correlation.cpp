#include "qsteer/correlation.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qsteer/jacobi.hpp"

namespace qsteer {

namespace {

constexpr double kImagRejectTol = 1e-9;

bool finite_tensor(const CorrelationTensor& t) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (!std::isfinite(t(i, j))) return false;
    return true;
}

} // namespace

CorrelationTensor CorrelationTensor::diagonal(double t11, double t22, double t33) {
    CorrelationTensor t;
    t.at(0, 0) = t11;
    t.at(1, 1) = t22;
    t.at(2, 2) = t33;
    return t;
}

CorrelationTensor CorrelationTensor::transposed() const {
    CorrelationTensor out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out.at(i, j) = (*this)(j, i);
    return out;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

CorrelationTensor correlation_tensor(const DensityMatrix& rho, double* max_imag_out) {
    if (!rho.finite()) throw std::invalid_argument("correlation_tensor: non-finite entry");

    auto e = [&rho](int i, int j) { return rho.at(i - 1, j - 1); }; // 1-based like the entry names
    const Complex im_unit{0.0, 1.0};

    std::array<Complex, 9> raw;
    raw[0] = e(1, 4) + e(2, 3) + e(3, 2) + e(4, 1);
    raw[1] = (e(1, 4) - e(2, 3) + e(3, 2) - e(4, 1)) * im_unit;
    raw[2] = e(1, 3) - e(2, 4) + e(3, 1) - e(4, 2);
    raw[3] = (e(1, 4) + e(2, 3) - e(3, 2) - e(4, 1)) * im_unit;
    raw[4] = e(2, 3) - e(1, 4) + e(3, 2) - e(4, 1);
    raw[5] = (e(1, 3) - e(2, 4) - e(3, 1) + e(4, 2)) * im_unit;
    raw[6] = e(1, 2) + e(2, 1) - e(3, 4) - e(4, 3);
    raw[7] = (e(1, 2) - e(2, 1) - e(3, 4) + e(4, 3)) * im_unit;
    raw[8] = e(1, 1) - e(2, 2) - e(3, 3) + e(4, 4);

    double max_imag = 0.0;
    std::array<double, 9> t;
    for (int k = 0; k < 9; ++k) {
        max_imag = std::max(max_imag, std::abs(raw[k].imag()));
        t[k] = raw[k].real();
    }
    if (max_imag_out) *max_imag_out = max_imag;
    if (max_imag > kImagRejectTol)
        throw std::invalid_argument(
            "correlation_tensor: residual imaginary part signals non-Hermitian input");
    return CorrelationTensor(t);
}

double correlation_value(const CorrelationTensor& t, const BlochVector& m,
                         const BlochVector& n, Tolerance tol) {
    const double mm = m.x * m.x + m.y * m.y + m.z * m.z;
    const double nn = n.x * n.x + n.y * n.y + n.z * n.z;
    if (std::abs(mm - 1.0) > tol.eps || std::abs(nn - 1.0) > tol.eps)
        throw std::domain_error("correlation_value: vectors must be unit length");

    const std::array<double, 3> mv{m.x, m.y, m.z};
    const std::array<double, 3> nv{n.x, n.y, n.z};
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += t(i, j) * mv[i] * nv[j];
    return s;
}

MaxCorrelation max_correlation(const CorrelationTensor& t) {
    if (!finite_tensor(t)) throw std::invalid_argument("max_correlation: non-finite entry");

    // Gram matrix T^T T; its top eigenvector is the right singular vector.
    std::vector<double> gram(9, 0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k) s += t(k, i) * t(k, j);
            gram[i * 3 + j] = s;
        }
    std::vector<double> vectors;
    jacobi_eigenvalues(std::move(gram), 3, &vectors);

    const BlochVector n{vectors[0 * 3 + 2], vectors[1 * 3 + 2], vectors[2 * 3 + 2]};
    const double tx = t(0, 0) * n.x + t(0, 1) * n.y + t(0, 2) * n.z;
    const double ty = t(1, 0) * n.x + t(1, 1) * n.y + t(1, 2) * n.z;
    const double tz = t(2, 0) * n.x + t(2, 1) * n.y + t(2, 2) * n.z;
    const double sigma = std::sqrt(tx * tx + ty * ty + tz * tz);
    if (sigma < 1e-150) return MaxCorrelation{0.0, BlochVector{}, BlochVector{}};

    // m aligned with T n makes E(m, n) = ||T n|| = sigma >= 0 by construction
    const BlochVector m{tx / sigma, ty / sigma, tz / sigma};
    return MaxCorrelation{sigma, m, n};
}

double grid_max_oracle(const CorrelationTensor& t, int n_steps) {
    if (n_steps < 8) throw std::invalid_argument("grid_max_oracle: n_steps must be >= 8");
    if (!finite_tensor(t)) throw std::invalid_argument("grid_max_oracle: non-finite entry");

    const double pi = std::numbers::pi;
    std::vector<double> sin_theta(n_steps), cos_theta(n_steps);
    std::vector<double> cos_phi(n_steps), sin_phi(n_steps);
    for (int i = 0; i < n_steps; ++i) {
        const double theta = pi * i / (n_steps - 1);
        sin_theta[i] = std::max(0.0, std::sin(theta)); // endpoint rounding must not go negative
        cos_theta[i] = std::cos(theta);
        const double phi = 2.0 * pi * i / n_steps;
        cos_phi[i] = std::cos(phi);
        sin_phi[i] = std::sin(phi);
    }

    // For fixed m, E(m, n) over the n-grid is sin(th)*(vx cos(ph) + vy sin(ph))
    // + vz cos(th) with v = T^T m. sin(th) >= 0, so the azimuth maximum
    // separates from the polar one and the full grid maximum costs O(n)
    // per m instead of O(n^2).
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n_steps; ++i) {
        for (int j = 0; j < n_steps; ++j) {
            const double mx = sin_theta[i] * cos_phi[j];
            const double my = sin_theta[i] * sin_phi[j];
            const double mz = cos_theta[i];
            const double vx = t(0, 0) * mx + t(1, 0) * my + t(2, 0) * mz;
            const double vy = t(0, 1) * mx + t(1, 1) * my + t(2, 1) * mz;
            const double vz = t(0, 2) * mx + t(1, 2) * my + t(2, 2) * mz;

            double azimuth_max = -std::numeric_limits<double>::infinity();
            for (int k = 0; k < n_steps; ++k)
                azimuth_max = std::max(azimuth_max, vx * cos_phi[k] + vy * sin_phi[k]);
            for (int k = 0; k < n_steps; ++k)
                best = std::max(best, sin_theta[k] * azimuth_max + cos_theta[k] * vz);
        }
    }
    return best;
}

bool xstate_zero_pattern(const CorrelationTensor& t, Tolerance tol) {
    return std::abs(t(0, 2)) <= tol.eps && std::abs(t(1, 2)) <= tol.eps &&
           std::abs(t(2, 0)) <= tol.eps && std::abs(t(2, 1)) <= tol.eps;
}

} // namespace qsteer
