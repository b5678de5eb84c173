#pragma once

#include <array>

#include "qsteer/density_matrix.hpp"

namespace qsteer {

/// 3x3 real correlation tensor of a 4x4 state. Entries are dimensionless
/// and bounded by 1 in magnitude for any valid state.
class CorrelationTensor {
public:
    CorrelationTensor() = default;
    explicit CorrelationTensor(const std::array<double, 9>& t) : t_(t) {}

    static CorrelationTensor diagonal(double t11, double t22, double t33);

    double operator()(int i, int j) const { return t_[static_cast<size_t>(i) * 3 + j]; }
    double& at(int i, int j) { return t_[static_cast<size_t>(i) * 3 + j]; }

    CorrelationTensor transposed() const;

private:
    std::array<double, 9> t_{};
};

/// Real measurement direction; unit length up to the tolerance the
/// consuming operation enforces.
struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    double norm() const;
};

/// Spectral-norm maximum of the bilinear form together with the unit
/// vectors that attain it. value = E(m_star, n_star) >= 0 always holds.
struct MaxCorrelation {
    double value = 0.0;
    BlochVector m_star{};
    BlochVector n_star{};
};

/// T_ij from the fixed entry combinations, e.g.
///   T11 = rho14 + rho23 + rho32 + rho41,
///   T33 = rho11 - rho22 - rho33 + rho44.
/// For Hermitian input every imaginary part cancels; the largest residual
/// imaginary magnitude is reported through max_imag_out (if given) and a
/// residual above 1e-9 is rejected as a sign of non-Hermitian input.
CorrelationTensor correlation_tensor(const DensityMatrix& rho,
                                     double* max_imag_out = nullptr);

/// E(m, n) = sum_ij T_ij m_i n_j. Both vectors must be unit within tol.
double correlation_value(const CorrelationTensor& t, const BlochVector& m,
                         const BlochVector& n, Tolerance tol = {});

/// Exact maximum of E over pairs of unit vectors: the largest singular
/// value of T, certificate vectors included. Computed from the Jacobi
/// eigendecomposition of T^T T.
MaxCorrelation max_correlation(const CorrelationTensor& t);

/// Independent lower-bound oracle: the maximum of E over the product of
/// two spherical-angle grids (theta in [0, pi] inclusive, phi in [0, 2pi)
/// exclusive, n_steps points each, so n_steps^2 x n_steps^2 pairs).
/// Never exceeds the true maximum and converges to it as n_steps grows.
/// Requires n_steps >= 8.
double grid_max_oracle(const CorrelationTensor& t, int n_steps);

/// True iff T13, T23, T31, T32 all vanish within tol like every X-pattern
/// state's tensor does.
bool xstate_zero_pattern(const CorrelationTensor& t, Tolerance tol = {});

} // namespace qsteer
