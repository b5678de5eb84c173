#pragma once

#include "qsteer/density_matrix.hpp"

namespace qsteer {

/// Reduced form of a state whose only nonzero entries sit on the diagonal
/// and the anti-diagonal. diag holds rho11..rho44, anti = rho14,
/// inner = rho23; the conjugates at (4,1) and (3,2) are implied.
struct XState {
    std::array<double, 4> diag{};
    Complex anti{};
    Complex inner{};
};

struct WernerParam {
    double p = 0.0; // valid range [-1/3, 1]
};

struct GisinParam {
    double x = 0.5; // valid range (0, 1)
    Complex a{};
    Complex b{};

    /// b fixed to +sqrt(1 - |a|^2) when only a is supplied.
    static GisinParam with_a(double x, Complex a);
};

/// Diagonal ((1+p)/4, (1-p)/4, (1-p)/4, (1+p)/4) with anti = p/2.
XState werner(WernerParam w);

/// d1 = d4 = (1-x)/2, d2 = x|a|^2, d3 = x|b|^2, inner = x a conj(b).
XState gisin(const GisinParam& g);

/// 1/(1 + 2|ab|): the largest x for which the partial transpose of the
/// Gisin matrix stays PSD. The matrix itself is a valid state on all of
/// (0, 1); beyond x_max it is entangled.
double gisin_x_max(Complex a, Complex b);

/// True positivity of the expanded matrix, via the block conditions
/// d2 d3 >= |inner|^2 and d1 d4 >= |anti|^2 (diagonal nonnegative).
/// Agrees with the eigenvalue verdict on the dense matrix.
bool xstate_psd(const XState& s, Tolerance tol = {});

/// Partial-transpose criterion specialised to the X pattern:
/// entangled iff |anti| > sqrt(d2 d3) or |inner| > sqrt(d1 d4).
/// Exact for this matrix shape.
bool xstate_entangled(const XState& s);

DensityMatrix xstate_to_density(const XState& s,
                                IndexConvention conv = IndexConvention::SpinProjection);

/// Inverse of xstate_to_density. Rejects input whose off-X entries exceed
/// tol or whose X entries are not Hermitian-consistent.
XState xstate_from_density(const DensityMatrix& rho, Tolerance tol = {});

/// True when every entry outside the diagonal/anti-diagonal is below tol.
bool has_x_pattern(const DensityMatrix& rho, Tolerance tol = {});

} // namespace qsteer
