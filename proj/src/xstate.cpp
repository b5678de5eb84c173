#include "qsteer/xstate.hpp"

#include <cmath>
#include <stdexcept>

namespace qsteer {

namespace {

// (i, j) pairs carrying the X pattern, upper triangle + diagonal
bool on_x_pattern(int i, int j) { return i == j || i + j == 3; }

} // namespace

GisinParam GisinParam::with_a(double x, Complex a) {
    const double a2 = std::norm(a);
    if (a2 > 1.0 + 1e-12) throw std::domain_error("gisin: |a| must not exceed 1");
    return GisinParam{x, a, Complex{std::sqrt(std::max(0.0, 1.0 - a2)), 0.0}};
}

XState werner(WernerParam w) {
    if (!(w.p >= -1.0 / 3.0 && w.p <= 1.0))
        throw std::domain_error("werner: p must lie in [-1/3, 1]");
    XState s;
    s.diag = {0.25 * (1.0 + w.p), 0.25 * (1.0 - w.p), 0.25 * (1.0 - w.p), 0.25 * (1.0 + w.p)};
    s.anti = Complex{0.5 * w.p, 0.0};
    s.inner = Complex{};
    return s;
}

XState gisin(const GisinParam& g) {
    if (!(g.x > 0.0 && g.x < 1.0)) throw std::domain_error("gisin: x must lie in (0, 1)");
    if (std::abs(std::norm(g.a) + std::norm(g.b) - 1.0) > 1e-10)
        throw std::domain_error("gisin: |a|^2 + |b|^2 must equal 1");
    XState s;
    s.diag = {0.5 * (1.0 - g.x), g.x * std::norm(g.a), g.x * std::norm(g.b), 0.5 * (1.0 - g.x)};
    s.anti = Complex{};
    s.inner = g.x * g.a * std::conj(g.b);
    return s;
}

double gisin_x_max(Complex a, Complex b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-10)
        throw std::domain_error("gisin_x_max: |a|^2 + |b|^2 must equal 1");
    return 1.0 / (1.0 + 2.0 * std::abs(a * b));
}

bool xstate_psd(const XState& s, Tolerance tol) {
    for (double d : s.diag)
        if (d < -tol.eps) return false;
    return s.diag[1] * s.diag[2] >= std::norm(s.inner) - tol.eps &&
           s.diag[0] * s.diag[3] >= std::norm(s.anti) - tol.eps;
}

bool xstate_entangled(const XState& s) {
    return std::norm(s.anti) > s.diag[1] * s.diag[2] ||
           std::norm(s.inner) > s.diag[0] * s.diag[3];
}

DensityMatrix xstate_to_density(const XState& s, IndexConvention conv) {
    DensityMatrix rho(conv);
    for (int i = 0; i < 4; ++i) rho.at(i, i) = Complex{s.diag[i], 0.0};
    rho.at(0, 3) = s.anti;
    rho.at(3, 0) = std::conj(s.anti);
    rho.at(1, 2) = s.inner;
    rho.at(2, 1) = std::conj(s.inner);
    return rho;
}

XState xstate_from_density(const DensityMatrix& rho, Tolerance tol) {
    if (!has_x_pattern(rho, tol))
        throw std::invalid_argument("xstate_from_density: off-pattern entries present");
    for (int i = 0; i < 4; ++i)
        if (std::abs(rho.at(i, i).imag()) > tol.eps)
            throw std::invalid_argument("xstate_from_density: diagonal is not real");
    if (std::abs(rho.at(3, 0) - std::conj(rho.at(0, 3))) > tol.eps ||
        std::abs(rho.at(2, 1) - std::conj(rho.at(1, 2))) > tol.eps)
        throw std::invalid_argument("xstate_from_density: anti-diagonal is not Hermitian");

    XState s;
    for (int i = 0; i < 4; ++i) s.diag[i] = rho.at(i, i).real();
    s.anti = rho.at(0, 3);
    s.inner = rho.at(1, 2);
    return s;
}

bool has_x_pattern(const DensityMatrix& rho, Tolerance tol) {
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (!on_x_pattern(i, j) && std::abs(rho.at(i, j)) > tol.eps) return false;
    return true;
}

} // namespace qsteer
