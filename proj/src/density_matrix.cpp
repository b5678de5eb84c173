#include "qsteer/density_matrix.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "qsteer/jacobi.hpp"

namespace qsteer {

namespace {

void require_tolerance(Tolerance tol) {
    if (!(tol.eps > 0.0)) throw std::invalid_argument("tolerance must be positive");
}

// Embed the Hermitian part of rho as the 8x8 real symmetric [[A, -B], [B, A]]
// (rho = A + iB). Its spectrum is the complex spectrum doubled, and a real
// eigenvector [x; y] maps back to the complex eigenvector x + iy.
std::vector<double> real_embedding_of_hermitian_part(const DensityMatrix& rho) {
    std::vector<double> m(64, 0.0);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Complex h = 0.5 * (rho.at(i, j) + std::conj(rho.at(j, i)));
            m[i * 8 + j] = h.real();
            m[(i + 4) * 8 + (j + 4)] = h.real();
            m[i * 8 + (j + 4)] = -h.imag();
            m[(i + 4) * 8 + j] = h.imag();
        }
    }
    return m;
}

// Doubled spectrum sorted ascending: every second entry recovers the
// complex spectrum sorted ascending.
std::array<double, 4> pick_complex_spectrum(const std::vector<double>& doubled) {
    return {doubled[0], doubled[2], doubled[4], doubled[6]};
}

std::array<double, 4> eigenvalues_of_hermitian_part(const DensityMatrix& rho) {
    return pick_complex_spectrum(jacobi_eigenvalues(real_embedding_of_hermitian_part(rho), 8));
}

constexpr const char* kTwoQubitLabels[4] = {"1/2 1/2", "1/2 -1/2", "-1/2 1/2", "-1/2 -1/2"};
constexpr const char* kSpinLabels[4] = {"3/2", "1/2", "-1/2", "-3/2"};

} // namespace

DensityMatrix DensityMatrix::maximally_mixed(IndexConvention conv) {
    DensityMatrix rho(conv);
    for (int i = 0; i < 4; ++i) rho.at(i, i) = Complex{0.25, 0.0};
    return rho;
}

Complex DensityMatrix::trace() const {
    Complex t{};
    for (int i = 0; i < 4; ++i) t += at(i, i);
    return t;
}

bool DensityMatrix::finite() const {
    for (const Complex& e : entries_)
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    return true;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
}

DensityMatrix DensityMatrix::relabeled(IndexConvention c) const {
    DensityMatrix out = *this;
    out.convention_ = c;
    return out;
}

ValidationReport validate_density(const DensityMatrix& rho, Tolerance tol,
                                  bool allow_trace_slack) {
    require_tolerance(tol);
    if (!rho.finite()) throw std::invalid_argument("validate_density: non-finite entry");

    ValidationReport report;
    report.hermitian = rho.hermiticity_defect() <= tol.eps;
    report.trace_dev = std::abs(rho.trace() - Complex{1.0, 0.0});
    const auto eig = eigenvalues_of_hermitian_part(rho);
    report.min_eigenvalue = eig[0];
    report.psd = report.min_eigenvalue >= -tol.eps;
    const bool trace_ok =
        report.trace_dev <= tol.eps || (allow_trace_slack && report.trace_dev <= kTraceSlack);
    report.valid = report.hermitian && trace_ok && report.psd;
    return report;
}

DensityMatrix normalized(const DensityMatrix& rho) {
    if (!rho.finite()) throw std::invalid_argument("normalized: non-finite entry");
    const Complex t = rho.trace();
    if (std::abs(t - Complex{1.0, 0.0}) > kTraceSlack)
        throw std::domain_error("normalized: trace deviates by more than the accepted slack");
    DensityMatrix out = rho;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out.at(i, j) /= t;
    return out;
}

std::array<double, 4> hermitian_eigenvalues(const DensityMatrix& rho, Tolerance tol) {
    require_tolerance(tol);
    if (!rho.finite()) throw std::invalid_argument("hermitian_eigenvalues: non-finite entry");
    if (rho.hermiticity_defect() > tol.eps)
        throw std::invalid_argument("hermitian_eigenvalues: matrix is not Hermitian within tolerance");
    return eigenvalues_of_hermitian_part(rho);
}

EigenSystem hermitian_eigensystem(const DensityMatrix& rho, Tolerance tol) {
    require_tolerance(tol);
    if (!rho.finite()) throw std::invalid_argument("hermitian_eigensystem: non-finite entry");
    if (rho.hermiticity_defect() > tol.eps)
        throw std::invalid_argument("hermitian_eigensystem: matrix is not Hermitian within tolerance");

    std::vector<double> vectors;
    const auto doubled = jacobi_eigenvalues(real_embedding_of_hermitian_part(rho), 8, &vectors);

    EigenSystem sys;
    sys.values = pick_complex_spectrum(doubled);
    for (int k = 0; k < 4; ++k) {
        const int col = 2 * k;
        for (int i = 0; i < 4; ++i)
            sys.vectors[k][i] = Complex{vectors[i * 8 + col], vectors[(i + 4) * 8 + col]};
    }
    return sys;
}

std::string index_label(int i, IndexConvention conv) {
    if (i < 1 || i > 4) throw std::out_of_range("index_label: index must be in 1..4");
    return conv == IndexConvention::TwoQubit ? kTwoQubitLabels[i - 1] : kSpinLabels[i - 1];
}

int index_from_label(std::string_view label, IndexConvention conv) {
    const auto& table = conv == IndexConvention::TwoQubit ? kTwoQubitLabels : kSpinLabels;
    for (int i = 0; i < 4; ++i)
        if (label == table[i]) return i + 1;
    throw std::out_of_range("index_from_label: unknown label '" + std::string(label) + "'");
}

DensityMatrix partial_transpose(const DensityMatrix& rho) {
    DensityMatrix out(rho.convention());
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    out.at(2 * a + b, 2 * c + d) = rho.at(2 * a + d, 2 * c + b);
    return out;
}

} // namespace qsteer
