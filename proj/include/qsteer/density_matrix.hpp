#pragma once

#include <array>
#include <complex>
#include <string>
#include <string_view>

namespace qsteer {

using Complex = std::complex<double>;

/// Tolerance for structural checks (hermiticity, trace, positivity).
struct Tolerance {
    double eps = 1e-10;
};

/// Residual bound the eigensolver is held to: ||rho v - lambda v|| and
/// |sum(lambda) - tr| stay below this.
inline constexpr double kEigenResidualTol = 1e-9;

/// Trace deviations up to this are accepted as a warning when the caller
/// explicitly opts in; anything larger is always a failure.
inline constexpr double kTraceSlack = 1e-6;

/// How the four basis indices are labelled. Rows 1..4 read either as the
/// two-qubit pairs (1/2 1/2, 1/2 -1/2, -1/2 1/2, -1/2 -1/2) or as the
/// spin projections (3/2, 1/2, -1/2, -3/2). The mapping between the two
/// is positional and invertible; entries are never reordered.
enum class IndexConvention { TwoQubit, SpinProjection };

/// Dense 4x4 complex matrix with a basis-labelling convention attached.
/// Indices are 0-based in code; the label API speaks 1..4.
class DensityMatrix {
public:
    DensityMatrix() = default; // zero matrix
    explicit DensityMatrix(IndexConvention conv) : convention_(conv) {}

    static DensityMatrix maximally_mixed(
        IndexConvention conv = IndexConvention::SpinProjection);

    Complex& at(int i, int j) { return entries_[static_cast<size_t>(i) * 4 + j]; }
    const Complex& at(int i, int j) const { return entries_[static_cast<size_t>(i) * 4 + j]; }

    IndexConvention convention() const { return convention_; }
    void set_convention(IndexConvention c) { convention_ = c; }

    Complex trace() const;
    bool finite() const;

    /// max_ij |rho_ij - conj(rho_ji)|
    double hermiticity_defect() const;

    /// Same entries under the other labelling.
    DensityMatrix relabeled(IndexConvention c) const;

private:
    std::array<Complex, 16> entries_{};
    IndexConvention convention_ = IndexConvention::SpinProjection;
};

struct ValidationReport {
    bool hermitian = false;
    double trace_dev = 0.0;
    double min_eigenvalue = 0.0;
    bool psd = false;
    bool valid = false;
};

/// Checks hermiticity, unit trace and positive semidefiniteness.
/// With `allow_trace_slack` a trace deviation up to kTraceSlack is treated
/// as a warning instead of a failure; the deviation is still reported and
/// the matrix is never rescaled behind the caller's back.
/// Throws std::invalid_argument on non-finite entries.
ValidationReport validate_density(const DensityMatrix& rho, Tolerance tol = {},
                                  bool allow_trace_slack = false);

/// Explicit rescale by 1/tr(rho). Rejects deviations beyond kTraceSlack.
DensityMatrix normalized(const DensityMatrix& rho);

/// All four eigenvalues, ascending. Requires hermiticity within tol.
std::array<double, 4> hermitian_eigenvalues(const DensityMatrix& rho, Tolerance tol = {});

struct EigenSystem {
    std::array<double, 4> values{};                  // ascending
    std::array<std::array<Complex, 4>, 4> vectors{}; // vectors[k] pairs with values[k]
};

EigenSystem hermitian_eigensystem(const DensityMatrix& rho, Tolerance tol = {});

/// Basis label of row/column i (1..4) under the given convention, and its
/// inverse. Both directions reject anything outside the four labels.
std::string index_label(int i, IndexConvention conv);
int index_from_label(std::string_view label, IndexConvention conv);

/// Transpose of the second factor in the two-qubit reading of the indices:
/// with i=(a,b), j=(c,d), the (i,j) entry becomes rho[(a,d),(c,b)].
DensityMatrix partial_transpose(const DensityMatrix& rho);

} // namespace qsteer
