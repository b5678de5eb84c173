#include "qsteer/steering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsteer {

namespace {

Classification classify(bool psd, bool entangled, bool fulfilled) {
    if (!psd) return Classification::NotApplicable;
    if (!entangled) return Classification::Separable;
    return fulfilled ? Classification::EntangledFulfilled : Classification::EntangledViolating;
}

SweepRecord make_record(double param, const XState& s, SteeringFunctional f, Tolerance tol) {
    const SteeringReport rep = steering_check(xstate_to_density(s), f, tol);
    return SweepRecord{param, rep.lhs, rep.rhs, rep.fulfilled, rep.entangled,
                       xstate_psd(s, tol)};
}

} // namespace

double steering_rhs(const CorrelationTensor& t, SteeringFunctional f) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            s += f == SteeringFunctional::SumSquared ? t(i, j) * t(i, j) : t(i, j);
    return (2.0 / 3.0) * s;
}

SteeringReport steering_check(const DensityMatrix& rho, SteeringFunctional f, Tolerance tol) {
    const ValidationReport v = validate_density(rho, tol);
    if (!v.valid)
        throw std::invalid_argument("steering_check: state failed validation");

    const CorrelationTensor t = correlation_tensor(rho);
    SteeringReport rep;
    rep.lhs = max_correlation(t).value;
    rep.rhs = steering_rhs(t, f);
    rep.fulfilled = rep.lhs >= rep.rhs - kFulfilledEps;
    rep.entangled = has_x_pattern(rho, tol) ? xstate_entangled(xstate_from_density(rho, tol))
                                            : ppt_entangled(rho, tol);
    rep.classification = classify(true, rep.entangled, rep.fulfilled);
    return rep;
}

std::vector<SweepRecord> sweep_werner(double p_lo, double p_hi, int n, SteeringFunctional f) {
    if (n < 2) throw std::invalid_argument("sweep_werner: need at least 2 grid points");
    if (!(p_lo < p_hi)) throw std::domain_error("sweep_werner: p_lo must be below p_hi");
    if (p_lo < -1.0 / 3.0 - 1e-12 || p_hi > 1.0 + 1e-12)
        throw std::domain_error("sweep_werner: range outside [-1/3, 1]");

    std::vector<SweepRecord> records;
    records.reserve(static_cast<size_t>(n));
    const double h = (p_hi - p_lo) / (n - 1);
    for (int k = 0; k < n; ++k) {
        double p = k == n - 1 ? p_hi : p_lo + k * h;
        p = std::clamp(p, -1.0 / 3.0, 1.0);
        records.push_back(make_record(p, werner(WernerParam{p}), f, Tolerance{}));
    }
    return records;
}

std::vector<SweepRecord> sweep_gisin(Complex a, int n, SteeringFunctional f) {
    if (n < 2) throw std::invalid_argument("sweep_gisin: need at least 2 grid points");
    const GisinParam proto = GisinParam::with_a(0.5, a);
    const double x_max = gisin_x_max(proto.a, proto.b);

    std::vector<SweepRecord> records;
    records.reserve(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double x = x_max * (k + 1) / (n + 1); // strictly inside (0, x_max)
        records.push_back(
            make_record(x, gisin(GisinParam{x, proto.a, proto.b}), f, Tolerance{}));
    }
    return records;
}

double boundary_bisection(Family family, SteeringFunctional f, double lo, double hi,
                          Tolerance tol, Complex gisin_a) {
    if (!(tol.eps > 0.0)) throw std::invalid_argument("boundary_bisection: tolerance must be positive");
    if (!(lo < hi)) throw std::domain_error("boundary_bisection: lo must be below hi");

    auto gap = [&](double param) {
        SteeringReport rep;
        if (family == Family::Werner) {
            rep = steering_check(xstate_to_density(werner(WernerParam{param})), f, tol);
        } else {
            rep = steering_check(xstate_to_density(gisin(GisinParam::with_a(param, gisin_a))), f, tol);
        }
        return rep.lhs - rep.rhs;
    };

    double g_lo = gap(lo);
    double g_hi = gap(hi);
    if (g_lo == 0.0) return lo;
    if (g_hi == 0.0) return hi;
    if ((g_lo > 0.0) == (g_hi > 0.0))
        throw std::domain_error("boundary_bisection: lhs-rhs does not change sign over the bracket");

    for (int it = 0; it < 200 && hi - lo > tol.eps; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double g_mid = gap(mid);
        if (g_mid == 0.0) return mid;
        if ((g_mid > 0.0) == (g_lo > 0.0)) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

bool ppt_entangled(const DensityMatrix& rho, Tolerance tol) {
    const auto eig = hermitian_eigenvalues(partial_transpose(rho), tol);
    return eig[0] < -tol.eps;
}

} // namespace qsteer
