#include "qsteer/coarse_grain.hpp"

#include <cmath>
#include <stdexcept>

namespace qsteer {

namespace {

constexpr double kDistTol = 1e-9;

void require_distribution(const double* p, size_t n, const char* what) {
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
        if (!std::isfinite(p[i]) || p[i] < -kDistTol)
            throw std::domain_error(std::string(what) + ": entries must be nonnegative");
        sum += p[i];
    }
    if (std::abs(sum - 1.0) > kDistTol)
        throw std::domain_error(std::string(what) + ": entries must sum to 1");
}

void require_joint(const JointCoinDistribution& w) {
    require_distribution(w.w.data(), 4, "coin distribution");
}

void require_outcomes(const OutcomeDistribution& d) {
    const double p[4] = {d.p32, d.p12, d.pm12, d.pm32};
    require_distribution(p, 4, "outcome distribution");
}

} // namespace

std::pair<std::array<double, 2>, std::array<double, 2>>
coin_marginals(const JointCoinDistribution& w) {
    require_joint(w);
    std::array<double, 2> first{w(1, 1) + w(1, 2), w(2, 1) + w(2, 2)};
    std::array<double, 2> second{w(1, 1) + w(2, 1), w(1, 2) + w(2, 2)};
    return {first, second};
}

double coin_correlation(const JointCoinDistribution& w) {
    require_joint(w);
    return w(1, 1) - w(1, 2) - w(2, 1) + w(2, 2);
}

double coin_correlation_raw(const JointCoinDistribution& w) {
    require_joint(w);
    double s = 0.0;
    for (int m1 = 1; m1 <= 2; ++m1)
        for (int m2 = 1; m2 <= 2; ++m2) s += m1 * m2 * w(m1, m2);
    return s;
}

CoarsePair qudit_coarse(const OutcomeDistribution& d) {
    require_outcomes(d);
    CoarsePair c;
    c.p1 = d.p32 + d.pm12;
    c.p2 = d.pm32 + d.p12;
    c.pt1 = d.p32 + d.p12;
    c.pt2 = d.pm32 + d.pm12;
    return c;
}

double coarse_correlation(const OutcomeDistribution& d) {
    require_outcomes(d);
    return d.p32 - d.p12 - d.pm12 + d.pm32;
}

double coarse_covariance(const OutcomeDistribution& d) {
    const CoarsePair c = qudit_coarse(d);
    return coarse_correlation(d) - (c.pt1 - c.pt2) * (c.p1 - c.p2);
}

OutcomeDistribution outcome_distribution(const DensityMatrix& rho) {
    OutcomeDistribution d;
    d.p32 = rho.at(0, 0).real();
    d.p12 = rho.at(1, 1).real();
    d.pm12 = rho.at(2, 2).real();
    d.pm32 = rho.at(3, 3).real();
    return d;
}

} // namespace qsteer
