#pragma once

#include <array>
#include <utility>

#include "qsteer/density_matrix.hpp"

namespace qsteer {

/// Joint distribution of two binary outcomes ("coins"): w(i, j) is the
/// probability of (m1 = i, m2 = j) with sides i, j in {1, 2}.
struct JointCoinDistribution {
    std::array<double, 4> w{}; // row-major 2x2

    double operator()(int side1, int side2) const {
        return w[static_cast<size_t>(side1 - 1) * 2 + (side2 - 1)];
    }
};

/// Probabilities of the four spin projections {3/2, 1/2, -1/2, -3/2}.
struct OutcomeDistribution {
    double p32 = 0.0;
    double p12 = 0.0;
    double pm12 = 0.0;
    double pm32 = 0.0;
};

/// The two binary regroupings of the four levels:
/// grouping B pairs {3/2, -1/2} vs {-3/2, 1/2}   -> p1, p2
/// grouping A pairs {3/2, 1/2}  vs {-3/2, -1/2}  -> pt1, pt2
struct CoarsePair {
    double p1 = 0.0;
    double p2 = 0.0;
    double pt1 = 0.0;
    double pt2 = 0.0;
};

/// Row and column sums: (w1(m1), w2(m2)), each a distribution over {1, 2}.
std::pair<std::array<double, 2>, std::array<double, 2>>
coin_marginals(const JointCoinDistribution& w);

/// sum s(m1) s(m2) w(m1, m2) with side values s(1) = +1, s(2) = -1, so
/// independence gives 0 and the result lives in [-1, 1].
double coin_correlation(const JointCoinDistribution& w);

/// Literal sum m1 m2 w(m1, m2) with the raw side numbers {1, 2}.
double coin_correlation_raw(const JointCoinDistribution& w);

/// p1 = p32 + pm12, p2 = pm32 + p12, pt1 = p32 + p12, pt2 = pm32 + pm12.
CoarsePair qudit_coarse(const OutcomeDistribution& d);

/// Correlation between the two regroupings with +/-1 outcome values:
/// p32 - p12 - pm12 + pm32. Equals T33 of the underlying state.
double coarse_correlation(const OutcomeDistribution& d);

/// coarse_correlation centered by the product of grouping biases:
/// correlation - (pt1 - pt2)(p1 - p2).
double coarse_covariance(const OutcomeDistribution& d);

/// Diagonal of rho read as the spin-projection outcome distribution.
OutcomeDistribution outcome_distribution(const DensityMatrix& rho);

} // namespace qsteer
