#pragma once

#include <vector>

#include "qsteer/correlation.hpp"
#include "qsteer/xstate.hpp"

namespace qsteer {

/// Right-hand-side functional of the detection inequality.
/// SumSquared: (2/3) sum_ij T_ij^2 (default).
/// SumLiteral: (2/3) sum_ij T_ij, kept selectable for comparison.
enum class SteeringFunctional { SumSquared, SumLiteral };

/// Neutral outcome labels; no steering semantics baked in.
enum class Classification { Separable, EntangledFulfilled, EntangledViolating, NotApplicable };

struct SteeringReport {
    double lhs = 0.0; // max correlation
    double rhs = 0.0;
    bool fulfilled = false;
    bool entangled = false;
    Classification classification = Classification::NotApplicable;
};

struct SweepRecord {
    double param = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool fulfilled = false;
    bool entangled = false;
    bool psd = false;
};

/// Comparison slack: lhs >= rhs - kFulfilledEps counts as fulfilled, so
/// exact-equality boundary points land on the fulfilled side.
inline constexpr double kFulfilledEps = 1e-12;

double steering_rhs(const CorrelationTensor& t, SteeringFunctional f);

/// Full check of one state: validates rho, extracts the tensor, compares
/// the spectral maximum against the functional, and tests entanglement
/// (X-pattern closed form when it applies, dense PPT otherwise).
/// Throws std::invalid_argument when rho fails validation.
SteeringReport steering_check(const DensityMatrix& rho,
                              SteeringFunctional f = SteeringFunctional::SumSquared,
                              Tolerance tol = {});

/// n uniformly spaced records over [p_lo, p_hi], endpoints included.
/// The range must stay inside [-1/3, 1]; n >= 2.
std::vector<SweepRecord> sweep_werner(double p_lo, double p_hi, int n,
                                      SteeringFunctional f = SteeringFunctional::SumSquared);

/// n records strictly inside (0, x_max(a)), ascending; n >= 2.
/// b is fixed to +sqrt(1 - |a|^2).
std::vector<SweepRecord> sweep_gisin(Complex a, int n,
                                     SteeringFunctional f = SteeringFunctional::SumSquared);

enum class Family { Werner, Gisin };

/// Locates the parameter where lhs - rhs crosses zero by bisection
/// (at most 200 iterations, interval shrunk below tol.eps).
/// The gap must change sign between lo and hi, else a bracket error.
/// gisin_a only matters for the Gisin family.
double boundary_bisection(Family family, SteeringFunctional f, double lo, double hi,
                          Tolerance tol = {}, Complex gisin_a = Complex{0.2, 0.0});

/// Dense-matrix entanglement test: the partial transpose acquires a
/// negative eigenvalue. Necessary and sufficient at this dimension.
bool ppt_entangled(const DensityMatrix& rho, Tolerance tol = {});

} // namespace qsteer
