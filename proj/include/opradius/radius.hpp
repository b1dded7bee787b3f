#pragma once

#include "opradius/bracket.hpp"
#include "opradius/cmatrix.hpp"
#include "opradius/rng.hpp"

namespace opradius {

/// Default cap on eigensolves per numerical_radius call.
inline constexpr long kRadiusEvalBudget = 1'000'000;

/// Support function of the numerical range in direction theta:
/// lambda_max((e^{i theta} A + e^{-i theta} A*) / 2). Its maximum over theta
/// is the numerical radius.
double support_function(const CMatrix& A, double theta);

/// Certified bracket for the numerical radius w(A) with hi - lo <= eps.
///
/// w(A) = max_theta f(theta) with f the support function. f is evaluated on a
/// grid (64 points initially) and cells are split while their certified upper
/// bound exceeds lo + eps. Two bounds certify each cell of center c and
/// halfwidth h: the Lipschitz bound f(c) + ||A||_F * h, and the support bound
/// f(c) / cos(h), valid because f dominates the sinusoid
/// w * cos(theta - theta*) through the maximizing boundary point, so a cell
/// containing theta* satisfies w <= f(c) / cos(h). Eigensolve error is folded
/// in as a symmetric pad. The global bound w <= (||A|| + ||A^2||^(1/2)) / 2
/// caps hi from the start; with a compensated matrix square it is tight for
/// Hermitian and square-zero inputs, whose support functions are otherwise
/// the scan's worst case (flat).
///
/// If the eval budget runs out, the best valid bracket is returned flagged
/// uncertified (method generic).
Bracket numerical_radius(const CMatrix& A, double eps, long max_evals = kRadiusEvalBudget);

/// Max of |v* A v| over `samples` Haar-uniform unit vectors; a guaranteed
/// lower bound for w(A) and the independent oracle used against the scan.
double rayleigh_lower_bound(const CMatrix& A, long samples, Rng& rng);

} // namespace opradius
