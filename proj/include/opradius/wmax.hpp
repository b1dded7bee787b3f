#pragma once

#include "opradius/bracket.hpp"
#include "opradius/cmatrix.hpp"
#include "opradius/rng.hpp"

namespace opradius {

/// Factorization x = (a (x) I_d) y (b (x) I_d) with unit-spectral-norm middle
/// factor, witnessing the W_max upper bound (1/2)||a a* + b* b||. a is an
/// n x r scalar matrix, y lives at level r over blocks of size d, b is r x n.
struct Decomposition {
    CMatrix a;
    CMatrix y;
    CMatrix b;
    int d = 1;

    int level_n() const { return a.rows(); }
    int inner_r() const { return a.cols(); }
    /// The element this decomposition factors.
    CMatrix reconstruct() const;
};

/// Validates the decomposition against its target x (unit middle factor to
/// 1e-9, reconstruction to 1e-9 max-entry) and returns
/// (1/2)||a a* + b* b||, by definition an upper bound on W_max(x).
double wmax_upper(const Decomposition& dec, const CMatrix& x);

struct WmaxSearch {
    Bracket bracket;
    Decomposition best;
};

/// Certified bracket for W_max(x) at level n over block size d.
///
/// At n = 1 the value is exactly ||x||: a a* and b* b are nonnegative scalars,
/// so (1/2)||a a* + b* b|| = (||a||^2 + ||b||^2)/2 >= ||a|| ||b|| >= ||a y b||
/// = ||x||, and the factorization (sqrt||x||, x/||x||, sqrt||x||) attains the
/// bound. For n >= 2 the bracket is [||x||/2, min over decompositions]: the
/// trivial factorization plus `budget` randomized trials with inner size r in
/// {n, ..., 2n}, each rescaled to a unit middle factor and rebalanced by the
/// optimal scalar t = (||b||/||a||)^{1/2}.
WmaxSearch wmax_search(const CMatrix& x, int n, int d, long budget, Rng& rng);

/// Bracket-only façade over wmax_search.
Bracket wmax_bracket(const CMatrix& x, int n, int d, long budget, Rng& rng);

/// Upper bound on W_max([[0, x1], [x2, 0]]) from decompositions of the two
/// blocks, via [[a1, 0], [0, a2]] diag(y1, y2) [[0, b1], [b2, 0]]:
/// (1/2)||diag(a1 a1* + b2* b2, a2 a2* + b1* b1)||. Asserts the bound chain
/// result <= (1/2)||a1 a1* + b2* b2 + a2 a2* + b1* b1||
///        <= wmax_upper(dec1) + wmax_upper(dec2)
/// to 1e-9; a failure signals an implementation bug.
double offdiag_wmax_upper(const Decomposition& dec1, const CMatrix& x1, const Decomposition& dec2,
                          const CMatrix& x2);

/// Upper bound on W_max([[0, x1+x2], [x1-x2, 0]]) from decompositions of x1
/// and x2, via the explicit 2x4 / 4x4 / 4x2 block factorization with middle
/// factor diag(y1, y2, y1, y2): (1/2)||a1 a1* + a2 a2* + b1* b1 + b2* b2||.
/// The factorization is rebuilt and must reproduce the target to 1e-9
/// max-entry before the value is returned.
double sumdiff_wmax_upper(const Decomposition& dec1, const CMatrix& x1, const Decomposition& dec2,
                          const CMatrix& x2);

} // namespace opradius
