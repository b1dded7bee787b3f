#include "opradius/wmax.hpp"

#include <cmath>

#include "opradius/eigen.hpp"

namespace opradius {

namespace {

constexpr double kDecompTol = 1e-9;

void place(CMatrix& dst, int i0, int j0, const CMatrix& src) {
    for (int i = 0; i < src.rows(); ++i)
        for (int j = 0; j < src.cols(); ++j) dst.at(i0 + i, j0 + j) = src.at(i, j);
}

// Gauss-Jordan inverse with partial pivoting; inputs are tiny (<= 2n x 2n
// scalar Gram matrices). Returns false when a pivot degenerates.
bool invert(const CMatrix& m, CMatrix& out) {
    const int n = m.rows();
    CMatrix a = m;
    out = CMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a.at(col, col));
        for (int i = col + 1; i < n; ++i) {
            const double v = std::abs(a.at(i, col));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best < 1e-12) return false;
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(out.at(piv, j), out.at(col, j));
            }
        }
        const Complex inv_p = Complex(1.0, 0.0) / a.at(col, col);
        for (int j = 0; j < n; ++j) {
            a.at(col, j) *= inv_p;
            out.at(col, j) *= inv_p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            const Complex f = a.at(i, col);
            if (f == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= f * a.at(col, j);
                out.at(i, j) -= f * out.at(col, j);
            }
        }
    }
    return true;
}

void validate(const Decomposition& dec, const CMatrix& x, const char* who) {
    const int n = dec.a.rows();
    const int r = dec.a.cols();
    if (dec.b.rows() != r || dec.b.cols() != n)
        throw std::invalid_argument(std::string(who) + ": a and b have incompatible shapes");
    if (dec.d < 1) throw std::invalid_argument(std::string(who) + ": block size must be positive");
    if (!dec.y.is_square() || dec.y.rows() != r * dec.d)
        throw std::invalid_argument(std::string(who) + ": middle factor has the wrong size");
    if (x.rows() != n * dec.d || x.cols() != n * dec.d)
        throw std::invalid_argument(std::string(who) + ": target has the wrong size");
    const double ny = spectral_norm(dec.y);
    if (std::abs(ny - 1.0) > kDecompTol)
        throw std::invalid_argument(std::string(who) + ": middle factor is not unit norm");
    if (max_abs_diff(dec.reconstruct(), x) > kDecompTol * (1.0 + x.max_abs()))
        throw std::invalid_argument(std::string(who) + ": decomposition does not reconstruct the target");
}

double half_norm_gram(const CMatrix& a, const CMatrix& b) {
    const CMatrix g = a * a.adjoint() + b.adjoint() * b;
    return 0.5 * spectral_norm(g);
}

Decomposition trivial_decomposition(const CMatrix& x, int n, int d, double nx) {
    const double s = std::sqrt(nx);
    Decomposition dec;
    dec.a = CMatrix::identity(n).scaled(s);
    dec.y = x.scaled(1.0 / nx);
    dec.b = CMatrix::identity(n).scaled(s);
    dec.d = d;
    return dec;
}

Decomposition zero_decomposition(int n, int d) {
    Decomposition dec;
    dec.a = CMatrix::zero(n, n);
    dec.y = CMatrix::identity(n * d);
    dec.b = CMatrix::zero(n, n);
    dec.d = d;
    return dec;
}

} // namespace

CMatrix Decomposition::reconstruct() const {
    return scalar_embed(a, d) * y * scalar_embed(b, d);
}

double wmax_upper(const Decomposition& dec, const CMatrix& x) {
    validate(dec, x, "wmax_upper");
    return half_norm_gram(dec.a, dec.b);
}

WmaxSearch wmax_search(const CMatrix& x, int n, int d, long budget, Rng& rng) {
    if (n < 1 || d < 1) throw std::invalid_argument("wmax_search: levels must be positive");
    if (x.rows() != n * d || x.cols() != n * d)
        throw std::invalid_argument("wmax_search: x must be (n*d) x (n*d)");
    if (budget < 0) throw std::invalid_argument("wmax_search: budget must be nonnegative");

    const long solves0 = eigensolve_count();

    if (x.is_zero()) {
        WmaxSearch out{Bracket{0.0, 0.0, BracketMethod::exact_rule, 0, true}, zero_decomposition(n, d)};
        return out;
    }

    const double nx = spectral_norm(x);
    Decomposition best = trivial_decomposition(x, n, d, nx);

    if (n == 1) {
        // Exact rule: W_max = ||x|| at level one (see header).
        WmaxSearch out{Bracket{nx, nx, BracketMethod::exact_rule, eigensolve_count() - solves0, true}, best};
        return out;
    }

    const double lo = 0.5 * nx;
    double hi = half_norm_gram(best.a, best.b);

    for (long trial = 0; trial < budget; ++trial) {
        const int r = n + static_cast<int>(rng.below(static_cast<std::uint64_t>(n) + 1));
        CMatrix a(n, r), b(r, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < r; ++j) a.at(i, j) = rng.complex_gaussian();
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) b.at(i, j) = rng.complex_gaussian();

        CMatrix gai, gbi;
        if (!invert(a * a.adjoint(), gai) || !invert(b.adjoint() * b, gbi)) continue;
        const CMatrix a_pinv = a.adjoint() * gai; // r x n, a * a_pinv = I
        const CMatrix b_pinv = gbi * b.adjoint(); // n x r, b_pinv * b = I

        CMatrix y = scalar_embed(a_pinv, d) * x * scalar_embed(b_pinv, d);
        const double t0 = spectral_norm(y);
        if (t0 < 1e-12) continue;
        y = y.scaled(1.0 / t0);
        CMatrix bs = b.scaled(t0);

        Decomposition cand{a, y, bs, d};
        if (max_abs_diff(cand.reconstruct(), x) > kDecompTol * (1.0 + x.max_abs())) continue;

        double val = half_norm_gram(a, bs);
        // Rebalance by the optimal scalar; keep whichever value is smaller.
        const double na = spectral_norm(a);
        const double nb = spectral_norm(bs);
        if (na > 1e-12 && nb > 1e-12) {
            const double t = std::sqrt(nb / na);
            const double val_bal = half_norm_gram(a.scaled(t), bs.scaled(1.0 / t));
            if (val_bal < val) {
                val = val_bal;
                cand.a = a.scaled(t);
                cand.b = bs.scaled(1.0 / t);
            }
        }
        if (val < hi) {
            hi = val;
            best = std::move(cand);
        }
    }

    hi = std::max(hi, lo);
    const BracketMethod method =
        budget > 0 ? BracketMethod::decomposition_search : BracketMethod::generic;
    WmaxSearch out{Bracket{lo, hi, method, eigensolve_count() - solves0, true}, std::move(best)};
    return out;
}

Bracket wmax_bracket(const CMatrix& x, int n, int d, long budget, Rng& rng) {
    return wmax_search(x, n, d, budget, rng).bracket;
}

double offdiag_wmax_upper(const Decomposition& dec1, const CMatrix& x1, const Decomposition& dec2,
                          const CMatrix& x2) {
    validate(dec1, x1, "offdiag_wmax_upper(dec1)");
    validate(dec2, x2, "offdiag_wmax_upper(dec2)");
    if (!x1.same_shape(x2) || dec1.d != dec2.d || dec1.level_n() != dec2.level_n())
        throw std::invalid_argument("offdiag_wmax_upper: blocks must live at one level");

    const int n = dec1.level_n();
    const int r1 = dec1.inner_r();
    const int r2 = dec2.inner_r();
    const int d = dec1.d;

    // [[a1, 0], [0, a2]] diag(y1, y2) [[0, b1], [b2, 0]] = [[0, x1], [x2, 0]].
    CMatrix a_big(2 * n, r1 + r2);
    place(a_big, 0, 0, dec1.a);
    place(a_big, n, r1, dec2.a);
    const CMatrix y_big = direct_sum(dec1.y, dec2.y);
    CMatrix b_big(r1 + r2, 2 * n);
    place(b_big, 0, n, dec1.b);
    place(b_big, r1, 0, dec2.b);

    const CMatrix target = block2x2({CMatrix::zero(x1.rows(), x1.cols()), x1, x2,
                                     CMatrix::zero(x1.rows(), x1.cols())});
    const CMatrix rebuilt = scalar_embed(a_big, d) * y_big * scalar_embed(b_big, d);
    if (max_abs_diff(rebuilt, target) > kDecompTol * (1.0 + target.max_abs()))
        throw std::logic_error("offdiag_wmax_upper: combined factorization failed to reconstruct");

    const CMatrix s1 = dec1.a * dec1.a.adjoint() + dec2.b.adjoint() * dec2.b;
    const CMatrix s2 = dec2.a * dec2.a.adjoint() + dec1.b.adjoint() * dec1.b;
    const double value = 0.5 * std::max(spectral_norm(s1), spectral_norm(s2));

    // Proof chain: max(||A||, ||B||) <= ||A + B|| for positive A, B, then the
    // triangle inequality splits the Gram sums.
    const double mid = 0.5 * spectral_norm(s1 + s2);
    const double u1 = half_norm_gram(dec1.a, dec1.b);
    const double u2 = half_norm_gram(dec2.a, dec2.b);
    if (value > mid + kDecompTol || mid > u1 + u2 + kDecompTol)
        throw std::logic_error("offdiag_wmax_upper: bound chain violated");

    return value;
}

double sumdiff_wmax_upper(const Decomposition& dec1, const CMatrix& x1, const Decomposition& dec2,
                          const CMatrix& x2) {
    validate(dec1, x1, "sumdiff_wmax_upper(dec1)");
    validate(dec2, x2, "sumdiff_wmax_upper(dec2)");
    if (!x1.same_shape(x2) || dec1.d != dec2.d || dec1.level_n() != dec2.level_n())
        throw std::invalid_argument("sumdiff_wmax_upper: blocks must live at one level");

    const int n = dec1.level_n();
    const int r1 = dec1.inner_r();
    const int r2 = dec2.inner_r();
    const int d = dec1.d;

    // [[a1, a2, 0, 0], [0, 0, a1, a2]] diag(y1, y2, y1, y2)
    // [[0, b1], [0, b2], [b1, 0], [-b2, 0]] = [[0, x1+x2], [x1-x2, 0]].
    CMatrix a_big(2 * n, 2 * (r1 + r2));
    place(a_big, 0, 0, dec1.a);
    place(a_big, 0, r1, dec2.a);
    place(a_big, n, r1 + r2, dec1.a);
    place(a_big, n, 2 * r1 + r2, dec2.a);

    const CMatrix y_big = direct_sum(direct_sum(dec1.y, dec2.y), direct_sum(dec1.y, dec2.y));

    CMatrix b_big(2 * (r1 + r2), 2 * n);
    place(b_big, 0, n, dec1.b);
    place(b_big, r1, n, dec2.b);
    place(b_big, r1 + r2, 0, dec1.b);
    place(b_big, 2 * r1 + r2, 0, dec2.b.scaled(-1.0));

    const CMatrix target =
        block2x2({CMatrix::zero(x1.rows(), x1.cols()), x1 + x2, x1 - x2,
                  CMatrix::zero(x1.rows(), x1.cols())});
    const CMatrix rebuilt = scalar_embed(a_big, d) * y_big * scalar_embed(b_big, d);
    if (max_abs_diff(rebuilt, target) > kDecompTol * (1.0 + target.max_abs()))
        throw std::logic_error("sumdiff_wmax_upper: 4-block factorization failed to reconstruct");

    const CMatrix gram = dec1.a * dec1.a.adjoint() + dec2.a * dec2.a.adjoint() +
                         dec1.b.adjoint() * dec1.b + dec2.b.adjoint() * dec2.b;
    const double value = 0.5 * spectral_norm(gram);

    const double u1 = half_norm_gram(dec1.a, dec1.b);
    const double u2 = half_norm_gram(dec2.a, dec2.b);
    if (value > u1 + u2 + kDecompTol)
        throw std::logic_error("sumdiff_wmax_upper: bound chain violated");

    return value;
}

} // namespace opradius
