#include "opradius/radius.hpp"

#include <algorithm>
#include <cmath>

#include "opradius/eigen.hpp"

namespace opradius {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr int kInitialGrid = 64;
constexpr double kEvalTol = 1e-13;

struct Cell {
    double center;
    double half;
    double value; // computed support value at center
};

// Evaluates f(theta) for one matrix reusing the real embeddings of
// H0 = (A + A*)/2 and K0 = (A - A*)/(2i), so the hot loop is a real saxpy
// fill followed by a values-only Jacobi solve: H(theta) = cos*H0 - sin*K0.
class SupportEvaluator {
  public:
    explicit SupportEvaluator(const CMatrix& a) : d_(a.rows()), n_(2 * a.rows()) {
        const CMatrix h0 = (a + a.adjoint()).scaled(0.5);
        const CMatrix k0 = (a - a.adjoint()).scaled(Complex(0.0, -0.5));
        eh0_.resize(static_cast<std::size_t>(n_) * n_);
        ek0_.resize(eh0_.size());
        fill_embed(h0, eh0_);
        fill_embed(k0, ek0_);
        buf_.resize(eh0_.size());
        const double fro = a.frobenius();
        off_target_ = kEvalTol * (1.0 + fro);
        // Off-diagonal stopping mass plus an allowance for rotation rounding.
        pad_ = off_target_ + 16.0 * n_ * 2.2e-16 * (1.0 + fro);
    }

    double off_target() const { return off_target_; }
    /// Certified bound on |computed - true| per evaluation.
    double pad() const { return pad_; }

    double eval(double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        if (d_ == 1) {
            // 1x1 case: H(theta) is the real scalar c*h - s*k.
            detail::tally_external_solve();
            return c * eh0_[0] - s * ek0_[0];
        }
        for (std::size_t i = 0; i < buf_.size(); ++i) buf_[i] = c * eh0_[i] - s * ek0_[i];
        return detail::jacobi_lambda_max_inplace(buf_, n_, off_target_);
    }

  private:
    void fill_embed(const CMatrix& h, std::vector<double>& out) {
        for (int i = 0; i < d_; ++i)
            for (int j = 0; j < d_; ++j) {
                const double re = h.at(i, j).real();
                const double im = h.at(i, j).imag();
                out[static_cast<std::size_t>(i) * n_ + j] = re;
                out[static_cast<std::size_t>(i) * n_ + (d_ + j)] = -im;
                out[static_cast<std::size_t>(d_ + i) * n_ + j] = im;
                out[static_cast<std::size_t>(d_ + i) * n_ + (d_ + j)] = re;
            }
    }

    int d_;
    int n_;
    std::vector<double> eh0_, ek0_, buf_;
    double off_target_ = 0.0;
    double pad_ = 0.0;
};

double cell_upper_bound(const Cell& c, double lip, double pad) {
    const double v = c.value + pad;
    double ub = v + lip * c.half;
    if (c.half < 1.5) ub = std::min(ub, v / std::cos(c.half));
    return ub;
}

// Error-free transforms for the compensated matrix square.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    void add_product(double x, double y) {
        const double p = x * y;
        const double e = std::fma(x, y, -p);
        const double s = hi + p;
        const double bv = s - hi;
        const double err = (hi - (s - bv)) + (p - bv);
        hi = s;
        lo += err + e;
    }
    double value() const { return hi + lo; }
};

// A*A with double-double accumulation: products that cancel exactly in real
// arithmetic (block structures like [[x, x], [-x, -x]]) come out as true
// zeros instead of rounding noise, which the w <= (||A|| + ||A^2||^(1/2))/2
// bound then turns into a tight certificate.
CMatrix compensated_square(const CMatrix& a) {
    const int n = a.rows();
    CMatrix out(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            DD re, im;
            for (int k = 0; k < n; ++k) {
                const Complex& x = a.at(i, k);
                const Complex& y = a.at(k, j);
                re.add_product(x.real(), y.real());
                re.add_product(-x.imag(), y.imag());
                im.add_product(x.real(), y.imag());
                im.add_product(x.imag(), y.real());
            }
            out.at(i, j) = Complex(re.value(), im.value());
        }
    }
    return out;
}

// Classical numerical radius bound w(A) <= (||A|| + ||A^2||^(1/2)) / 2,
// tight for Hermitian and for square-zero matrices. The square's residual
// accumulation error enters under the square root.
double half_norm_plus_sqrt_bound(const CMatrix& a) {
    const double na = detail::spectral_norm_upper(a);
    const double fro = a.frobenius();
    const double comp_err = 1e-26 * (1.0 + fro * fro) * a.rows();
    const double n2 = detail::spectral_norm_upper(compensated_square(a));
    return 0.5 * (na + std::sqrt(n2 + comp_err));
}

} // namespace

double support_function(const CMatrix& a, double theta) {
    if (!a.is_square()) throw std::invalid_argument("support_function: matrix must be square");
    const Complex phase(std::cos(theta), std::sin(theta));
    CMatrix h = (a.scaled(phase) + a.adjoint().scaled(std::conj(phase))).scaled(0.5);
    h = (h + h.adjoint()).scaled(0.5);
    return lambda_max(h);
}

Bracket numerical_radius(const CMatrix& a, double eps, long max_evals) {
    if (!a.is_square()) throw std::invalid_argument("numerical_radius: matrix must be square");
    if (!(eps > 0.0)) throw std::invalid_argument("numerical_radius: eps must be positive");

    if (a.is_zero()) return Bracket{0.0, 0.0, BracketMethod::exact_rule, 0, true};

    SupportEvaluator f(a);
    const double lip = a.frobenius();
    const double pad = f.pad();

    std::vector<Cell> active;
    active.reserve(kInitialGrid);
    long evals = 0;
    double lo = -HUGE_VAL;
    const double h0 = 3.14159265358979323846 / kInitialGrid;
    for (int i = 0; i < kInitialGrid; ++i) {
        const double theta = kTwoPi * (i + 0.5) / kInitialGrid;
        const double v = f.eval(theta);
        ++evals;
        lo = std::max(lo, v - pad);
        active.push_back(Cell{theta, h0, v});
    }

    double settled_ub = -HUGE_VAL;
    double hi = half_norm_plus_sqrt_bound(a);
    evals += 2;
    std::vector<Cell> splitting;
    while (true) {
        // Classify cells: beyond-improvement cells keep a frozen contribution
        // to hi, cells at or below lo are irrelevant, the rest split.
        double active_ub = -HUGE_VAL;
        splitting.clear();
        for (const Cell& c : active) {
            const double ub = cell_upper_bound(c, lip, pad);
            if (ub <= lo) continue;
            if (ub <= lo + eps) {
                settled_ub = std::max(settled_ub, ub);
                continue;
            }
            active_ub = std::max(active_ub, ub);
            splitting.push_back(c);
        }
        const double cover = std::max(lo, std::max(settled_ub, active_ub));
        hi = std::min(hi, cover);
        hi = std::max(hi, lo);

        if (splitting.empty() || hi - lo <= eps)
            return Bracket{lo, hi, BracketMethod::certified_scan, evals, true};
        if (evals + 2 * static_cast<long>(splitting.size()) > max_evals)
            return Bracket{lo, hi, BracketMethod::generic, evals, false};

        active.clear();
        for (const Cell& c : splitting) {
            const double h = 0.5 * c.half;
            for (const double center : {c.center - h, c.center + h}) {
                const double v = f.eval(center);
                ++evals;
                lo = std::max(lo, v - pad);
                active.push_back(Cell{center, h, v});
            }
        }
    }
}

double rayleigh_lower_bound(const CMatrix& a, long samples, Rng& rng) {
    if (!a.is_square()) throw std::invalid_argument("rayleigh_lower_bound: matrix must be square");
    if (samples < 1) throw std::invalid_argument("rayleigh_lower_bound: need at least one sample");
    const int d = a.rows();
    double best = 0.0;
    std::vector<Complex> v(d), av(d);
    for (long s = 0; s < samples; ++s) {
        double nrm = 0.0;
        do {
            nrm = 0.0;
            for (Complex& z : v) {
                z = rng.complex_gaussian();
                nrm += std::norm(z);
            }
        } while (nrm <= 1e-24);
        Complex quad(0.0, 0.0);
        for (int i = 0; i < d; ++i) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < d; ++j) acc += a.at(i, j) * v[j];
            quad += std::conj(v[i]) * acc;
        }
        best = std::max(best, std::abs(quad) / nrm);
    }
    return best;
}

} // namespace opradius
