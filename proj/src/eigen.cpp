#include "opradius/eigen.hpp"

#include <algorithm>
#include <cmath>

namespace opradius {

namespace {

thread_local long g_eigensolves = 0;

constexpr int kMaxSweeps = 50;

double offdiag_mass_sq(const std::vector<double>& m, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = m[static_cast<std::size_t>(i) * n + j];
            s += 2.0 * v * v;
        }
    return s;
}

// Real symmetric embedding [[S, -K], [K, S]] of H = S + iK.
std::vector<double> embed_real(const CMatrix& h) {
    const int d = h.rows();
    const int n = 2 * d;
    std::vector<double> m(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const double re = h.at(i, j).real();
            const double im = h.at(i, j).imag();
            m[static_cast<std::size_t>(i) * n + j] = re;
            m[static_cast<std::size_t>(i) * n + (d + j)] = -im;
            m[static_cast<std::size_t>(d + i) * n + j] = im;
            m[static_cast<std::size_t>(d + i) * n + (d + j)] = re;
        }
    }
    return m;
}

// Sort descending and collapse the doubled spectrum by pairwise averaging.
std::vector<double> collapse_pairs(std::vector<double> vals) {
    std::sort(vals.begin(), vals.end(), std::greater<double>());
    std::vector<double> out(vals.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = 0.5 * (vals[2 * i] + vals[2 * i + 1]);
    return out;
}

void check_input(const CMatrix& h, double tol) {
    if (!h.is_square()) throw std::invalid_argument("hermitian_eigenvalues: matrix must be square");
    if (!(tol > 0.0)) throw std::invalid_argument("hermitian_eigenvalues: tol must be positive");
    if (hermitian_defect(h) > 1e-12)
        throw std::invalid_argument("hermitian_eigenvalues: input is not Hermitian to 1e-12");
}

} // namespace

namespace detail {

bool jacobi_cycle(std::vector<double>& m, int n, double off_target, int max_sweeps,
                  std::vector<double>* vecs, int* sweeps_used) {
    ++g_eigensolves;
    const double target_sq = off_target * off_target;
    // Rotations below this threshold contribute negligibly to the off mass.
    const double skip = off_target / (16.0 * n);
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (offdiag_mass_sq(m, n) <= target_sq) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m[static_cast<std::size_t>(p) * n + q];
                if (std::abs(apq) <= skip) continue;
                const double app = m[static_cast<std::size_t>(p) * n + p];
                const double aqq = m[static_cast<std::size_t>(q) * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                double t;
                if (std::abs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                m[static_cast<std::size_t>(p) * n + p] = app - t * apq;
                m[static_cast<std::size_t>(q) * n + q] = aqq + t * apq;
                m[static_cast<std::size_t>(p) * n + q] = 0.0;
                m[static_cast<std::size_t>(q) * n + p] = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double& aip = m[static_cast<std::size_t>(i) * n + p];
                    double& aiq = m[static_cast<std::size_t>(i) * n + q];
                    const double vip = aip;
                    const double viq = aiq;
                    aip = vip - s * (viq + tau * vip);
                    aiq = viq + s * (vip - tau * viq);
                    m[static_cast<std::size_t>(p) * n + i] = aip;
                    m[static_cast<std::size_t>(q) * n + i] = aiq;
                }
                if (vecs) {
                    std::vector<double>& v = *vecs;
                    for (int i = 0; i < n; ++i) {
                        double& vip = v[static_cast<std::size_t>(i) * n + p];
                        double& viq = v[static_cast<std::size_t>(i) * n + q];
                        const double a = vip;
                        const double b = viq;
                        vip = a - s * (b + tau * a);
                        viq = b + s * (a - tau * b);
                    }
                }
            }
        }
    }
    if (sweeps_used) *sweeps_used = sweep;
    return offdiag_mass_sq(m, n) <= target_sq;
}

double jacobi_lambda_max_inplace(std::vector<double>& m, int n, double off_target) {
    if (!jacobi_cycle(m, n, off_target, kMaxSweeps, nullptr, nullptr))
        throw SolverError("jacobi: no convergence within sweep cap");
    double best = m[0];
    for (int i = 1; i < n; ++i) best = std::max(best, m[static_cast<std::size_t>(i) * n + i]);
    return best;
}

void tally_external_solve() { ++g_eigensolves; }

double spectral_norm_upper(const CMatrix& a) {
    CMatrix b = a.adjoint() * a;
    b = (b + b.adjoint()).scaled(0.5);
    const int d = b.rows();
    const double fro = b.frobenius();
    if (d == 1) {
        ++g_eigensolves;
        // Dot-product rounding of the single Gram entry.
        return std::sqrt(std::max(0.0, b.at(0, 0).real()) * (1.0 + 1e-13));
    }
    const int n = 2 * d;
    std::vector<double> m = embed_real(b);
    if (!jacobi_cycle(m, n, 1e-13 * (1.0 + fro), kMaxSweeps, nullptr, nullptr))
        throw SolverError("spectral_norm_upper: no convergence within sweep cap");
    double diag_max = m[0];
    for (int i = 1; i < n; ++i) diag_max = std::max(diag_max, m[static_cast<std::size_t>(i) * n + i]);
    const double off = std::sqrt(offdiag_mass_sq(m, n));
    // Backward-error slack for the accumulated rotations.
    const double slack = 100.0 * n * 2.2e-16 * fro;
    return std::sqrt(std::max(0.0, diag_max + off + slack));
}

std::vector<double> hermitian_eigenvalues_values(const CMatrix& h, double tol) {
    check_input(h, tol);
    const int d = h.rows();
    if (d == 1) {
        ++g_eigensolves;
        return {h.at(0, 0).real()};
    }
    const double off_target = tol * (1.0 + h.frobenius());
    std::vector<double> m = embed_real(h);
    if (!jacobi_cycle(m, 2 * d, off_target, kMaxSweeps, nullptr, nullptr))
        throw SolverError("hermitian_eigenvalues: no convergence within sweep cap");
    std::vector<double> diag(2 * d);
    for (int i = 0; i < 2 * d; ++i) diag[i] = m[static_cast<std::size_t>(i) * 2 * d + i];
    return collapse_pairs(std::move(diag));
}

} // namespace detail

EigenResult hermitian_eigenvalues(const CMatrix& h, double tol) {
    check_input(h, tol);
    const int d = h.rows();
    const double fro = h.frobenius();
    const double off_target = tol * (1.0 + fro);

    if (d == 1) {
        ++g_eigensolves;
        EigenResult r;
        r.eigenvalues = {h.at(0, 0).real()};
        r.residual = 0.0;
        r.tolerance = off_target;
        return r;
    }

    const int n = 2 * d;
    const std::vector<double> m0 = embed_real(h);
    std::vector<double> m = m0;
    std::vector<double> vecs(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) vecs[static_cast<std::size_t>(i) * n + i] = 1.0;

    EigenResult r;
    if (!detail::jacobi_cycle(m, n, off_target, kMaxSweeps, &vecs, &r.sweeps))
        throw SolverError("hermitian_eigenvalues: no convergence within sweep cap");

    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = m[static_cast<std::size_t>(i) * n + i];

    // Residual against the original embedding, over every computed pair.
    double res = 0.0;
    for (int j = 0; j < n; ++j) {
        const double lam = diag[j];
        for (int i = 0; i < n; ++i) {
            double acc = 0.0;
            for (int k = 0; k < n; ++k)
                acc += m0[static_cast<std::size_t>(i) * n + k] * vecs[static_cast<std::size_t>(k) * n + j];
            acc -= lam * vecs[static_cast<std::size_t>(i) * n + j];
            res = std::max(res, std::abs(acc));
        }
    }

    r.eigenvalues = collapse_pairs(std::move(diag));
    r.residual = res;
    r.tolerance = off_target + 64.0 * n * 2.2e-16 * (1.0 + fro);
    return r;
}

double lambda_max(const CMatrix& h) {
    return detail::hermitian_eigenvalues_values(h, 1e-12).front();
}

double spectral_norm(const CMatrix& a) {
    CMatrix b = a.adjoint() * a;
    // b is Hermitian up to rounding; symmetrize before the solve.
    b = (b + b.adjoint()).scaled(0.5);
    const double top = detail::hermitian_eigenvalues_values(b, 1e-12).front();
    return std::sqrt(std::max(0.0, top));
}

long eigensolve_count() { return g_eigensolves; }

} // namespace opradius
