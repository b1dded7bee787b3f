#include "opradius/rng.hpp"

#include <cmath>

namespace opradius {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {
    key_ = mix64(seed + kGamma) ^ mix64(stream * 0xDA942042E4DD58B5ULL + 2 * kGamma);
}

std::uint64_t Rng::next_u64() { return mix64(key_ + (++counter_) * kGamma); }

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) {
    // Desk-scale ranges; modulo bias is negligible for n << 2^64.
    return n == 0 ? 0 : next_u64() % n;
}

void Rng::normal_pair(double& a, double& b) {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * 3.14159265358979323846 * u2;
    a = r * std::cos(phi);
    b = r * std::sin(phi);
}

Complex Rng::complex_gaussian() {
    double a = 0.0, b = 0.0;
    normal_pair(a, b);
    const double inv_sqrt2 = 0.7071067811865475244;
    return Complex(a * inv_sqrt2, b * inv_sqrt2);
}

CMatrix random_ginibre(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("random_ginibre: dimension must be positive");
    std::vector<Complex> e(static_cast<std::size_t>(d) * d);
    for (Complex& z : e) z = rng.complex_gaussian();
    return CMatrix(d, d, std::move(e));
}

CMatrix random_haar_unitary(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("random_haar_unitary: dimension must be positive");
    CMatrix g = random_ginibre(d, rng);

    // Modified Gram-Schmidt with one re-orthogonalization pass, column by
    // column. r_jj ends up real positive; the phase correction below is then
    // the identity but keeps the construction explicit.
    std::vector<std::vector<Complex>> q(d, std::vector<Complex>(d));
    for (int j = 0; j < d; ++j) {
        std::vector<Complex> v(d);
        for (int i = 0; i < d; ++i) v[i] = g.at(i, j);
        Complex rjj(0.0, 0.0);
        for (int attempt = 0;; ++attempt) {
            for (int pass = 0; pass < 2; ++pass) {
                for (int k = 0; k < j; ++k) {
                    Complex proj(0.0, 0.0);
                    for (int i = 0; i < d; ++i) proj += std::conj(q[k][i]) * v[i];
                    for (int i = 0; i < d; ++i) v[i] -= proj * q[k][i];
                }
            }
            double nrm = 0.0;
            for (int i = 0; i < d; ++i) nrm += std::norm(v[i]);
            nrm = std::sqrt(nrm);
            if (nrm > 1e-12) {
                rjj = Complex(nrm, 0.0);
                for (int i = 0; i < d; ++i) v[i] /= nrm;
                break;
            }
            // Degenerate sample (probability ~0): redraw the column.
            if (attempt > 8) throw std::runtime_error("random_haar_unitary: degenerate sample");
            for (int i = 0; i < d; ++i) v[i] = rng.complex_gaussian();
        }
        const Complex phase = std::conj(rjj) / std::abs(rjj);
        for (int i = 0; i < d; ++i) q[j][i] = v[i] * phase;
    }

    CMatrix u(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) u.at(i, j) = q[j][i];
    return u;
}

CMatrix random_unit_vector(int d, Rng& rng) {
    if (d < 1) throw std::invalid_argument("random_unit_vector: dimension must be positive");
    std::vector<Complex> v(d);
    double nrm = 0.0;
    do {
        nrm = 0.0;
        for (Complex& z : v) {
            z = rng.complex_gaussian();
            nrm += std::norm(z);
        }
        nrm = std::sqrt(nrm);
    } while (nrm <= 1e-12);
    for (Complex& z : v) z /= nrm;
    return CMatrix(d, 1, std::move(v));
}

} // namespace opradius
