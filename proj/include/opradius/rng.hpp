#pragma once

#include <cstdint>
#include <vector>

#include "opradius/cmatrix.hpp"

namespace opradius {

/// Counter-based random generator keyed by (seed, stream). The k-th output is
/// a pure function of (seed, stream, k), so identical keys always reproduce
/// the same sequence and distinct streams are independent for Monte Carlo use.
/// Trial k of a campaign owns stream k.
class Rng {
  public:
    explicit Rng(std::uint64_t seed = 0, std::uint64_t stream = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Pair of independent standard normals (Box-Muller).
    void normal_pair(double& a, double& b);
    /// Standard complex Gaussian: real and imaginary parts each N(0, 1/2),
    /// so E|z|^2 = 1.
    Complex complex_gaussian();

  private:
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

/// d x d matrix of independent standard complex Gaussian entries.
CMatrix random_ginibre(int d, Rng& rng);

/// Haar-distributed d x d unitary: QR-factorize a Ginibre sample and push the
/// phases of R's diagonal onto Q.
CMatrix random_haar_unitary(int d, Rng& rng);

/// Haar-uniform unit vector in C^d (as a d x 1 matrix).
CMatrix random_unit_vector(int d, Rng& rng);

} // namespace opradius
