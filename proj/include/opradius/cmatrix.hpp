#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace opradius {

using Complex = std::complex<double>;

/// Dense complex matrix with value semantics. Entries are stored row-major;
/// every operation returns a fresh matrix. Construction rejects non-finite
/// entries, so a CMatrix always holds finite data.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(int rows, int cols);
    CMatrix(int rows, int cols, std::vector<Complex> entries);
    CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }
    static CMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;

    const Complex& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    Complex& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
    const std::vector<Complex>& entries() const { return entries_; }

    CMatrix adjoint() const;
    CMatrix operator+(const CMatrix& other) const;
    CMatrix operator-(const CMatrix& other) const;
    CMatrix operator*(const CMatrix& other) const;
    CMatrix operator-() const;
    CMatrix scaled(Complex lambda) const;

    /// Largest entry modulus.
    double max_abs() const;
    /// Frobenius norm.
    double frobenius() const;

    bool same_shape(const CMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

  private:
    void check_finite() const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> entries_;
};

/// The four equal-sized square blocks of a 2x2 block matrix [[x, y], [z, w]].
struct BlockSpec2x2 {
    CMatrix x, y, z, w;
};

/// Assembles the 2d x 2d matrix [[x, y], [z, w]]; pure placement, no arithmetic.
CMatrix block2x2(const BlockSpec2x2& spec);

/// Extracts the four d x d blocks of a 2d x 2d matrix.
BlockSpec2x2 split2x2(const CMatrix& m);

/// Embeds an n x m scalar matrix alpha as alpha (x) I_d, the (nd) x (md) matrix
/// whose (i, j) block is alpha_ij * I_d. This is how scalar matrices act on
/// matrix levels over X = M_d.
CMatrix scalar_embed(const CMatrix& alpha, int d);

/// Block-diagonal direct sum [[x, 0], [0, y]]; the blocks need not be square.
CMatrix direct_sum(const CMatrix& x, const CMatrix& y);

/// Largest entry modulus of a - b (shapes must match).
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// Deviation from Hermitian symmetry, max-entry norm of m - m*.
double hermitian_defect(const CMatrix& m);

/// FNV-1a digest over dimensions and raw entry bytes; used to fingerprint
/// check inputs in reports.
std::uint64_t digest(const CMatrix& m, std::uint64_t h = 1469598103934665603ULL);
std::uint64_t digest_scalar(double v, std::uint64_t h);

} // namespace opradius
