#include "opradius/cmatrix.hpp"

#include <cmath>
#include <cstring>

namespace opradius {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

} // namespace

CMatrix::CMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    require(rows >= 1 && cols >= 1, "CMatrix: dimensions must be positive");
    entries_.assign(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0));
}

CMatrix::CMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(rows >= 1 && cols >= 1, "CMatrix: dimensions must be positive");
    require(entries_.size() == static_cast<std::size_t>(rows) * cols,
            "CMatrix: entry count does not match rows*cols");
    check_finite();
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = static_cast<int>(rows.size());
    require(rows_ >= 1, "CMatrix: empty initializer");
    cols_ = static_cast<int>(rows.begin()->size());
    require(cols_ >= 1, "CMatrix: empty row");
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == cols_, "CMatrix: ragged initializer");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    check_finite();
}

void CMatrix::check_finite() const {
    for (const Complex& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw std::invalid_argument("CMatrix: non-finite entry");
    }
}

CMatrix CMatrix::identity(int n) {
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

bool CMatrix::is_zero() const {
    for (const Complex& z : entries_)
        if (z != Complex(0.0, 0.0)) return false;
    return true;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

CMatrix CMatrix::operator+(const CMatrix& other) const {
    require(same_shape(other), "CMatrix: shape mismatch in add");
    CMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] += other.entries_[k];
    return out;
}

CMatrix CMatrix::operator-(const CMatrix& other) const {
    require(same_shape(other), "CMatrix: shape mismatch in sub");
    CMatrix out = *this;
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] -= other.entries_[k];
    return out;
}

CMatrix CMatrix::operator-() const { return scaled(Complex(-1.0, 0.0)); }

CMatrix CMatrix::scaled(Complex lambda) const {
    CMatrix out = *this;
    for (Complex& z : out.entries_) z *= lambda;
    out.check_finite();
    return out;
}

CMatrix CMatrix::operator*(const CMatrix& other) const {
    require(cols_ == other.rows_, "CMatrix: inner dimension mismatch in mul");
    CMatrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Complex aik = at(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            const Complex* brow = &other.entries_[static_cast<std::size_t>(k) * other.cols_];
            Complex* orow = &out.entries_[static_cast<std::size_t>(i) * other.cols_];
            for (int j = 0; j < other.cols_; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : entries_) m = std::max(m, std::abs(z));
    return m;
}

double CMatrix::frobenius() const {
    double s = 0.0;
    for (const Complex& z : entries_) s += std::norm(z);
    return std::sqrt(s);
}

CMatrix block2x2(const BlockSpec2x2& spec) {
    const int d = spec.x.rows();
    require(spec.x.is_square() && spec.y.is_square() && spec.z.is_square() && spec.w.is_square(),
            "block2x2: blocks must be square");
    require(spec.y.rows() == d && spec.z.rows() == d && spec.w.rows() == d,
            "block2x2: blocks must share one dimension");
    CMatrix out(2 * d, 2 * d);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            out.at(i, j) = spec.x.at(i, j);
            out.at(i, d + j) = spec.y.at(i, j);
            out.at(d + i, j) = spec.z.at(i, j);
            out.at(d + i, d + j) = spec.w.at(i, j);
        }
    }
    return out;
}

BlockSpec2x2 split2x2(const CMatrix& m) {
    require(m.is_square() && m.rows() % 2 == 0, "split2x2: matrix must be square of even size");
    const int d = m.rows() / 2;
    BlockSpec2x2 spec{CMatrix(d, d), CMatrix(d, d), CMatrix(d, d), CMatrix(d, d)};
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            spec.x.at(i, j) = m.at(i, j);
            spec.y.at(i, j) = m.at(i, d + j);
            spec.z.at(i, j) = m.at(d + i, j);
            spec.w.at(i, j) = m.at(d + i, d + j);
        }
    }
    return spec;
}

CMatrix scalar_embed(const CMatrix& alpha, int d) {
    require(d >= 1, "scalar_embed: block size must be positive");
    CMatrix out(alpha.rows() * d, alpha.cols() * d);
    for (int i = 0; i < alpha.rows(); ++i)
        for (int j = 0; j < alpha.cols(); ++j) {
            const Complex a = alpha.at(i, j);
            if (a == Complex(0.0, 0.0)) continue;
            for (int k = 0; k < d; ++k) out.at(i * d + k, j * d + k) = a;
        }
    return out;
}

CMatrix direct_sum(const CMatrix& x, const CMatrix& y) {
    CMatrix out(x.rows() + y.rows(), x.cols() + y.cols());
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j);
    for (int i = 0; i < y.rows(); ++i)
        for (int j = 0; j < y.cols(); ++j) out.at(x.rows() + i, x.cols() + j) = y.at(i, j);
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (!a.same_shape(b)) throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k)
        m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
    return m;
}

double hermitian_defect(const CMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("hermitian_defect: matrix must be square");
    double w = 0.0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = i; j < m.cols(); ++j)
            w = std::max(w, std::abs(m.at(i, j) - std::conj(m.at(j, i))));
    return w;
}

namespace {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t h) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace

std::uint64_t digest(const CMatrix& m, std::uint64_t h) {
    const std::int64_t dims[2] = {m.rows(), m.cols()};
    h = fnv1a(dims, sizeof(dims), h);
    return fnv1a(m.entries().data(), m.entries().size() * sizeof(Complex), h);
}

std::uint64_t digest_scalar(double v, std::uint64_t h) { return fnv1a(&v, sizeof(v), h); }

} // namespace opradius
