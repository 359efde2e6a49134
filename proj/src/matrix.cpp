#include "modfun/matrix.hpp"

#include <sstream>
#include <utility>

namespace modfun {

namespace {

std::string dims(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_same_shape(const Matrix& a, const Matrix& b, const char* op)
{
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(op) + ": " + dims(a) + " vs " + dims(b));
}

}  // namespace

SingularMatrix::SingularMatrix(std::size_t n, std::size_t rank)
    : std::domain_error("singular " + std::to_string(n) + "x" + std::to_string(n) + " matrix (rank " +
                        std::to_string(rank) + ")"),
      rank_(rank)
{
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: " + dims(a) + " times " + dims(b));
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rational& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Matrix operator+(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b, "add");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    require_same_shape(a, b, "subtract");
    Matrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

Matrix operator*(const Rational& s, const Matrix& m)
{
    Matrix out = m;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
    return out;
}

Vector operator*(const Matrix& m, const Vector& v)
{
    if (m.cols() != v.size())
        throw DimensionMismatch("matrix-vector: " + dims(m) + " times length " + std::to_string(v.size()));
    Vector out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b)
{
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots)
{
    Matrix a = m;
    std::vector<std::size_t> piv;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < a.cols() && lead_row < a.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != lead_row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead_row, j));
        const Rational inv = Rational(1) / a(lead_row, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(lead_row, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead_row || a(r, c).is_zero()) continue;
            const Rational f = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(lead_row, j).is_zero()) a(r, j) -= f * a(lead_row, j);
        }
        piv.push_back(c);
        ++lead_row;
    }
    if (pivots) *pivots = std::move(piv);
    return a;
}

std::size_t rank(const Matrix& m)
{
    std::vector<std::size_t> piv;
    (void)rref(m, &piv);
    return piv.size();
}

Matrix invert(const Matrix& m)
{
    if (!m.is_square()) throw DimensionMismatch("invert: matrix is " + dims(m));
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    std::size_t left_rank = 0;
    for (auto c : piv)
        if (c < n) ++left_rank;
    if (left_rank < n) throw SingularMatrix(n, left_rank);
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

std::vector<Vector> nullspace(const Matrix& m)
{
    std::vector<std::size_t> piv;
    Matrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool solve(const Matrix& m, const Vector& b, Vector& x)
{
    if (b.size() != m.rows())
        throw DimensionMismatch("solve: " + dims(m) + " with rhs length " + std::to_string(b.size()));
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    std::vector<std::size_t> piv;
    Matrix r = rref(aug, &piv);
    if (!piv.empty() && piv.back() == m.cols()) return false;
    x.assign(m.cols(), Rational{});
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, m.cols());
    return true;
}

std::string to_string(const Matrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace modfun
