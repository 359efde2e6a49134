#pragma once

#include "modfun/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace modfun {

using Vector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
public:
    SingularMatrix(std::size_t n, std::size_t rank);
    [[nodiscard]] std::size_t rank() const { return rank_; }

private:
    std::size_t rank_;
};

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] Matrix transpose() const;
    [[nodiscard]] Vector row(std::size_t r) const;
    [[nodiscard]] Vector col(std::size_t c) const;
    [[nodiscard]] bool is_zero() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

[[nodiscard]] Matrix mat_mul(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator*(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator+(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator-(const Matrix& a, const Matrix& b);
[[nodiscard]] Matrix operator*(const Rational& s, const Matrix& m);
[[nodiscard]] Vector operator*(const Matrix& m, const Vector& v);
[[nodiscard]] Matrix kronecker(const Matrix& a, const Matrix& b);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row. Pivoting takes the first nonzero entry in each column.
[[nodiscard]] Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);
[[nodiscard]] std::size_t rank(const Matrix& m);
/// Throws DimensionMismatch if not square, SingularMatrix if rank deficient.
[[nodiscard]] Matrix invert(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column, in column order.
[[nodiscard]] std::vector<Vector> nullspace(const Matrix& m);
/// Solves m x = b exactly. Returns false when inconsistent; picks free
/// variables = 0 otherwise.
bool solve(const Matrix& m, const Vector& b, Vector& x);

[[nodiscard]] std::string to_string(const Matrix& m);

}  // namespace modfun
