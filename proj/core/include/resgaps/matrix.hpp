#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resgaps/rational.hpp"

namespace resgaps {

/// Dense row-major rational matrix. Used for the triangular factor of an
/// LDL^T decomposition and for general products in tests.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Matrix transpose() const;
    std::string str() const;

    friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
    friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Symmetric rational matrix; symmetry is checked at construction.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim);
    SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
    explicit SymMatrix(const Matrix& m);

    static SymMatrix identity(std::size_t n);
    static SymMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static SymMatrix block_diagonal(std::span<const SymMatrix> blocks);

    /// Parses "[[a,b],[c,d]]" with Rational entries. Throws ParseError.
    static SymMatrix parse(std::string_view text);

    std::size_t dim() const { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    /// Sets entries (i,j) and (j,i) together.
    void set(std::size_t i, std::size_t j, const Rational& value);

    SymMatrix scaled(const Rational& factor) const;
    Matrix as_matrix() const;

    bool is_integral() const;
    /// Integral with even diagonal.
    bool is_even() const;

    Rational max_diagonal() const;

    std::string str() const;

    friend bool operator==(const SymMatrix& lhs, const SymMatrix& rhs) = default;

private:
    std::size_t dim_ = 0;
    std::vector<Rational> data_;
};

struct Ldlt {
    Matrix lower;                    ///< unit lower triangular
    std::vector<Rational> diagonal;  ///< all entries > 0
};

/// m = L * diag(D) * L^T. Throws Error(NotPositiveDefinite) on the first
/// pivot <= 0.
Ldlt ldlt(const SymMatrix& m);

bool is_positive_definite(const SymMatrix& m);

Rational det(const Matrix& m);
Rational det(const SymMatrix& m);

/// Classical adjugate (transpose of the cofactor matrix); defined for
/// singular input too.
SymMatrix adjugate(const SymMatrix& m);

/// Throws Error(SingularMatrix) when det(m) = 0.
SymMatrix inverse(const SymMatrix& m);

/// x^T m x for an integer coordinate vector. Throws Error(DimensionMismatch).
Rational norm(const SymMatrix& m, std::span<const std::int64_t> x);

/// x^T m y.
Rational bilinear(const SymMatrix& m, std::span<const std::int64_t> x, std::span<const std::int64_t> y);

/// m x as a rational vector.
std::vector<Rational> apply(const SymMatrix& m, std::span<const std::int64_t> x);

}  // namespace resgaps
