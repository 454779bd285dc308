#include <cctype>
#include "resgaps/matrix.hpp"

#include <sstream>
#include <utility>

#include "resgaps/error.hpp"

namespace resgaps {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << (*this)(i, j);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
    if (lhs.cols_ != rhs.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix out(lhs.rows_, rhs.cols_);
    for (std::size_t i = 0; i < lhs.rows_; ++i)
        for (std::size_t k = 0; k < lhs.cols_; ++k) {
            const Rational& a = lhs(i, k);
            if (a.sign() == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : SymMatrix(Matrix(rows)) {}

SymMatrix::SymMatrix(const Matrix& m) : dim_(m.rows()), data_(m.rows() * m.rows()) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "symmetric matrix must be square");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (m(i, j) != m(j, i)) throw Error(ErrorCode::DimensionMismatch, "matrix is not symmetric: " + m.str());
            data_[i * dim_ + j] = m(i, j);
        }
}

SymMatrix SymMatrix::identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    Matrix m(rows.size(), rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw Error(ErrorCode::DimensionMismatch, "matrix must be square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return SymMatrix(m);
}

SymMatrix SymMatrix::block_diagonal(std::span<const SymMatrix> blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.dim();
    SymMatrix out(n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j) out.data_[(offset + i) * n + offset + j] = b(i, j);
        offset += b.dim();
    }
    return out;
}

SymMatrix SymMatrix::parse(std::string_view raw) {
    std::string compact;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
    const std::string_view text = compact;
    std::vector<std::vector<Rational>> rows;
    std::size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c) {
            throw ParseError(0, std::string("malformed matrix '") + std::string(text) + "': expected '" + c + "'");
        }
        ++pos;
    };
    expect('[');
    while (true) {
        expect('[');
        std::vector<Rational> row;
        while (true) {
            const std::size_t end = text.find_first_of(",]", pos);
            if (end == std::string_view::npos) throw ParseError(0, "unterminated matrix row");
            row.push_back(Rational::parse(text.substr(pos, end - pos)));
            pos = end;
            if (text[pos] == ']') break;
            ++pos;
        }
        expect(']');
        rows.push_back(std::move(row));
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    expect(']');
    if (pos != text.size()) throw ParseError(0, "trailing characters after matrix");
    try {
        return from_rows(rows);
    } catch (const Error& e) {
        throw ParseError(0, e.what());
    }
}

void SymMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
    data_[i * dim_ + j] = value;
    data_[j * dim_ + i] = value;
}

SymMatrix SymMatrix::scaled(const Rational& factor) const {
    SymMatrix out = *this;
    for (auto& v : out.data_) v *= factor;
    return out;
}

Matrix SymMatrix::as_matrix() const {
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

bool SymMatrix::is_integral() const {
    for (const auto& v : data_)
        if (!v.is_integer()) return false;
    return true;
}

bool SymMatrix::is_even() const {
    if (!is_integral()) return false;
    for (std::size_t i = 0; i < dim_; ++i)
        if ((*this)(i, i).numerator() % 2 != 0) return false;
    return true;
}

Rational SymMatrix::max_diagonal() const {
    Rational best;
    for (std::size_t i = 0; i < dim_; ++i)
        if (i == 0 || (*this)(i, i) > best) best = (*this)(i, i);
    return best;
}

std::string SymMatrix::str() const { return as_matrix().str(); }

Ldlt ldlt(const SymMatrix& m) {
    const std::size_t n = m.dim();
    Ldlt out{Matrix::identity(n), std::vector<Rational>(n)};
    for (std::size_t j = 0; j < n; ++j) {
        Rational pivot = m(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= out.lower(j, k) * out.lower(j, k) * out.diagonal[k];
        if (pivot.sign() <= 0) {
            throw Error(ErrorCode::NotPositiveDefinite,
                        "pivot " + std::to_string(j) + " is " + pivot.str() + " for " + m.str());
        }
        out.diagonal[j] = pivot;
        for (std::size_t i = j + 1; i < n; ++i) {
            Rational s = m(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= out.lower(i, k) * out.lower(j, k) * out.diagonal[k];
            out.lower(i, j) = s / pivot;
        }
    }
    return out;
}

bool is_positive_definite(const SymMatrix& m) {
    if (m.dim() == 0) return false;
    try {
        (void)ldlt(m);
        return true;
    } catch (const Error&) {
        return false;
    }
}

Rational det(const Matrix& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix a = m;
    Rational result = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).sign() == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            result = -result;
        }
        result *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col).sign() == 0) continue;
            const Rational factor = a(i, col) / a(col, col);
            for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
        }
    }
    return result;
}

Rational det(const SymMatrix& m) { return det(m.as_matrix()); }

SymMatrix adjugate(const SymMatrix& m) {
    const std::size_t n = m.dim();
    SymMatrix out(n);
    if (n == 1) {
        out.set(0, 0, 1);
        return out;
    }
    Matrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            // cofactor C_ji; symmetric input makes C_ij = C_ji
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(mr, mc++) = m(r, c);
                }
                ++mr;
            }
            Rational cofactor = det(minor);
            if ((i + j) % 2 == 1) cofactor = -cofactor;
            out.set(i, j, cofactor);
        }
    }
    return out;
}

SymMatrix inverse(const SymMatrix& m) {
    const Rational d = det(m);
    if (d.sign() == 0) throw Error(ErrorCode::SingularMatrix, "matrix is singular: " + m.str());
    return adjugate(m).scaled(Rational(1) / d);
}

namespace {

void check_dim(const SymMatrix& m, std::size_t n) {
    if (m.dim() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vector of length " + std::to_string(n) + " against matrix of dim " + std::to_string(m.dim()));
    }
}

}  // namespace

std::vector<Rational> apply(const SymMatrix& m, std::span<const std::int64_t> x) {
    check_dim(m, x.size());
    std::vector<Rational> out(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (x[j] != 0) out[i] += m(i, j) * Rational(static_cast<long>(x[j]));
    return out;
}

Rational bilinear(const SymMatrix& m, std::span<const std::int64_t> x, std::span<const std::int64_t> y) {
    check_dim(m, x.size());
    const auto my = apply(m, y);
    Rational s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s += Rational(static_cast<long>(x[i])) * my[i];
    return s;
}

Rational norm(const SymMatrix& m, std::span<const std::int64_t> x) { return bilinear(m, x, x); }

}  // namespace resgaps
