#include "evolalg/linalg/matrix.hpp"

#include <sstream>
#include <utility>

#include "evolalg/error.hpp"

namespace evolalg::linalg {

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(const Field& field, std::size_t n, std::size_t i) {
    if (i >= n) throw IndexError("unit vector index " + std::to_string(i) + " out of range");
    Vector v = zero_vector(field, n);
    v[i] = Scalar::one(field);
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    for (const auto& s : v) {
        if (!s.is_zero()) return false;
    }
    return true;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) throw DimensionError("vector lengths differ");
    Vector out(a.begin(), a.end());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vector scale(const Scalar& c, std::span<const Scalar> v) {
    Vector out(v.begin(), v.end());
    for (auto& s : out) s *= c;
    return out;
}

Vector make_vector(const Field& field, std::initializer_list<long> values) {
    Vector v;
    v.reserve(values.size());
    for (long x : values) v.push_back(Scalar::from_integer(field, x));
    return v;
}

Matrix::Matrix(const Field& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(const Field& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const Field& field, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw DimensionError("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                                 ", expected " + std::to_string(cols));
        }
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c].field() != field) throw FieldError("entry belongs to a different field");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::from_integers(const Field& field, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<Vector> vs;
    for (const auto& r : rows) vs.push_back(make_vector(field, r));
    const std::size_t cols = vs.empty() ? 0 : vs.front().size();
    return from_rows(field, cols, vs);
}

Vector Matrix::column(std::size_t c) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("matrix product shape mismatch");
    Matrix out(field_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
        }
    }
    return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector shape mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) out[r] += (*this)(r, c) * v[c];
    }
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return field_ == other.field_ && rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
        }
        const Scalar inv = a(row, col).inverse();
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Scalar factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix reduced(m.field(), row, m.cols());
    for (std::size_t r = 0; r < row; ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = a(r, c);
    }
    return RrefResult{row, std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Scalar det(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Scalar result = Scalar::one(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar::zero(m.field());
        if (pivot != col) {
            for (std::size_t c = col; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            result = -result;
        }
        result *= a(col, col);
        const Scalar inv = a(col, col).inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            const Scalar factor = a(r, col) * inv;
            for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
        }
    }
    return result;
}

Matrix nullspace(const Matrix& m) {
    const RrefResult red = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : red.pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = unit_vector(m.field(), m.cols(), free);
        for (std::size_t r = 0; r < red.rank; ++r) v[red.pivots[r]] = -red.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return Matrix::from_rows(m.field(), m.cols(), basis);
}

Matrix inverse(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar::one(m.field());
    }
    const RrefResult red = rref(aug);
    if (red.rank < n || red.pivots[n - 1] != n - 1) throw PreconditionError("matrix is singular");
    Matrix inv(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
    }
    return inv;
}

}  // namespace evolalg::linalg
