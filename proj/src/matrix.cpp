#include <torsur/matrix.hpp>

#include <algorithm>

namespace torsur {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error(ErrorKind::dimension, "ragged initializer for IntMatrix");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw Error(ErrorKind::dimension, "row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(std::size_t r) const {
    return IntVec(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

void IntMatrix::append_row(const IntVec& v) {
    if (v.size() != cols_)
        throw Error(ErrorKind::dimension, "appended row has wrong length");
    entries_.insert(entries_.end(), v.begin(), v.end());
    ++rows_;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw Error(ErrorKind::dimension, "matrix product dimension mismatch");
    IntMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += a * other.at(k, j);
        }
    return out;
}

Int IntMatrix::det() const {
    if (rows_ != cols_)
        throw Error(ErrorKind::dimension, "determinant of non-square matrix");
    if (rows_ == 0) return 1;
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    const std::size_t n = rows_;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = num / prev;  // Bareiss: division is exact
            }
        prev = a.at(k, k);
    }
    return sign > 0 ? a.at(n - 1, n - 1) : Int(-a.at(n - 1, n - 1));
}

std::size_t IntMatrix::rank() const {
    IntMatrix a = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t piv = r;
        while (piv < rows_ && a.at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        a.swap_rows(r, piv);
        // integer row reduction: clear the column below the pivot
        for (std::size_t i = r + 1; i < rows_; ++i) {
            while (a.at(i, c) != 0) {
                if (abs_int(a.at(i, c)) < abs_int(a.at(r, c))) {
                    a.swap_rows(i, r);
                    continue;
                }
                Int q = a.at(i, c) / a.at(r, c);
                a.add_row_multiple(i, r, -q);
            }
        }
        ++r;
    }
    return r;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, dst) += c * at(r, src);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::dimension, "dot product length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IntVec scaled(const IntVec& v, const Int& c) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

IntVec add(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::dimension, "vector sum length mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int det3(const IntVec& r0, const IntVec& r1, const IntVec& r2) {
    if (r0.size() != 3 || r1.size() != 3 || r2.size() != 3)
        throw Error(ErrorKind::dimension, "det3 expects length-3 vectors");
    return r0[0] * (r1[1] * r2[2] - r1[2] * r2[1])
         - r0[1] * (r1[0] * r2[2] - r1[2] * r2[0])
         + r0[2] * (r1[0] * r2[1] - r1[1] * r2[0]);
}

}  // namespace torsur
