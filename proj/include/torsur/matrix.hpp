#pragma once

#include <torsur/integers.hpp>

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace torsur {

using IntVec = std::vector<Int>;

// Dense integer matrix, row-major, exact entries.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<Int>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntVec row(std::size_t r) const;
    void append_row(const IntVec& v);

    IntMatrix transposed() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    // Exact determinant (fraction-free Bareiss elimination). Square only.
    Int det() const;

    // Rank over the rationals.
    std::size_t rank() const;

    // -- elementary row/column operations (used by normal-form routines) --
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& c);  // row dst += c*row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& c);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);

private:
    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

Int dot(const IntVec& a, const IntVec& b);
IntVec scaled(const IntVec& v, const Int& c);
IntVec add(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);

// Determinant of the 3x3 matrix with the given rows.
Int det3(const IntVec& r0, const IntVec& r1, const IntVec& r2);

}  // namespace torsur
