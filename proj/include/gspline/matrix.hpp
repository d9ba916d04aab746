#ifndef GSPLINE_MATRIX_HPP
#define GSPLINE_MATRIX_HPP

#include "gspline/arith.hpp"

#include <cstddef>
#include <vector>

namespace gspline {

/// Dense matrix of arbitrary-precision integers. Row-major storage.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    static IntMatrix identity(std::size_t n);
    /// Builds a matrix from a list of columns (all of equal length).
    static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c);
    const Int& at(std::size_t r, std::size_t c) const;

    std::vector<Int> column(std::size_t c) const;
    void append_column(const std::vector<Int>& col);

    void swap_columns(std::size_t a, std::size_t b);
    /// column[dst] += q * column[src]
    void add_column_multiple(std::size_t dst, std::size_t src, const Int& q);
    void negate_column(std::size_t c);

    bool operator==(const IntMatrix& other) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> data_;
};

/// Column-style Hermite normal form of the column lattice of A.
/// Returns only the basis columns: pivot rows strictly increase, pivots are
/// positive, and in each pivot row the entries of earlier columns are reduced
/// to [0, pivot). For a full-rank square lattice the result is lower
/// triangular with positive diagonal. Zero columns are dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

/// Basis of the integer kernel {x : A x = 0} as columns.
IntMatrix kernel_basis(const IntMatrix& a);

struct SmithDecomposition {
    std::vector<Int> d;  // invariant factors, d[0] | d[1] | ..., all positive
    IntMatrix u, v;      // unimodular, u * A * v = diag(d) (when tracked)
    bool has_transforms = false;
};

/// Smith normal form with unimodular transforms.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Invariant factors only (no transform tracking); suitable for wide matrices.
std::vector<Int> invariant_factors(const IntMatrix& a);

/// |det| of the (unimodular-candidate) square matrix, by fraction-free elimination.
Int determinant(const IntMatrix& a);

}  // namespace gspline

#endif
