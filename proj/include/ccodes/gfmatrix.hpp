#pragma once

#include <cstdint>
#include <vector>

#include "ccodes/gf.hpp"

namespace ccodes {

// Dense row-major matrix over a fixed field.
class GfMatrix {
public:
    GfMatrix() = default;
    GfMatrix(const FieldSpec& F, int rows, int cols)
        : field_(F), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    const FieldSpec& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Fel& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    Fel at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    std::vector<Fel> row(int r) const;
    std::vector<Fel> col(int c) const;

    // Submatrix of the given rows and columns, in the given order.
    GfMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

    GfMatrix transposed() const;
    bool operator==(const GfMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    FieldSpec field_;
    int rows_ = 0, cols_ = 0;
    std::vector<Fel> a_;
};

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b);

// Rank by Gaussian elimination on a working copy.
int rank(const GfMatrix& m);

// Determinant of a square matrix by Gaussian elimination.
Fel det(const GfMatrix& m);

// Maintains the rank of a growing list of column vectors with cheap exact
// rollback.  push updates a reduced basis; pop truncates the internal arrays,
// restoring the previous state bit for bit (the elimination is append-only:
// accepted columns are never modified afterwards).
class IncrementalEliminator {
public:
    IncrementalEliminator(const FieldSpec& F, int dim) : field_(F), dim_(dim) {}

    // Reduces v against the accepted basis.  If the residual is nonzero the
    // column is accepted (rank grows by one) and true is returned; otherwise
    // the state is unchanged and false is returned.
    bool push(const std::vector<Fel>& v);
    // Removes the most recently accepted column.
    void pop();

    int size() const { return static_cast<int>(pivot_rows_.size()); }
    int dim() const { return dim_; }

private:
    FieldSpec field_;
    int dim_;
    std::vector<std::vector<Fel>> basis_;  // reduced columns, unit pivot each
    std::vector<int> pivot_rows_;          // pivot row of basis_[i]
};

}  // namespace ccodes
