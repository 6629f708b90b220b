#pragma once

// Incremental row echelon form over a cyclotomic field.
//
// Rows are kept in reduced form: pivot entry 1 and zeros in the pivot
// columns of all other rows. The pivot is the first nonzero column unless
// the caller prefers another one. Every stored row remembers, optionally, how it was obtained
// as a combination of the independent inputs accepted so far, which lets
// callers express a dependent vector in terms of earlier ones.

#include "nichols/cyclotomic.hpp"

#include <utility>
#include <vector>

namespace nichols {

using SparseVec = std::vector<std::pair<int, CycNum>>;

class Echelon {
public:
    Echelon(int ncols, int order, bool track = false);

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    /// True when x is in the row span.
    bool in_span(const SparseVec& x) const;
    /// Inserts x if independent; returns the label (0-based insertion count) or -1.
    /// When dependent and tracking is on, *combo receives coefficients c with
    /// x = sum_l c[l] * input_l over the accepted inputs.
    /// A nonnegative preferred column becomes the pivot whenever the reduced x is nonzero there.
    int insert(const SparseVec& x, SparseVec* combo = nullptr, int preferred = -1);
    /// Residual of x after reduction (empty iff x is in the span).
    SparseVec residual(const SparseVec& x) const;
    /// Pivot column of each row, by label.
    std::vector<int> pivots() const;

private:
    struct Row {
        int pivot;
        SparseVec v;
        std::vector<CycNum> t;  // combination of accepted inputs, dense over labels
    };
    std::vector<CycNum> dense(const SparseVec& x) const;
    void reduce(std::vector<CycNum>& x, std::vector<CycNum>* coeffs) const;

    int ncols_;
    int order_;
    bool track_;
    std::vector<Row> rows_;
    std::vector<int> pivot_row_;
};

SparseVec to_sparse(const std::vector<CycNum>& d);
/// Rank of a dense matrix given by rows.
int matrix_rank(const std::vector<std::vector<CycNum>>& rows, int order);

}  // namespace nichols
