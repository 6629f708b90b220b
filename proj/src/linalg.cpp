#include "nichols/linalg.hpp"

#include <algorithm>

namespace nichols {

Echelon::Echelon(int ncols, int order, bool track)
    : ncols_(ncols), order_(order), track_(track), pivot_row_(ncols, -1) {}

std::vector<CycNum> Echelon::dense(const SparseVec& x) const {
    std::vector<CycNum> d(ncols_, CycNum::zero(order_));
    for (const auto& [c, v] : x) d[c] += v;
    return d;
}

namespace {

// x + f * y for sparse vectors sorted by column
SparseVec axpy(const SparseVec& x, const CycNum& f, const SparseVec& y) {
    SparseVec out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
            out.emplace_back(y[j].first, f * y[j].second);
            ++j;
        } else {
            CycNum v = x[i].second;
            v.add_mul(f, y[j].second);
            if (!v.is_zero()) out.emplace_back(x[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseVec to_sparse(const std::vector<CycNum>& d) {
    SparseVec s;
    for (size_t c = 0; c < d.size(); ++c)
        if (!d[c].is_zero()) s.emplace_back(static_cast<int>(c), d[c]);
    return s;
}

void Echelon::reduce(std::vector<CycNum>& x, std::vector<CycNum>* coeffs) const {
    // rows are fully reduced, so each row is used with the original entry of x at its pivot
    std::vector<std::pair<int, CycNum>> use;
    for (int c = 0; c < ncols_; ++c)
        if (pivot_row_[c] >= 0 && !x[c].is_zero()) use.emplace_back(pivot_row_[c], x[c]);
    for (const auto& [r, f] : use) {
        const Row& row = rows_[r];
        CycNum neg = -f;
        for (const auto& [col, v] : row.v) x[col].add_mul(neg, v);
        if (coeffs)
            for (size_t l = 0; l < row.t.size(); ++l)
                if (!row.t[l].is_zero()) (*coeffs)[l].add_mul(f, row.t[l]);
    }
}

bool Echelon::in_span(const SparseVec& x) const { return residual(x).empty(); }

SparseVec Echelon::residual(const SparseVec& x) const {
    auto d = dense(x);
    reduce(d, nullptr);
    return to_sparse(d);
}

int Echelon::insert(const SparseVec& x, SparseVec* combo, int preferred) {
    auto d = dense(x);
    std::vector<CycNum> coeffs;
    if (track_) coeffs.assign(rows_.size(), CycNum::zero(order_));
    reduce(d, track_ ? &coeffs : nullptr);
    int pivot = -1;
    if (preferred >= 0 && !d[preferred].is_zero()) {
        pivot = preferred;
    } else {
        for (int c = 0; c < ncols_; ++c)
            if (!d[c].is_zero()) {
                pivot = c;
                break;
            }
    }
    if (pivot < 0) {
        if (combo) *combo = to_sparse(coeffs);
        return -1;
    }
    CycNum inv = d[pivot].inverse();
    Row row;
    row.pivot = pivot;
    for (int c = 0; c < ncols_; ++c)
        if (!d[c].is_zero()) row.v.emplace_back(c, d[c] * inv);
    int label = static_cast<int>(rows_.size());
    if (track_) {
        // x - sum coeffs * inputs = residual, so residual/pivot = (e_label - coeffs)/pivot
        row.t.assign(label + 1, CycNum::zero(order_));
        for (int l = 0; l < label; ++l) row.t[l] = -(coeffs[l] * inv);
        row.t[label] = inv;
    }
    // clear the new pivot column from the older rows
    for (auto& other : rows_) {
        auto it = std::lower_bound(other.v.begin(), other.v.end(), pivot,
                                   [](const std::pair<int, CycNum>& e, int c) { return e.first < c; });
        if (it == other.v.end() || it->first != pivot) continue;
        CycNum f = it->second;
        other.v = axpy(other.v, -f, row.v);
        if (track_) {
            other.t.resize(label + 1, CycNum::zero(order_));
            for (int l = 0; l <= label; ++l)
                if (!row.t[l].is_zero()) other.t[l].add_mul(-f, row.t[l]);
        }
    }
    pivot_row_[pivot] = label;
    rows_.push_back(std::move(row));
    return label;
}

std::vector<int> Echelon::pivots() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(r.pivot);
    return p;
}

int matrix_rank(const std::vector<std::vector<CycNum>>& rows, int order) {
    if (rows.empty()) return 0;
    Echelon e(static_cast<int>(rows[0].size()), order);
    for (const auto& r : rows) e.insert(to_sparse(r));
    return e.rank();
}

}  // namespace nichols
