#include "ccodes/gfmatrix.hpp"

#include <stdexcept>

namespace ccodes {

std::vector<Fel> GfMatrix::row(int r) const {
    std::vector<Fel> out(cols_);
    for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
    return out;
}

std::vector<Fel> GfMatrix::col(int c) const {
    std::vector<Fel> out(rows_);
    for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

GfMatrix GfMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    GfMatrix out(field_, static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out.at(int(i), int(j)) = at(rows[i], cols[j]);
    return out;
}

GfMatrix GfMatrix::transposed() const {
    GfMatrix out(field_, cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
    return out;
}

GfMatrix matmul(const GfMatrix& a, const GfMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: shape mismatch");
    const FieldSpec& F = a.field();
    GfMatrix out(F, a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int l = 0; l < a.cols(); ++l) {
            Fel v = a.at(i, l);
            if (!v) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) = F.add(out.at(i, j), F.mul(v, b.at(l, j)));
        }
    return out;
}

namespace {

// In-place forward elimination; returns rank.  If want_det is non-null the
// matrix must be square and the determinant is written there.
int eliminate(GfMatrix& m, Fel* want_det) {
    const FieldSpec& F = m.field();
    const int rows = m.rows(), cols = m.cols();
    Fel d = 1;
    int rank = 0;
    bool swapped_sign = false;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m.at(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != rank) {
            for (int j = c; j < cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
            swapped_sign = !swapped_sign;
        }
        Fel pv = m.at(rank, c);
        d = F.mul(d, pv);
        Fel pinv = F.inv(pv);
        for (int r = rank + 1; r < rows; ++r) {
            Fel f = m.at(r, c);
            if (!f) continue;
            Fel scale = F.mul(f, pinv);
            m.at(r, c) = 0;
            for (int j = c + 1; j < cols; ++j)
                m.at(r, j) = F.sub(m.at(r, j), F.mul(scale, m.at(rank, j)));
        }
        ++rank;
    }
    if (want_det) {
        if (rank < rows)
            *want_det = 0;
        else
            *want_det = swapped_sign ? F.neg(d) : d;
    }
    return rank;
}

}  // namespace

int rank(const GfMatrix& m) {
    GfMatrix w = m;
    return eliminate(w, nullptr);
}

Fel det(const GfMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
    GfMatrix w = m;
    Fel d = 0;
    eliminate(w, &d);
    return d;
}

bool IncrementalEliminator::push(const std::vector<Fel>& v) {
    if (static_cast<int>(v.size()) != dim_)
        throw std::invalid_argument("eliminator: wrong vector dimension");
    std::vector<Fel> w = v;
    const FieldSpec& F = field_;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Fel f = w[pivot_rows_[i]];
        if (!f) continue;
        const auto& b = basis_[i];
        for (int r = 0; r < dim_; ++r)
            if (b[r]) w[r] = F.sub(w[r], F.mul(f, b[r]));
    }
    int pivot = -1;
    for (int r = 0; r < dim_; ++r)
        if (w[r]) {
            pivot = r;
            break;
        }
    if (pivot < 0) return false;
    Fel pinv = F.inv(w[pivot]);
    for (int r = 0; r < dim_; ++r)
        if (w[r]) w[r] = F.mul(w[r], pinv);
    basis_.push_back(std::move(w));
    pivot_rows_.push_back(pivot);
    return true;
}

void IncrementalEliminator::pop() {
    if (basis_.empty()) throw std::logic_error("eliminator: pop on empty state");
    basis_.pop_back();
    pivot_rows_.pop_back();
}

}  // namespace ccodes
