#include "ccodes/verify.hpp"

#include <functional>
#include <stdexcept>

namespace ccodes {

namespace {

bool bounds_feasible(const SlidingMatrix& s) {
    for (int t = 1; t <= s.mat.rows(); ++t)
        if (s.lo[t] > s.hi[t]) return false;
    return true;
}

// Reverses every row of the coefficient stack within that row's own degree;
// rows of lower degree keep their position instead of picking up a shift.
Generator coordinate_reversed(const Generator& g) {
    std::vector<int> deg(g.params.n, 0);
    for (int i = 0; i < g.params.n; ++i)
        for (std::size_t d = 0; d < g.coeffs.size(); ++d)
            for (int j = 0; j < g.params.k; ++j)
                if (g.coeffs[d].at(i, j)) deg[i] = static_cast<int>(d);
    std::vector<GfMatrix> out(g.coeffs.size(), GfMatrix(g.field(), g.params.n, g.params.k));
    for (int i = 0; i < g.params.n; ++i)
        for (int d = 0; d <= deg[i]; ++d)
            for (int j = 0; j < g.params.k; ++j) out[d].at(i, j) = g.coeffs[deg[i] - d].at(i, j);
    return Generator(g.params, std::move(out));
}

// Interval-exact path: depth-first over the propagated per-position ranges
// with an incremental eliminator.  A column that reduces to zero against the
// accepted prefix dooms every completion, and the greedy completion
// (smallest feasible column at every later position) is the
// lexicographically first one.
MinorVerdict run_interval_exact(const SlidingMatrix& s) {
    MinorVerdict v;
    v.checked = s.kind;
    v.holds = true;
    const int R = s.mat.rows();
    if (!bounds_feasible(s)) return v;  // no valid selections at all

    IncrementalEliminator elim(s.mat.field(), R);
    std::vector<int> sel;
    std::function<bool(int)> walk = [&](int pos) -> bool {
        if (pos > R) return true;
        const int start = std::max(s.lo[pos], sel.empty() ? 1 : sel.back() + 1);
        for (int j = start; j <= s.hi[pos]; ++j) {
            sel.push_back(j);
            if (elim.push(s.mat.col(j - 1))) {
                bool ok = walk(pos + 1);
                elim.pop();
                sel.pop_back();
                if (!ok) return false;
            } else {
                std::vector<int> w = sel;
                for (int t = pos + 1; t <= R; ++t) w.push_back(std::max(s.lo[t], w.back() + 1));
                v.holds = false;
                v.witness = std::move(w);
                sel.pop_back();
                return false;
            }
        }
        return true;
    };
    walk(1);
    return v;
}

// Support-matching path (GenTranspose with unequal column degrees): validity
// needs a perfect matching on the realized support, so dependence of a prefix
// no longer dooms only valid completions.  Leaves are checked one by one.
MinorVerdict run_leaf_checked(const SlidingMatrix& s) {
    MinorVerdict v;
    v.checked = s.kind;
    v.holds = true;
    const int R = s.mat.rows();
    if (!bounds_feasible(s)) return v;

    std::vector<int> sel;
    std::vector<int> all_rows(R);
    for (int i = 0; i < R; ++i) all_rows[i] = i;
    std::function<bool(int)> walk = [&](int pos) -> bool {
        if (pos > R) {
            if (!s.selection_valid(sel)) return true;
            std::vector<int> cols0(sel.size());
            for (std::size_t i = 0; i < sel.size(); ++i) cols0[i] = sel[i] - 1;
            if (det(s.mat.submatrix(all_rows, cols0)) == 0) {
                v.holds = false;
                v.witness = sel;
                return false;
            }
            return true;
        }
        const int start = std::max(s.lo[pos], sel.empty() ? 1 : sel.back() + 1);
        for (int j = start; j <= s.hi[pos]; ++j) {
            sel.push_back(j);
            bool ok = walk(pos + 1);
            sel.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    walk(1);
    return v;
}

}  // namespace

MinorVerdict all_valid_minors_nonzero(const SlidingMatrix& s) {
    return s.interval_exact ? run_interval_exact(s) : run_leaf_checked(s);
}

MinorVerdict all_valid_minors_nonzero_naive(const SlidingMatrix& s) {
    MinorVerdict v;
    v.checked = s.kind;
    v.holds = true;
    const int R = s.mat.rows(), C = s.mat.cols();
    std::vector<int> all_rows(R);
    for (int i = 0; i < R; ++i) all_rows[i] = i;
    std::vector<int> sel;
    std::function<bool(int)> walk = [&](int next) -> bool {
        if (static_cast<int>(sel.size()) == R) {
            if (!s.selection_valid(sel)) return true;
            std::vector<int> cols0(sel.size());
            for (std::size_t i = 0; i < sel.size(); ++i) cols0[i] = sel[i] - 1;
            if (det(s.mat.submatrix(all_rows, cols0)) == 0) {
                v.holds = false;
                v.witness = sel;
                return false;
            }
            return true;
        }
        for (int j = next; j <= C; ++j) {
            sel.push_back(j);
            bool ok = walk(j + 1);
            sel.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    walk(1);
    return v;
}

MinorVerdict is_mdp(const ParityCheck& h) {
    if (!h.is_row_proper())
        throw std::invalid_argument("parity check is not row proper; verdicts would be meaningless");
    return all_valid_minors_nonzero(build_sliding(h, SlidingKind::FullSize));
}

MinorVerdict is_mdp(const Generator& g) {
    if (!g.is_column_proper())
        throw std::invalid_argument("generator is not column proper; verdicts would be meaningless");
    return all_valid_minors_nonzero(build_sliding(g));
}

MinorVerdict is_reverse_mdp(const ParityCheck& h) {
    MinorVerdict base = is_mdp(h);
    if (!base.holds) {
        base.note = "not MDP, hence not reverse-MDP";
        return base;
    }
    if (h.params.r() == 0) return all_valid_minors_nonzero(build_sliding(h, SlidingKind::ReverseWindow));
    MinorVerdict v = is_mdp(reverse_parity(h));
    v.note = "degree not divisible by n-k: reversed parity check was tested as MDP";
    return v;
}

MinorVerdict is_reverse_mdp(const Generator& g) {
    MinorVerdict base = is_mdp(g);
    if (!base.holds) {
        base.note = "not MDP, hence not reverse-MDP";
        return base;
    }
    if (g.params.r() == 0) return all_valid_minors_nonzero(build_sliding(reverse_code(g)));
    // The reversed window criterion is stated only when (n-k) | delta.
    // Otherwise reverse each output coordinate (row) within its own degree
    // window -- coordinates of lower degree keep their position -- and test
    // the result as MDP.
    try {
        MinorVerdict v = is_mdp(coordinate_reversed(g));
        v.note =
            "degree not divisible by n-k: each output coordinate was reversed "
            "within its own degree and the result tested as MDP";
        return v;
    } catch (const std::invalid_argument&) {
        MinorVerdict v;
        v.checked = SlidingKind::GenTranspose;
        v.holds = false;
        v.note = "reversed generator is not column proper; treated as not reverse-MDP";
        return v;
    }
}

MinorVerdict is_complete_mdp(const ParityCheck& h) {
    if (h.params.r() != 0) {
        MinorVerdict v;
        v.checked = SlidingKind::PartialWindow;
        v.holds = false;
        v.structural = true;
        v.note = "no complete-MDP code exists: n-k must divide delta";
        return v;
    }
    if (!h.is_row_proper())
        throw std::invalid_argument("parity check is not row proper; verdicts would be meaningless");
    return all_valid_minors_nonzero(build_sliding(h, SlidingKind::PartialWindow));
}

bool is_superregular_toeplitz(const FieldSpec& F, const std::vector<Fel>& a) {
    const int gamma = static_cast<int>(a.size());
    if (gamma == 0) throw std::invalid_argument("empty entry vector");
    GfMatrix t(F, gamma, gamma);
    for (int i = 0; i < gamma; ++i)
        for (int j = 0; j <= i; ++j) t.at(i, j) = a[i - j];

    // Every not-trivially-zero minor: row/column subsets of equal size with
    // j_l <= i_l positionwise.
    std::vector<int> rows, cols;
    std::function<bool(int, int, int)> pick_cols;
    std::function<bool(int, int)> pick_rows = [&](int start, int m) -> bool {
        if (static_cast<int>(rows.size()) == m) return pick_cols(0, 0, m);
        for (int i = start; i < gamma; ++i) {
            rows.push_back(i);
            if (!pick_rows(i + 1, m)) return false;
            rows.pop_back();
        }
        return true;
    };
    pick_cols = [&](int start, int idx, int m) -> bool {
        if (idx == m) return det(t.submatrix(rows, cols)) != 0;
        for (int j = std::max(start, 0); j <= rows[idx]; ++j) {
            cols.push_back(j);
            if (!pick_cols(j + 1, idx + 1, m)) return false;
            cols.pop_back();
        }
        return true;
    };
    for (int m = 1; m <= gamma; ++m)
        if (!pick_rows(0, m)) return false;
    return true;
}

}  // namespace ccodes
