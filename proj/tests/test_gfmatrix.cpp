#include <doctest.h>

#include <functional>
#include <random>

#include "ccodes/gfmatrix.hpp"

using namespace ccodes;

namespace {

GfMatrix random_matrix(const FieldSpec& F, int r, int c, std::mt19937_64& rng) {
    GfMatrix m(F, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = static_cast<Fel>(rng() % F.q());
    return m;
}

// Laplace expansion along the first row; exponential, oracle only.
Fel det_laplace(const GfMatrix& m) {
    const FieldSpec& F = m.field();
    const int n = m.rows();
    if (n == 1) return m.at(0, 0);
    std::vector<int> all_rows, all_cols;
    for (int i = 1; i < n; ++i) all_rows.push_back(i);
    Fel acc = 0;
    for (int j = 0; j < n; ++j) {
        if (!m.at(0, j)) continue;
        all_cols.clear();
        for (int c = 0; c < n; ++c)
            if (c != j) all_cols.push_back(c);
        Fel term = F.mul(m.at(0, j), det_laplace(m.submatrix(all_rows, all_cols)));
        acc = (j % 2 == 0) ? F.add(acc, term) : F.sub(acc, term);
    }
    return acc;
}

// Largest size of a nonzero minor, found by exhaustive enumeration.
int rank_by_minors(const GfMatrix& m) {
    const int r = m.rows(), c = m.cols();
    for (int s = std::min(r, c); s >= 1; --s) {
        std::vector<int> rows, cols;
        std::function<bool(int)> pick_cols = [&](int start) -> bool {
            if (static_cast<int>(cols.size()) == s) return det(m.submatrix(rows, cols)) != 0;
            for (int j = start; j < c; ++j) {
                cols.push_back(j);
                if (pick_cols(j + 1)) return true;
                cols.pop_back();
            }
            return false;
        };
        std::function<bool(int)> pick_rows = [&](int start) -> bool {
            if (static_cast<int>(rows.size()) == s) return pick_cols(0);
            for (int i = start; i < r; ++i) {
                rows.push_back(i);
                if (pick_rows(i + 1)) return true;
                rows.pop_back();
            }
            return false;
        };
        if (pick_rows(0)) return s;
    }
    return 0;
}

GfMatrix column_of(const FieldSpec& F, const std::vector<Fel>& v) {
    GfMatrix m(F, static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

}  // namespace

TEST_CASE("determinant matches the 2x2 closed form exhaustively") {
    for (std::uint32_t q : {3u, 4u}) {
        const FieldSpec F = FieldSpec::make_q(q);
        GfMatrix m(F, 2, 2);
        for (Fel a = 0; a < q; ++a)
            for (Fel b = 0; b < q; ++b)
                for (Fel c = 0; c < q; ++c)
                    for (Fel d = 0; d < q; ++d) {
                        m.at(0, 0) = a;
                        m.at(0, 1) = b;
                        m.at(1, 0) = c;
                        m.at(1, 1) = d;
                        CHECK(det(m) == F.sub(F.mul(a, d), F.mul(b, c)));
                    }
    }
}

TEST_CASE("determinant matches Laplace expansion") {
    std::mt19937_64 rng(11);
    for (std::uint32_t q : {2u, 5u, 9u}) {
        const FieldSpec F = FieldSpec::make_q(q);
        for (int trial = 0; trial < 60; ++trial)
            for (int n = 1; n <= 4; ++n) {
                const GfMatrix m = random_matrix(F, n, n, rng);
                CHECK(det(m) == det_laplace(m));
            }
    }
}

TEST_CASE("determinant is multiplicative and alternating") {
    std::mt19937_64 rng(12);
    const FieldSpec F = FieldSpec::make_q(7);
    for (int trial = 0; trial < 40; ++trial) {
        const GfMatrix a = random_matrix(F, 4, 4, rng);
        const GfMatrix b = random_matrix(F, 4, 4, rng);
        CHECK(det(matmul(a, b)) == F.mul(det(a), det(b)));
        CHECK(det(a.transposed()) == det(a));
    }
    // Identity, a row swap, and a duplicated row.
    GfMatrix id(F, 3, 3), swp(F, 3, 3), dup(F, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    swp.at(0, 1) = swp.at(1, 0) = swp.at(2, 2) = 1;
    dup.at(0, 0) = dup.at(1, 0) = dup.at(2, 2) = 1;
    CHECK(det(id) == 1);
    CHECK(det(swp) == F.neg(1));  // odd permutation
    CHECK(det(dup) == 0);
}

TEST_CASE("rank agrees with exhaustive minor search") {
    std::mt19937_64 rng(13);
    const FieldSpec F = FieldSpec::make_q(4);
    for (int trial = 0; trial < 50; ++trial) {
        const GfMatrix m = random_matrix(F, 3, 5, rng);
        const int r = rank(m);
        CHECK(r == rank_by_minors(m));
        CHECK(rank(m.transposed()) == r);
    }
    GfMatrix z(F, 3, 4);
    CHECK(rank(z) == 0);
}

TEST_CASE("matmul is associative with identity") {
    std::mt19937_64 rng(14);
    const FieldSpec F = FieldSpec::make_q(8);
    const GfMatrix a = random_matrix(F, 2, 3, rng);
    const GfMatrix b = random_matrix(F, 3, 4, rng);
    const GfMatrix c = random_matrix(F, 4, 2, rng);
    CHECK(matmul(matmul(a, b), c) == matmul(a, matmul(b, c)));
    GfMatrix id(F, 3, 3);
    for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
    CHECK(matmul(a, id) == a);
    CHECK(matmul(id, b) == b);
}

TEST_CASE("submatrix, row, col, transposed are consistent") {
    const FieldSpec F = FieldSpec::make_q(5);
    GfMatrix m(F, 3, 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = static_cast<Fel>((i * 4 + j) % 5);
    const GfMatrix s = m.submatrix({2, 0}, {3, 1});
    CHECK(s.rows() == 2);
    CHECK(s.cols() == 2);
    CHECK(s.at(0, 0) == m.at(2, 3));
    CHECK(s.at(0, 1) == m.at(2, 1));
    CHECK(s.at(1, 0) == m.at(0, 3));
    CHECK(s.at(1, 1) == m.at(0, 1));
    CHECK(m.row(1) == std::vector<Fel>{4, 0, 1, 2});
    CHECK(m.col(2) == std::vector<Fel>{2, 1, 0});
    CHECK(m.transposed().transposed() == m);
    CHECK(m.transposed().at(3, 1) == m.at(1, 3));
}

TEST_CASE("incremental eliminator tracks rank through pushes and pops") {
    std::mt19937_64 rng(15);
    const FieldSpec F = FieldSpec::make_q(9);
    const int dim = 5;
    IncrementalEliminator elim(F, dim);
    std::vector<std::vector<Fel>> accepted;  // mirror of the accepted columns

    auto mirror_matrix = [&]() {
        GfMatrix m(F, dim, std::max<int>(1, static_cast<int>(accepted.size())));
        for (std::size_t c = 0; c < accepted.size(); ++c)
            for (int r = 0; r < dim; ++r) m.at(r, static_cast<int>(c)) = accepted[c][r];
        return m;
    };

    for (int step = 0; step < 400; ++step) {
        const int action = static_cast<int>(rng() % 3);
        if (action == 0 && !accepted.empty()) {
            elim.pop();
            accepted.pop_back();
        } else {
            std::vector<Fel> v(dim);
            for (auto& x : v) x = static_cast<Fel>(rng() % F.q());
            const int before = static_cast<int>(accepted.size());
            std::vector<std::vector<Fel>> with = accepted;
            with.push_back(v);
            GfMatrix probe(F, dim, before + 1);
            for (int c = 0; c <= before; ++c)
                for (int r = 0; r < dim; ++r) probe.at(r, c) = with[c][r];
            const bool independent = rank(probe) == before + 1;
            CHECK(elim.push(v) == independent);
            if (independent) accepted.push_back(v);
        }
        CHECK(elim.size() == static_cast<int>(accepted.size()));
        if (!accepted.empty()) CHECK(rank(mirror_matrix()) == elim.size());
    }
}

TEST_CASE("rejected pushes leave the eliminator state untouched") {
    const FieldSpec F = FieldSpec::make_q(3);
    IncrementalEliminator a(F, 3), b(F, 3);

    // a takes a detour: a rejected dependent push and an accepted-then-popped
    // column; afterwards both must behave identically on the same input.
    std::vector<Fel> e1 = {1, 0, 0}, e2 = {0, 1, 0}, mix = {1, 2, 0}, e3 = {2, 1, 1};
    REQUIRE(a.push(e1));
    REQUIRE(b.push(e1));
    REQUIRE(a.push(e2));
    REQUIRE(b.push(e2));
    CHECK_FALSE(a.push(mix));  // dependent on e1, e2
    CHECK(a.size() == 2);
    REQUIRE(a.push(e3));
    a.pop();
    CHECK(a.size() == 2);

    CHECK(a.push(e3) == b.push(e3));
    CHECK_FALSE(a.push(column_of(F, {1, 1, 1}).col(0)) !=
                b.push(column_of(F, {1, 1, 1}).col(0)));
    CHECK(a.size() == b.size());
}
