#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>

#include "ccodes/code.hpp"

using namespace ccodes;

namespace {

GfMatrix mat(const FieldSpec& F, int rows, int cols, const std::vector<Fel>& data) {
    GfMatrix m(F, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = data[static_cast<std::size_t>(i) * cols + j];
    return m;
}

bool same_coeffs(const std::vector<GfMatrix>& a, const std::vector<GfMatrix>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// The worked (2,1,1) pair over GF(3): H = (1+z, 2+z), G = (2+z, -1-z)^T.
ParityCheck worked_parity() {
    const FieldSpec F = FieldSpec::make_q(3);
    return ParityCheck(CodeParams(2, 1, 1), {mat(F, 1, 2, {1, 2}), mat(F, 1, 2, {1, 1})});
}

Generator worked_generator() {
    const FieldSpec F = FieldSpec::make_q(3);
    return Generator(CodeParams(2, 1, 1), {mat(F, 2, 1, {2, 2}), mat(F, 2, 1, {1, 2})});
}

// Every increasing full-size column tuple of the stack, tested against the
// given predicate; returns how many satisfy it.
std::uint64_t count_selections(const SlidingMatrix& s,
                               const std::function<bool(const std::vector<int>&)>& pred) {
    std::uint64_t count = 0;
    std::vector<int> sel;
    const int R = s.sel_size(), C = s.mat.cols();
    std::function<void(int)> walk = [&](int from) {
        if (static_cast<int>(sel.size()) == R) {
            if (pred(sel)) ++count;
            return;
        }
        for (int j = from; j <= C; ++j) {
            sel.push_back(j);
            walk(j + 1);
            sel.pop_back();
        }
    };
    walk(1);
    return count;
}

}  // namespace

TEST_CASE("derived parameters and generic degree profiles") {
    const CodeParams a(2, 1, 1);
    CHECK(a.L() == 2);
    CHECK(a.nu() == 1);
    CHECK(a.r() == 0);
    CHECK(a.mu() == 1);
    const CodeParams b(3, 1, 1);
    CHECK(b.L() == 1);
    CHECK(b.nu() == 1);
    CHECK(b.r() == 1);
    CHECK(b.generic_row_degrees() == std::vector<int>{1, 0});
    const CodeParams c(5, 3, 2);
    CHECK(c.L() == 1);
    CHECK(c.nu() == 1);
    CHECK(c.r() == 0);
    CHECK(c.mu() == 1);
    CHECK(c.generic_row_degrees() == std::vector<int>{1, 1});
    CHECK(c.generic_column_degrees() == std::vector<int>{1, 1, 0});
    const CodeParams d(6, 5, 4);
    CHECK(d.L() == 4);
    CHECK(d.nu() == 4);
    CHECK(d.generic_row_degrees() == std::vector<int>{4});
    const CodeParams e(5, 2, 1);
    CHECK(e.L() == 0);
    CHECK(e.nu() == 1);
    CHECK(e.r() == 1);
    const CodeParams z(3, 1, 0);
    CHECK(z.L() == 0);
    CHECK(z.nu() == 0);
    CHECK(z.mu() == 0);
    CHECK_THROWS_AS(CodeParams(2, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(1, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(CodeParams(3, 2, -1), std::invalid_argument);
}

TEST_CASE("representation constructors validate shape and degree sums") {
    const FieldSpec F = FieldSpec::make_q(3);
    // Wrong coefficient count: (2,1,1) needs nu+1 = 2 matrices.
    CHECK_THROWS_AS(ParityCheck(CodeParams(2, 1, 1), {mat(F, 1, 2, {1, 2})}),
                    std::invalid_argument);
    // Degree sum 0 != delta.
    CHECK_THROWS_AS(ParityCheck(CodeParams(2, 1, 1), {mat(F, 1, 2, {1, 2}), mat(F, 1, 2, {0, 0})}),
                    std::invalid_argument);
    // Shape mismatch.
    CHECK_THROWS_AS(ParityCheck(CodeParams(3, 2, 1), {mat(F, 1, 2, {1, 2}), mat(F, 1, 2, {1, 1})}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Generator(CodeParams(2, 1, 1), {mat(F, 2, 1, {2, 2}), mat(F, 2, 1, {0, 0})}),
                    std::invalid_argument);
    // Degrees and properness of the worked pair.
    const ParityCheck h = worked_parity();
    CHECK(h.row_degrees() == std::vector<int>{1});
    CHECK(h.is_row_proper());
    const Generator g = worked_generator();
    CHECK(g.column_degrees() == std::vector<int>{1});
    CHECK(g.is_column_proper());
}

TEST_CASE("sliding stacks have the documented shapes and entries") {
    const ParityCheck h = worked_parity();
    const SlidingMatrix full = build_sliding(h, SlidingKind::FullSize);
    REQUIRE(full.mat.rows() == 3);
    REQUIRE(full.mat.cols() == 6);
    const std::vector<std::vector<Fel>> expect = {
        {1, 2, 0, 0, 0, 0}, {1, 1, 1, 2, 0, 0}, {0, 0, 1, 1, 1, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 6; ++j) CHECK(full.mat.at(i, j) == expect[i][j]);

    const SlidingMatrix rev = build_sliding(h, SlidingKind::ReverseWindow);
    CHECK(rev.mat.rows() == 3);
    CHECK(rev.mat.cols() == 6);
    // Reverse window leads with H_nu: first block row is (H_1 H_0 0).
    CHECK(rev.mat.at(0, 0) == 1);
    CHECK(rev.mat.at(0, 2) == 1);
    CHECK(rev.mat.at(0, 3) == 2);

    const SlidingMatrix part = build_sliding(h, SlidingKind::PartialWindow);
    CHECK(part.mat.rows() == 3);
    CHECK(part.mat.cols() == 8);  // (nu + L + 1) n

    const SlidingMatrix gen = build_sliding(worked_generator());
    CHECK(gen.mat.rows() == 3);
    CHECK(gen.mat.cols() == 6);
    CHECK(gen.interval_exact);  // equal column degrees
}

TEST_CASE("valid selection counts match the brute-forced anchors") {
    const ParityCheck h = worked_parity();
    CHECK(valid_selection_count(build_sliding(h, SlidingKind::FullSize)) == 14);
    CHECK(valid_selection_count(build_sliding(h, SlidingKind::ReverseWindow)) == 14);
    CHECK(valid_selection_count(build_sliding(h, SlidingKind::PartialWindow)) == 40);
    CHECK(valid_selection_count(build_sliding(worked_generator())) == 14);

    // Counting through selection_valid agrees with the dedicated counter.
    const SlidingMatrix full = build_sliding(h, SlidingKind::FullSize);
    CHECK(count_selections(full, [&](const std::vector<int>& s) {
              return full.selection_valid(s);
          }) == 14);

    // At L = 0 the window is a single block and every C(n, n-k) tuple counts.
    const FieldSpec F3 = FieldSpec::make_q(3);
    const ParityCheck h421(
        CodeParams(4, 2, 1),
        {mat(F3, 2, 4, {1, 0, 1, 2, 0, 1, 1, 1}), mat(F3, 2, 4, {1, 0, 0, 0, 0, 0, 0, 0})});
    CHECK(valid_selection_count(build_sliding(h421, SlidingKind::FullSize)) == 6);
}

TEST_CASE("index bounds: explicit (2,1,1) full-size rule") {
    // For (2,1,1) the rule is j_s <= 2s for s = 1..2 (j_3 free).
    const ParityCheck h = worked_parity();
    const SlidingMatrix full = build_sliding(h, SlidingKind::FullSize);
    const std::uint64_t by_rule = count_selections(full, [](const std::vector<int>& s) {
        return s[0] <= 2 && s[1] <= 4;
    });
    CHECK(by_rule == 14);
    for (int t = 1; t <= 3; ++t) CHECK(full.lo[t] <= full.hi[t]);
    CHECK(full.hi[1] == 2);
    CHECK(full.hi[2] == 4);
    CHECK(full.hi[3] == 6);
}

TEST_CASE("reverse window selections mirror the full-size selections") {
    // Mirror: position-reversed complement c -> (L+1)n + 1 - c.
    const FieldSpec F3 = FieldSpec::make_q(3);
    const std::vector<ParityCheck> cases = {
        worked_parity(),
        ParityCheck(CodeParams(3, 2, 1), {mat(F3, 1, 3, {1, 1, 1}), mat(F3, 1, 3, {0, 1, 2})}),
        ParityCheck(CodeParams(3, 1, 2), {mat(F3, 2, 3, {1, 0, 1, 0, 1, 1}),
                                          mat(F3, 2, 3, {1, 2, 0, 0, 1, 1})}),
        ParityCheck(CodeParams(4, 3, 1), {mat(F3, 1, 4, {1, 1, 1, 2}), mat(F3, 1, 4, {0, 1, 2, 1})}),
    };
    for (const ParityCheck& h : cases) {
        CAPTURE(h.params.n);
        CAPTURE(h.params.k);
        const SlidingMatrix full = build_sliding(h, SlidingKind::FullSize);
        const SlidingMatrix rev = build_sliding(h, SlidingKind::ReverseWindow);
        const int width = full.mat.cols();
        const std::uint64_t agreements = count_selections(rev, [&](const std::vector<int>& s) {
            std::vector<int> mirrored(s.size());
            for (std::size_t i = 0; i < s.size(); ++i)
                mirrored[s.size() - 1 - i] = width + 1 - s[i];
            return rev.selection_valid(s) == full.selection_valid(mirrored);
        });
        // The predicate holds for every single tuple.
        std::uint64_t all = count_selections(rev, [](const std::vector<int>&) { return true; });
        CHECK(agreements == all);
        CHECK(valid_selection_count(full) == valid_selection_count(rev));
    }
}

TEST_CASE("generator window validity equals a random-fill oracle") {
    // Unequal column degrees put extra fixed zeros in the blocks, where the
    // index rule is only necessary; compare against refilling the free
    // coefficients at random over a large field.
    const FieldSpec F = FieldSpec::make_q(997);
    std::mt19937_64 rng(21);
    const CodeParams p(3, 2, 1);  // column degrees (1, 0)
    auto draw = [&]() {
        while (true) {
            GfMatrix g0(F, 3, 2), g1(F, 3, 2);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 2; ++j) g0.at(i, j) = static_cast<Fel>(rng() % 997);
            for (int i = 0; i < 3; ++i) g1.at(i, 0) = static_cast<Fel>(rng() % 997);
            bool top = false, keep = false;
            for (int i = 0; i < 3; ++i) {
                if (g1.at(i, 0)) top = true;
                if (g0.at(i, 1)) keep = true;
            }
            if (top && keep) return Generator(p, {std::move(g0), std::move(g1)});
        }
    };
    const SlidingMatrix pattern = build_sliding(draw());
    CHECK_FALSE(pattern.interval_exact);

    std::vector<SlidingMatrix> draws;
    for (int t = 0; t < 8; ++t) draws.push_back(build_sliding(draw()));
    const std::uint64_t agreements = count_selections(pattern, [&](const std::vector<int>& sel) {
        std::vector<int> cols0;
        for (int c : sel) cols0.push_back(c - 1);
        std::vector<int> rows;
        for (int r = 0; r < pattern.mat.rows(); ++r) rows.push_back(r);
        bool nonzero_somewhere = false;
        for (const SlidingMatrix& d : draws)
            if (det(d.mat.submatrix(rows, cols0)) != 0) nonzero_somewhere = true;
        return pattern.selection_valid(sel) == nonzero_somewhere;
    });
    CHECK(agreements == count_selections(pattern, [](const std::vector<int>&) { return true; }));
}

TEST_CASE("column distances of the worked pair climb 2, 3, 4") {
    const Generator g = worked_generator();
    CHECK(column_distance(g, 0) == 2);
    CHECK(column_distance(g, 1) == 3);
    CHECK(column_distance(g, 2) == 4);
    const DistanceProfile prof = distance_profile(g, 2);
    CHECK(prof.d == std::vector<int>{2, 3, 4});
    CHECK(prof.maximal(g.params));
    // A non-maximal profile: parity (1, 2+z) gives d_0 = 2 but stalls.
    const FieldSpec F = FieldSpec::make_q(3);
    const Generator bad(CodeParams(2, 1, 1), {mat(F, 2, 1, {2, 1}), mat(F, 2, 1, {1, 0})});
    CHECK_FALSE(distance_profile(bad, 2).maximal(bad.params));
    CHECK_THROWS_AS(column_distance(g, 5, 10), std::length_error);
}

TEST_CASE("catastrophic inputs are recognized on both sides") {
    const FieldSpec F = FieldSpec::make_q(3);
    CHECK(is_noncatastrophic(worked_generator()));
    CHECK(is_left_prime(worked_parity()));
    // (1+z) * (1, 2): common factor in every maximal minor.
    const Generator bad(CodeParams(2, 1, 1), {mat(F, 2, 1, {1, 2}), mat(F, 2, 1, {1, 2})});
    CHECK_FALSE(is_noncatastrophic(bad));
    const ParityCheck badh(CodeParams(2, 1, 1), {mat(F, 1, 2, {1, 2}), mat(F, 1, 2, {1, 2})});
    CHECK_FALSE(is_left_prime(badh));
}

TEST_CASE("reversal is an involution row- and column-wise") {
    const ParityCheck h = worked_parity();
    const ParityCheck hh = reverse_parity(reverse_parity(h));
    CHECK(hh.params == h.params);
    CHECK(same_coeffs(hh.coeffs, h.coeffs));
    // Mixed row degrees: the degree-0 row must stay in place.
    const FieldSpec F = FieldSpec::make_q(3);
    const ParityCheck mixed(CodeParams(3, 1, 1), {mat(F, 2, 3, {1, 0, 1, 0, 1, 1}),
                                                  mat(F, 2, 3, {0, 1, 2, 0, 0, 0})});
    const ParityCheck rev = reverse_parity(mixed);
    CHECK(rev.coeffs[0].row(0) == std::vector<Fel>{0, 1, 2});
    CHECK(rev.coeffs[1].row(0) == std::vector<Fel>{1, 0, 1});
    CHECK(rev.coeffs[0].row(1) == std::vector<Fel>{0, 1, 1});
    CHECK(rev.coeffs[1].row(1) == std::vector<Fel>{0, 0, 0});
    CHECK(same_coeffs(reverse_parity(rev).coeffs, mixed.coeffs));

    const Generator g = worked_generator();
    const Generator grev = reverse_code(g);
    CHECK(grev.coeffs[0] == g.coeffs[1]);
    CHECK(grev.coeffs[1] == g.coeffs[0]);
    CHECK(same_coeffs(reverse_code(grev).coeffs, g.coeffs));
}

TEST_CASE("duality transposes between the two representations") {
    const ParityCheck h = worked_parity();
    const Generator gd = dual_generator(h);
    CHECK(gd.params == CodeParams(2, 1, 1));
    CHECK(gd.coeffs[0] == h.coeffs[0].transposed());
    const ParityCheck back = dual_parity(gd);
    CHECK(back.params == h.params);
    CHECK(same_coeffs(back.coeffs, h.coeffs));

    const FieldSpec F5 = FieldSpec::make_q(5);
    const ParityCheck h631(
        CodeParams(6, 3, 1),
        {mat(F5, 3, 6, {1, 0, 0, 1, 1, 2, 0, 1, 0, 1, 2, 1, 0, 0, 1, 1, 3, 3}),
         mat(F5, 3, 6, {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0})});
    CHECK(dual_generator(h631).params == CodeParams(6, 3, 1));
    CHECK(same_coeffs(dual_parity(dual_generator(h631)).coeffs, h631.coeffs));
}

TEST_CASE("json round-trips preserve every coefficient") {
    const ParityCheck h = worked_parity();
    const nlohmann::ordered_json jh = to_json(h);
    CHECK(jh["kind"] == "parity_check");
    CHECK(jh["p"] == 3);
    CHECK(jh["m"] == 1);
    CHECK(jh["params"]["n"] == 2);
    const ParityCheck h2 = parity_from_json(jh);
    CHECK(h2.params == h.params);
    CHECK(same_coeffs(h2.coeffs, h.coeffs));

    const Generator g = worked_generator();
    const nlohmann::ordered_json jg = to_json(g);
    CHECK(jg["kind"] == "generator");
    const Generator g2 = generator_from_json(jg);
    CHECK(g2.params == g.params);
    CHECK(same_coeffs(g2.coeffs, g.coeffs));

    const auto path = (std::filesystem::temp_directory_path() / "ccodes_roundtrip.json").string();
    save_code_file(path, jh);
    std::optional<ParityCheck> oh;
    std::optional<Generator> og;
    load_code_file(path, oh, og);
    REQUIRE(oh.has_value());
    CHECK_FALSE(og.has_value());
    CHECK(same_coeffs(oh->coeffs, h.coeffs));
    std::remove(path.c_str());
}
