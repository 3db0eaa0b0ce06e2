#include "ccodes/code.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace ccodes {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

GfPoly entry_poly(const FieldSpec& F, const std::vector<GfMatrix>& coeffs, int r, int c) {
    GfPoly p;
    p.c.resize(coeffs.size(), 0);
    for (std::size_t d = 0; d < coeffs.size(); ++d) p.c[d] = coeffs[d].at(r, c);
    p.normalize();
    (void)F;
    return p;
}

// Determinant of a square polynomial matrix by Laplace expansion along the
// first column; sizes here stay tiny.
GfPoly poly_det(const FieldSpec& F, const std::vector<std::vector<GfPoly>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    GfPoly acc = GfPoly::zero();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<GfPoly>> sub;
        sub.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            std::vector<GfPoly> row(m[r].begin() + 1, m[r].end());
            sub.push_back(std::move(row));
        }
        GfPoly term = poly_mul(F, m[i][0], poly_det(F, sub));
        acc = (i % 2 == 0) ? poly_add(F, acc, term) : poly_sub(F, acc, term);
    }
    return acc;
}

// gcd of all size x size minors of a polynomial matrix given by coefficient
// stacks; returns true iff the gcd is a nonzero constant.
bool minor_gcd_is_constant(const FieldSpec& F, const std::vector<GfMatrix>& coeffs, int rows,
                           int cols, int size) {
    std::vector<int> rsel, csel;
    GfPoly g = GfPoly::zero();
    std::function<bool(int, int)> pick_cols;
    std::function<bool(int, int)> pick_rows = [&](int start, int need) -> bool {
        if (!need) return pick_cols(0, size);
        for (int r = start; r <= rows - need; ++r) {
            rsel.push_back(r);
            if (pick_rows(r + 1, need - 1)) return true;
            rsel.pop_back();
        }
        return false;
    };
    pick_cols = [&](int start, int need) -> bool {
        if (!need) {
            std::vector<std::vector<GfPoly>> m(size, std::vector<GfPoly>(size));
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) m[i][j] = entry_poly(F, coeffs, rsel[i], csel[j]);
            g = poly_gcd(F, g, poly_det(F, m));
            return !g.is_zero() && g.degree() == 0;  // cannot shrink further
        }
        for (int c = start; c <= cols - need; ++c) {
            csel.push_back(c);
            if (pick_cols(c + 1, need - 1)) return true;
            csel.pop_back();
        }
        return false;
    };
    if (pick_rows(0, size)) return true;
    return !g.is_zero() && g.degree() == 0;
}

// Kuhn's augmenting-path bipartite matching: can every selected position be
// matched to a distinct row through the support pattern?
bool has_column_perfect_matching(const std::vector<std::vector<bool>>& support,
                                 const std::vector<int>& cols0) {
    const int rows = static_cast<int>(support.size());
    const int m = static_cast<int>(cols0.size());
    std::vector<int> match_row(rows, -1);
    std::vector<char> seen(rows, 0);
    std::function<bool(int)> try_match = [&](int c) -> bool {
        for (int r = 0; r < rows; ++r) {
            if (!support[r][cols0[c]] || seen[r]) continue;
            seen[r] = 1;
            if (match_row[r] < 0 || try_match(match_row[r])) {
                match_row[r] = c;
                return true;
            }
        }
        return false;
    };
    for (int c = 0; c < m; ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        if (!try_match(c)) return false;
    }
    return true;
}

}  // namespace

// ----------------------------- parameters ----------------------------------

CodeParams::CodeParams(int n_, int k_, int delta_) : n(n_), k(k_), delta(delta_) {
    if (n < 2 || k < 1 || k >= n || delta < 0)
        throw std::invalid_argument("code parameters require n >= 2, 1 <= k < n, delta >= 0");
}

int CodeParams::L() const { return delta / k + delta / (n - k); }
int CodeParams::nu() const { return delta == 0 ? 0 : ceil_div(delta, n - k); }
int CodeParams::r() const { return delta % (n - k); }
int CodeParams::mu() const { return delta == 0 ? 0 : ceil_div(delta, k); }

std::vector<int> CodeParams::generic_row_degrees() const {
    std::vector<int> d(n - k, 0);
    if (delta == 0) return d;
    const int rr = r();
    for (int i = 0; i < n - k; ++i) d[i] = (rr == 0 || i < rr) ? nu() : nu() - 1;
    return d;
}

std::vector<int> CodeParams::generic_column_degrees() const {
    std::vector<int> d(k, 0);
    if (delta == 0) return d;
    const int rem = delta % k;
    for (int j = 0; j < k; ++j) d[j] = (rem == 0 || j < rem) ? mu() : mu() - 1;
    return d;
}

// --------------------------- representations -------------------------------

ParityCheck::ParityCheck(CodeParams p, std::vector<GfMatrix> cs) : params(p), coeffs(std::move(cs)) {
    if (coeffs.size() != static_cast<std::size_t>(params.nu() + 1))
        throw std::invalid_argument("parity check must store exactly nu+1 coefficient matrices");
    for (const auto& c : coeffs) {
        if (c.rows() != params.n - params.k || c.cols() != params.n)
            throw std::invalid_argument("parity-check coefficient shape mismatch");
        if (c.field().q() != field().q())
            throw std::invalid_argument("parity-check coefficients use different fields");
    }
    int sum = 0;
    for (int d : row_degrees()) sum += d;
    if (sum != params.delta)
        throw std::invalid_argument("parity-check row degrees do not sum to delta");
}

std::vector<int> ParityCheck::row_degrees() const {
    std::vector<int> deg(params.n - params.k, 0);
    for (int i = 0; i < params.n - params.k; ++i)
        for (std::size_t d = 0; d < coeffs.size(); ++d)
            for (int j = 0; j < params.n; ++j)
                if (coeffs[d].at(i, j)) deg[i] = static_cast<int>(d);
    return deg;
}

GfMatrix ParityCheck::leading_row_matrix() const {
    auto deg = row_degrees();
    GfMatrix out(field(), params.n - params.k, params.n);
    for (int i = 0; i < params.n - params.k; ++i)
        for (int j = 0; j < params.n; ++j) out.at(i, j) = coeffs[deg[i]].at(i, j);
    return out;
}

bool ParityCheck::is_row_proper() const { return rank(leading_row_matrix()) == params.n - params.k; }

Generator::Generator(CodeParams p, std::vector<GfMatrix> cs) : params(p), coeffs(std::move(cs)) {
    if (coeffs.empty()) throw std::invalid_argument("generator needs at least one coefficient");
    for (const auto& c : coeffs) {
        if (c.rows() != params.n || c.cols() != params.k)
            throw std::invalid_argument("generator coefficient shape mismatch");
        if (c.field().q() != field().q())
            throw std::invalid_argument("generator coefficients use different fields");
    }
    while (coeffs.size() > 1) {
        const GfMatrix& last = coeffs.back();
        bool zero = true;
        for (int i = 0; i < last.rows() && zero; ++i)
            for (int j = 0; j < last.cols() && zero; ++j)
                if (last.at(i, j)) zero = false;
        if (!zero) break;
        coeffs.pop_back();
    }
    int sum = 0;
    for (int d : column_degrees()) sum += d;
    if (sum != params.delta)
        throw std::invalid_argument("generator column degrees do not sum to delta");
}

std::vector<int> Generator::column_degrees() const {
    std::vector<int> deg(params.k, 0);
    for (int j = 0; j < params.k; ++j)
        for (std::size_t d = 0; d < coeffs.size(); ++d)
            for (int i = 0; i < params.n; ++i)
                if (coeffs[d].at(i, j)) deg[j] = static_cast<int>(d);
    return deg;
}

GfMatrix Generator::leading_col_matrix() const {
    auto deg = column_degrees();
    GfMatrix out(field(), params.n, params.k);
    for (int j = 0; j < params.k; ++j)
        for (int i = 0; i < params.n; ++i) out.at(i, j) = coeffs[deg[j]].at(i, j);
    return out;
}

bool Generator::is_column_proper() const { return rank(leading_col_matrix()) == params.k; }

// ---------------------------- sliding stacks --------------------------------

namespace {

// Applies the per-position constraints of a kind, then tightens with the
// monotonicity of increasing tuples.
void finish_bounds(SlidingMatrix& s) {
    const int R = s.mat.rows(), C = s.mat.cols();
    for (int t = 1; t <= R; ++t) {
        s.lo[t] = std::max(s.lo[t], t);
        s.hi[t] = std::min(s.hi[t], C - (R - t));
    }
    for (int t = R - 1; t >= 1; --t) s.hi[t] = std::min(s.hi[t], s.hi[t + 1] - 1);
    for (int t = 2; t <= R; ++t) s.lo[t] = std::max(s.lo[t], s.lo[t - 1] + 1);
}

}  // namespace

SlidingMatrix build_sliding(const ParityCheck& h, SlidingKind kind) {
    if (kind == SlidingKind::GenTranspose)
        throw std::invalid_argument("GenTranspose is built from a generator");
    const CodeParams& p = h.params;
    const FieldSpec& F = h.field();
    const int L = p.L(), nu = p.nu(), bk = p.n - p.k;
    const int R = (L + 1) * bk;
    const int C = (kind == SlidingKind::PartialWindow ? (nu + L + 1) : (L + 1)) * p.n;

    SlidingMatrix s{kind, p, GfMatrix(F, R, C), {}, {}, {}, true};
    s.support.assign(R, std::vector<bool>(C, false));
    s.lo.assign(R + 1, 1);
    s.hi.assign(R + 1, C);

    const int tblocks = C / p.n;
    for (int sb = 0; sb <= L; ++sb)
        for (int tb = 0; tb < tblocks; ++tb) {
            int d = (kind == SlidingKind::FullSize) ? sb - tb : nu - (tb - sb);
            if (kind != SlidingKind::FullSize && tb < sb) continue;
            if (d < 0 || d > nu) continue;
            for (int i = 0; i < bk; ++i)
                for (int j = 0; j < p.n; ++j) {
                    s.mat.at(sb * bk + i, tb * p.n + j) = h.coeffs[d].at(i, j);
                    s.support[sb * bk + i][tb * p.n + j] = true;
                }
        }

    for (int sb = 1; sb <= L; ++sb) {
        switch (kind) {
            case SlidingKind::FullSize:
                s.hi[sb * bk] = std::min(s.hi[sb * bk], sb * p.n);
                break;
            case SlidingKind::ReverseWindow:
                s.lo[sb * bk + 1] = std::max(s.lo[sb * bk + 1], sb * p.n + 1);
                break;
            case SlidingKind::PartialWindow:
                s.lo[sb * bk + 1] = std::max(s.lo[sb * bk + 1], sb * p.n + 1);
                s.hi[sb * bk] = std::min(s.hi[sb * bk], sb * p.n + nu * p.n);
                break;
            default:
                break;
        }
    }
    s.interval_exact = true;
    finish_bounds(s);
    return s;
}

SlidingMatrix build_sliding(const Generator& g) {
    const CodeParams& p = g.params;
    const FieldSpec& F = g.field();
    const int L = p.L();
    const int R = (L + 1) * p.k;
    const int C = (L + 1) * p.n;
    const auto cdeg = g.column_degrees();

    SlidingMatrix s{SlidingKind::GenTranspose, p, GfMatrix(F, R, C), {}, {}, {}, true};
    s.support.assign(R, std::vector<bool>(C, false));
    s.lo.assign(R + 1, 1);
    s.hi.assign(R + 1, C);

    for (int sb = 0; sb <= L; ++sb)
        for (int tb = sb; tb <= L; ++tb) {
            int d = tb - sb;
            for (int i = 0; i < p.k; ++i) {
                if (d > cdeg[i]) continue;  // beyond this column's degree
                for (int j = 0; j < p.n; ++j) {
                    if (d < static_cast<int>(g.coeffs.size()))
                        s.mat.at(sb * p.k + i, tb * p.n + j) = g.coeffs[d].at(j, i);
                    s.support[sb * p.k + i][tb * p.n + j] = true;
                }
            }
        }

    for (int sb = 1; sb <= L; ++sb)
        s.lo[sb * p.k + 1] = std::max(s.lo[sb * p.k + 1], sb * p.n + 1);

    // With equal column degrees the blocks have no interior fixed zeros and
    // the index bounds characterize validity exactly; otherwise validity is
    // decided on the realized support.
    s.interval_exact = std::all_of(cdeg.begin(), cdeg.end(), [&](int d) { return d == cdeg[0]; });
    finish_bounds(s);
    return s;
}

bool SlidingMatrix::selection_valid(const std::vector<int>& cols_1based) const {
    const int R = mat.rows();
    if (static_cast<int>(cols_1based.size()) != R) return false;
    for (int t = 1; t <= R; ++t) {
        int j = cols_1based[t - 1];
        if (j < lo[t] || j > hi[t]) return false;
        if (t > 1 && cols_1based[t - 2] >= j) return false;
    }
    if (interval_exact) return true;
    std::vector<int> cols0(cols_1based.size());
    for (std::size_t i = 0; i < cols0.size(); ++i) cols0[i] = cols_1based[i] - 1;
    return has_column_perfect_matching(support, cols0);
}

std::uint64_t valid_selection_count(const SlidingMatrix& s) {
    const int R = s.mat.rows();
    std::uint64_t count = 0;
    std::vector<int> sel;
    std::function<void(int)> walk = [&](int pos) {
        if (pos > R) {
            if (s.interval_exact) {
                ++count;
            } else {
                std::vector<int> cols0(sel.size());
                for (std::size_t i = 0; i < sel.size(); ++i) cols0[i] = sel[i] - 1;
                if (has_column_perfect_matching(s.support, cols0)) ++count;
            }
            return;
        }
        int start = std::max(s.lo[pos], sel.empty() ? 1 : sel.back() + 1);
        for (int j = start; j <= s.hi[pos]; ++j) {
            sel.push_back(j);
            walk(pos + 1);
            sel.pop_back();
        }
    };
    walk(1);
    return count;
}

// --------------------------- column distances -------------------------------

int column_distance(const Generator& g, int j, std::uint64_t budget) {
    const CodeParams& p = g.params;
    const FieldSpec& F = g.field();
    const std::uint64_t q = F.q();
    std::uint64_t space = 1;
    for (int t = 0; t < p.k * (j + 1); ++t) {
        space *= q;
        if (space > budget) throw std::length_error("column-distance search space over budget");
    }

    // Message digits m[t*k + i]; m_0 != 0 required.
    std::vector<Fel> m(static_cast<std::size_t>(p.k) * (j + 1), 0);
    int best = -1;
    const int coeff_count = static_cast<int>(g.coeffs.size());
    while (true) {
        // advance odometer
        std::size_t pos = 0;
        while (pos < m.size()) {
            if (++m[pos] < q) break;
            m[pos] = 0;
            ++pos;
        }
        if (pos == m.size()) break;  // wrapped: all messages seen
        bool m0_zero = true;
        for (int i = 0; i < p.k && m0_zero; ++i)
            if (m[i]) m0_zero = false;
        if (m0_zero) continue;

        int weight = 0;
        for (int t = 0; t <= j; ++t) {
            for (int row = 0; row < p.n; ++row) {
                Fel v = 0;
                for (int d = 0; d < coeff_count && d <= t; ++d)
                    for (int i = 0; i < p.k; ++i) {
                        Fel mm = m[static_cast<std::size_t>(t - d) * p.k + i];
                        if (mm) v = F.add(v, F.mul(g.coeffs[d].at(row, i), mm));
                    }
                if (v) ++weight;
            }
        }
        if (best < 0 || weight < best) best = weight;
    }
    return best;
}

DistanceProfile distance_profile(const Generator& g, int upto_j, std::uint64_t budget) {
    DistanceProfile out;
    for (int j = 0; j <= upto_j; ++j) out.d.push_back(column_distance(g, j, budget));
    return out;
}

bool DistanceProfile::maximal(const CodeParams& p) const {
    for (std::size_t j = 0; j < d.size(); ++j)
        if (d[j] != (p.n - p.k) * (static_cast<int>(j) + 1) + 1) return false;
    return true;
}

// ------------------------------ primeness ----------------------------------

bool is_noncatastrophic(const Generator& g) {
    return minor_gcd_is_constant(g.field(), g.coeffs, g.params.n, g.params.k, g.params.k);
}

bool is_left_prime(const ParityCheck& h) {
    // Work on H^T so the helper's row/column roles line up.
    std::vector<GfMatrix> t;
    t.reserve(h.coeffs.size());
    for (const auto& c : h.coeffs) t.push_back(c.transposed());
    return minor_gcd_is_constant(h.field(), t, h.params.n, h.params.n - h.params.k,
                                 h.params.n - h.params.k);
}

// ------------------------------- reversal -----------------------------------

ParityCheck reverse_parity(const ParityCheck& h) {
    auto deg = h.row_degrees();
    std::vector<GfMatrix> out(h.coeffs.size(), GfMatrix(h.field(), h.params.n - h.params.k, h.params.n));
    for (int i = 0; i < h.params.n - h.params.k; ++i)
        for (int d = 0; d <= deg[i]; ++d)
            for (int j = 0; j < h.params.n; ++j)
                out[d].at(i, j) = h.coeffs[deg[i] - d].at(i, j);
    return ParityCheck(h.params, std::move(out));
}

Generator reverse_code(const Generator& g) {
    auto deg = g.column_degrees();
    std::vector<GfMatrix> out(g.coeffs.size(), GfMatrix(g.field(), g.params.n, g.params.k));
    for (int j = 0; j < g.params.k; ++j)
        for (int d = 0; d <= deg[j]; ++d)
            for (int i = 0; i < g.params.n; ++i) out[d].at(i, j) = g.coeffs[deg[j] - d].at(i, j);
    return Generator(g.params, std::move(out));
}

// -------------------------------- duality -----------------------------------

Generator dual_generator(const ParityCheck& h) {
    CodeParams dual(h.params.n, h.params.n - h.params.k, h.params.delta);
    std::vector<GfMatrix> out;
    out.reserve(h.coeffs.size());
    for (const auto& c : h.coeffs) out.push_back(c.transposed());
    return Generator(dual, std::move(out));
}

ParityCheck dual_parity(const Generator& g) {
    CodeParams dual(g.params.n, g.params.n - g.params.k, g.params.delta);
    std::vector<GfMatrix> out;
    out.reserve(g.coeffs.size());
    for (const auto& c : g.coeffs) out.push_back(c.transposed());
    return ParityCheck(dual, std::move(out));
}

// ----------------------------- serialization --------------------------------

namespace {

nlohmann::ordered_json coeffs_to_json(const std::vector<GfMatrix>& coeffs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : coeffs) {
        nlohmann::ordered_json m = nlohmann::ordered_json::array();
        for (int i = 0; i < c.rows(); ++i) {
            nlohmann::ordered_json row = nlohmann::ordered_json::array();
            for (int j = 0; j < c.cols(); ++j) row.push_back(c.at(i, j));
            m.push_back(std::move(row));
        }
        arr.push_back(std::move(m));
    }
    return arr;
}

nlohmann::ordered_json header_json(const FieldSpec& F, const CodeParams& p, const char* kind) {
    nlohmann::ordered_json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["params"] = {{"n", p.n}, {"k", p.k}, {"delta", p.delta}};
    j["kind"] = kind;
    return j;
}

std::vector<GfMatrix> coeffs_from_json(const FieldSpec& F, const nlohmann::json& arr, int rows,
                                       int cols) {
    if (!arr.is_array() || arr.empty()) throw std::invalid_argument("coeffs must be a non-empty array");
    std::vector<GfMatrix> out;
    for (const auto& mj : arr) {
        if (!mj.is_array() || static_cast<int>(mj.size()) != rows)
            throw std::invalid_argument("coefficient matrix has wrong row count");
        GfMatrix m(F, rows, cols);
        for (int i = 0; i < rows; ++i) {
            const auto& rj = mj.at(i);
            if (!rj.is_array() || static_cast<int>(rj.size()) != cols)
                throw std::invalid_argument("coefficient matrix has wrong column count");
            for (int j = 0; j < cols; ++j) {
                std::int64_t v = rj.at(j).get<std::int64_t>();
                if (v < 0 || v >= F.q())
                    throw std::invalid_argument("matrix entry outside the field");
                m.at(i, j) = static_cast<Fel>(v);
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

std::pair<FieldSpec, CodeParams> parse_header(const nlohmann::json& j) {
    FieldSpec F = FieldSpec::make(j.at("p").get<std::uint32_t>(), j.at("m").get<std::uint32_t>());
    const auto& pj = j.at("params");
    CodeParams p(pj.at("n").get<int>(), pj.at("k").get<int>(), pj.at("delta").get<int>());
    return {std::move(F), p};
}

}  // namespace

nlohmann::ordered_json to_json(const ParityCheck& h) {
    auto j = header_json(h.field(), h.params, "parity_check");
    j["coeffs"] = coeffs_to_json(h.coeffs);
    return j;
}

nlohmann::ordered_json to_json(const Generator& g) {
    auto j = header_json(g.field(), g.params, "generator");
    j["coeffs"] = coeffs_to_json(g.coeffs);
    return j;
}

ParityCheck parity_from_json(const nlohmann::json& j) {
    if (j.at("kind").get<std::string>() != "parity_check")
        throw std::invalid_argument("expected kind \"parity_check\"");
    auto [F, p] = parse_header(j);
    return ParityCheck(p, coeffs_from_json(F, j.at("coeffs"), p.n - p.k, p.n));
}

Generator generator_from_json(const nlohmann::json& j) {
    if (j.at("kind").get<std::string>() != "generator")
        throw std::invalid_argument("expected kind \"generator\"");
    auto [F, p] = parse_header(j);
    return Generator(p, coeffs_from_json(F, j.at("coeffs"), p.n, p.k));
}

void load_code_file(const std::string& path, std::optional<ParityCheck>& h,
                    std::optional<Generator>& g) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j;
    in >> j;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "parity_check")
        h = parity_from_json(j);
    else if (kind == "generator")
        g = generator_from_json(j);
    else
        throw std::invalid_argument("unknown kind \"" + kind + "\"");
}

void save_code_file(const std::string& path, const nlohmann::ordered_json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace ccodes
