#include "ccodes/explore.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

namespace ccodes {

// ------------------------------- randomness ---------------------------------

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    // Decorrelate (seed, stream) pairs before use.
    state_ = seed ^ 0x632be59bd9b4e019ULL;
    splitmix64(state_);
    state_ ^= stream * 0x9e3779b97f4a7c15ULL;
    splitmix64(state_);
}

std::uint64_t Rng::next() { return splitmix64(state_); }

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling keeps draws unbiased for every bound.
    const std::uint64_t limit = bound * (UINT64_MAX / bound);
    std::uint64_t v;
    do {
        v = next();
    } while (v >= limit);
    return v % bound;
}

Fel Rng::element(const FieldSpec& f) { return static_cast<Fel>(below(f.q())); }

Fel Rng::nonzero_element(const FieldSpec& f) { return static_cast<Fel>(1 + below(f.q() - 1)); }

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("CCODES_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

std::string property_name(CodeProperty p) {
    switch (p) {
        case CodeProperty::Mdp: return "mdp";
        case CodeProperty::ReverseMdp: return "reverse";
        case CodeProperty::CompleteMdp: return "complete";
    }
    return "?";
}

// ---------------------------- exhaustive counting ----------------------------

namespace {

std::vector<Fel> decode_digits(std::uint64_t idx, std::uint64_t q, int len) {
    std::vector<Fel> out(len);
    for (int i = 0; i < len; ++i) {
        out[i] = static_cast<Fel>(idx % q);
        idx /= q;
    }
    return out;
}

GfMatrix column_matrix(const FieldSpec& F, const std::vector<Fel>& v) {
    GfMatrix m(F, static_cast<int>(v.size()), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(static_cast<int>(i), 0) = v[i];
    return m;
}

GfMatrix row_matrix(const FieldSpec& F, const std::vector<Fel>& v) {
    GfMatrix m(F, 1, static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) m.at(0, static_cast<int>(i)) = v[i];
    return m;
}

}  // namespace

EnumerationResult enumerate_and_count(const CodeParams& p, std::uint64_t q,
                                      const SearchConfig& cfg) {
    if (p.delta != 1 || (p.k != 1 && p.k != p.n - 1))
        throw std::invalid_argument(
            "exhaustive enumeration covers the unit-degree rate-1/n and (n-1)/n families");
    const FieldSpec F = FieldSpec::make_q(static_cast<std::uint32_t>(q));
    std::uint64_t qn = 1;
    for (int i = 0; i < p.n; ++i) {
        qn *= q;
        if (qn > cfg.budget) throw std::length_error("enumeration space over budget");
    }
    const std::uint64_t total = qn * (qn - 1);
    if (total / (qn - 1) != qn || total > cfg.budget)
        throw std::length_error("enumeration space over budget");

    EnumerationResult res;
    res.params = p;
    res.q = q;
    res.total_matrices = total;

    const bool generator_side = (p.k == 1);
    for (std::uint64_t i0 = 0; i0 < qn; ++i0) {
        const std::vector<Fel> c0 = decode_digits(i0, q, p.n);
        for (std::uint64_t i1 = 1; i1 < qn; ++i1) {
            const std::vector<Fel> c1 = decode_digits(i1, q, p.n);
            bool mdp = false, rev = false, com = false, noncat = false;
            if (generator_side) {
                Generator g(p, {column_matrix(F, c0), column_matrix(F, c1)});
                noncat = is_noncatastrophic(g);
                mdp = is_mdp(g).holds;
                if (mdp) rev = is_reverse_mdp(g).holds;
                if (p.n == 2) {
                    // The sibling parity check (c1(z), -c0(z)) exists only for
                    // non-degenerate inputs; catastrophic pairs stay "false".
                    if (noncat) {
                        GfMatrix h0(F, 1, 2), h1(F, 1, 2);
                        h0.at(0, 0) = c0[1];
                        h0.at(0, 1) = F.neg(c0[0]);
                        h1.at(0, 0) = c1[1];
                        h1.at(0, 1) = F.neg(c1[0]);
                        ParityCheck h(p, {std::move(h0), std::move(h1)});
                        com = is_complete_mdp(h).holds;
                    }
                }
            } else {
                // All three verdicts are computed independently so the
                // hierarchy tallies below are genuine observations.
                ParityCheck h(p, {row_matrix(F, c0), row_matrix(F, c1)});
                noncat = is_left_prime(h);
                mdp = is_mdp(h).holds;
                rev = is_reverse_mdp(h).holds;
                com = is_complete_mdp(h).holds;
            }
            if (noncat) ++res.noncatastrophic_matrices;
            if (mdp) ++res.mdp_matrices;
            if (rev) ++res.reverse_matrices;
            if (com) ++res.complete_matrices;
            if ((com && !rev) || (rev && !mdp)) ++res.hierarchy_violations;
            if (mdp != com) ++res.mdp_complete_disagreements;
            if (mdp && !res.first_mdp_witness) {
                if (generator_side) {
                    Generator g(p, {column_matrix(F, c0), column_matrix(F, c1)});
                    res.first_mdp_witness = to_json(g);
                } else {
                    ParityCheck h(p, {row_matrix(F, c0), row_matrix(F, c1)});
                    res.first_mdp_witness = to_json(h);
                }
            }
        }
    }

    const std::uint64_t classes = q - 1;
    auto to_codes = [&](std::uint64_t matrices) {
        if (matrices % classes != 0)
            throw std::logic_error("matrix count not divisible by the scalar class size");
        return matrices / classes;
    };
    res.mdp_codes = to_codes(res.mdp_matrices);
    res.reverse_codes = to_codes(res.reverse_matrices);
    res.complete_codes = to_codes(res.complete_matrices);
    return res;
}

// ------------------------------ random search --------------------------------

ParityCheck sample_parity(const CodeParams& p, const FieldSpec& F, Rng& rng) {
    const int b = p.n - p.k, nu = p.nu();
    if (p.delta == 0) {
        // Plain full-rank coefficient matrix.
        while (true) {
            GfMatrix h0(F, b, p.n);
            for (int i = 0; i < b; ++i)
                for (int j = 0; j < p.n; ++j) h0.at(i, j) = rng.element(F);
            if (rank(h0) == b) return ParityCheck(p, {std::move(h0)});
        }
    }
    const int rr = p.delta - b * (nu - 1);  // rows of degree nu
    std::vector<GfMatrix> cs(nu + 1, GfMatrix(F, b, p.n));
    for (int d = 0; d <= nu - 2; ++d)
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < p.n; ++j) cs[d].at(i, j) = rng.element(F);
    // H_{nu-1} = [[*, *, *], [*, I, *]], H_nu = [[I, 0, *], [0, 0, 0]] with
    // column split rr | b-rr | k.  The leading row matrix is then
    // [[I, 0, *], [*, I, *]], so degrees and row-properness come for free;
    // every entry that pattern does not pin stays uniform.
    for (int i = 0; i < rr; ++i)
        for (int j = 0; j < p.n; ++j) cs[nu - 1].at(i, j) = rng.element(F);
    for (int i = rr; i < b; ++i) {
        for (int j = 0; j < rr; ++j) cs[nu - 1].at(i, j) = rng.element(F);
        cs[nu - 1].at(i, i) = 1;
        for (int j = b; j < p.n; ++j) cs[nu - 1].at(i, j) = rng.element(F);
    }
    for (int i = 0; i < rr; ++i) {
        cs[nu].at(i, i) = 1;
        for (int j = b; j < p.n; ++j) cs[nu].at(i, j) = rng.element(F);
    }
    return ParityCheck(p, std::move(cs));
}

namespace {

bool check_property(const ParityCheck& h, CodeProperty property) {
    switch (property) {
        case CodeProperty::Mdp: return is_mdp(h).holds;
        case CodeProperty::ReverseMdp: return is_reverse_mdp(h).holds;
        case CodeProperty::CompleteMdp: return is_complete_mdp(h).holds;
    }
    return false;
}

}  // namespace

RandomSearchResult random_search(const CodeParams& p, std::uint64_t q, CodeProperty property,
                                 const SearchConfig& cfg) {
    const FieldSpec F = FieldSpec::make_q(static_cast<std::uint32_t>(q));
    const int threads = resolve_threads(cfg.threads);
    RandomSearchResult res;

    const std::uint64_t chunk = static_cast<std::uint64_t>(threads) * 16;
    for (std::uint64_t base = 0; base < cfg.max_tries && !res.found; base += chunk) {
        const std::uint64_t end = std::min(cfg.max_tries, base + chunk);
        std::atomic<std::uint64_t> best{UINT64_MAX};
        auto worker = [&](int t) {
            for (std::uint64_t idx = base + t; idx < end; idx += threads) {
                Rng rng(cfg.seed, idx);
                ParityCheck h = sample_parity(p, F, rng);
                if (check_property(h, property)) {
                    std::uint64_t cur = best.load();
                    while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                    }
                }
            }
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
            for (auto& th : pool) th.join();
        }
        if (best.load() != UINT64_MAX) {
            res.found = true;
            res.found_index = best.load();
            res.tries = res.found_index + 1;
            Rng rng(cfg.seed, res.found_index);
            res.witness = sample_parity(p, F, rng);
        }
    }
    if (!res.found) res.tries = cfg.max_tries;
    return res;
}

// ---------------------------- greedy construction ----------------------------

namespace {

struct GreedyState {
    CodeParams p;
    FieldSpec F;
    int b, L, nu, rows, cols;
    GfMatrix work;  // sliding stack under construction

    GreedyState(const CodeParams& params, const FieldSpec& field)
        : p(params),
          F(field),
          b(params.n - params.k),
          L(params.L()),
          nu(params.nu()),
          rows((L + 1) * b),
          cols((L + 1) * params.n),
          work(field, rows, cols) {}

    // Writes coefficient H_s[j][i] (0-based) at every block position.
    void assign(int s, int j, int i, Fel v) {
        for (int sb = s; sb <= L; ++sb) work.at(sb * b + j, (sb - s) * p.n + i) = v;
    }

    Fel det_of(const std::vector<int>& rsel, const std::vector<int>& csel) const {
        return det(work.submatrix(rsel, csel));
    }
};

// Enumerates the column selections of the y-row minors that contain column i
// (1-based) and no column in (i, n]: the minors completed by entry (y, i).
void for_each_minor(const GreedyState& st, int y, int i,
                    const std::function<void(const std::vector<int>&)>& fn) {
    const int s = (y - 1) / st.b;  // block of row y
    const int n = st.p.n;
    std::vector<int> sel;
    std::function<void(int, int, bool)> gen = [&](int pos, int min_col, bool placed) {
        if (pos > y) {
            if (placed) fn(sel);
            return;
        }
        // Position bound: at pos = s'*b with s' <= s the column may not pass
        // s'*n; everywhere else the cap is the row-y support end.
        int cap = (s + 1) * n;
        if (pos % st.b == 0) {
            const int sp = pos / st.b;
            if (sp <= s) cap = std::min(cap, sp * n);
        }
        if (!placed) {
            for (int c = min_col; c <= std::min(i, cap); ++c) {
                sel.push_back(c);
                gen(pos + 1, c + 1, c == i);
                sel.pop_back();
            }
        } else {
            for (int c = std::max(min_col, n + 1); c <= cap; ++c) {
                if ((s + 1) * n - c < y - pos) break;  // not enough columns left
                sel.push_back(c);
                gen(pos + 1, c + 1, true);
                sel.pop_back();
            }
        }
    };
    gen(1, 1, false);
}

GreedyResult greedy_direct(const CodeParams& p, std::uint64_t q, const SearchConfig& cfg) {
    const FieldSpec F = FieldSpec::make_q(static_cast<std::uint32_t>(q));
    GreedyState st(p, F);
    GreedyResult res;

    struct Entry {
        int y, s, j, i;  // y 1-based stack row; (s, j, i) 0-based coefficient slot
    };
    std::vector<Entry> entries;
    for (int y = 1; y <= st.rows; ++y) {
        const int s = (y - 1) / st.b, j = (y - 1) % st.b;
        for (int i = 0; i < p.n; ++i) entries.push_back({y, s, j, i});
    }

    std::vector<Fel> start(entries.size(), 0);
    std::vector<Fel> chosen(entries.size(), 0);
    std::vector<int> rsel_full, rsel_cof;
    std::size_t idx = 0;
    while (idx < entries.size()) {
        const Entry& e = entries[idx];
        std::vector<char> excluded(F.q(), 0);
        std::uint64_t excluding_minors = 0;
        bool invariant_broken = false;
        st.assign(e.s, e.j, e.i, 0);  // evaluate with the entry set to zero
        for_each_minor(st, e.y, e.i + 1, [&](const std::vector<int>& sel) {
            rsel_full.clear();
            for (int r = 0; r < e.y; ++r) rsel_full.push_back(r);
            std::vector<int> csel;
            csel.reserve(sel.size());
            for (int c : sel) csel.push_back(c - 1);
            const Fel bval = st.det_of(rsel_full, csel);
            // Cofactor of the entry: drop row y and column i.
            rsel_cof.clear();
            for (int r = 0; r + 1 < e.y; ++r) rsel_cof.push_back(r);
            std::vector<int> csel_cof;
            int pos_i = 0;
            for (std::size_t t = 0; t < csel.size(); ++t) {
                if (csel[t] == e.i)
                    pos_i = static_cast<int>(t);
                else
                    csel_cof.push_back(csel[t]);
            }
            Fel aval = e.y == 1 ? 1 : st.det_of(rsel_cof, csel_cof);
            if (((e.y - 1) + pos_i) % 2 != 0) aval = F.neg(aval);
            if (aval != 0) {
                ++excluding_minors;
                excluded[F.neg(F.mul(bval, F.inv(aval)))] = 1;
            } else if (bval == 0) {
                invariant_broken = true;  // the theory rules this out
            }
        });
        res.exclusions_worst_entry = std::max(res.exclusions_worst_entry, excluding_minors);

        Fel pick = 0;
        bool found = false;
        if (!invariant_broken) {
            for (Fel v = start[idx]; v < F.q(); ++v)
                if (!excluded[v]) {
                    pick = v;
                    found = true;
                    break;
                }
        }
        if (found) {
            chosen[idx] = pick;
            st.assign(e.s, e.j, e.i, pick);
            ++idx;
            if (idx < entries.size()) start[idx] = 0;
        } else {
            if (idx == 0 || res.backtracks >= cfg.backtrack_budget) {
                res.success = false;
                res.message = invariant_broken
                                  ? "internal invariant violated: a settled minor vanished"
                                  : "ran out of field elements; field too small for this greedy";
                return res;
            }
            ++res.backtracks;
            --idx;
            const Entry& pe = entries[idx];
            st.assign(pe.s, pe.j, pe.i, 0);
            start[idx] = chosen[idx] + 1;
        }
    }

    // Collect coefficients; for r != 0 the top coefficient sits outside the
    // stack and only serves row-properness: extend the degree-(nu-1) leading
    // rows by the first standard basis vectors that keep the set independent.
    std::vector<GfMatrix> cs(st.nu + 1, GfMatrix(F, st.b, p.n));
    for (int d = 0; d <= st.L; ++d)
        for (int i = 0; i < st.b; ++i)
            for (int j = 0; j < p.n; ++j) cs[d].at(i, j) = st.work.at(d * st.b + i, j);
    if (p.r() != 0) {
        const int rr = p.r();
        IncrementalEliminator elim(F, p.n);
        for (int i = rr; i < st.b; ++i)
            if (!elim.push(cs[st.nu - 1].row(i)))
                throw std::logic_error("greedy stack lost row independence");
        for (int i = 0; i < rr; ++i) {
            bool placed = false;
            for (int t = 0; t < p.n && !placed; ++t) {
                std::vector<Fel> unit(p.n, 0);
                unit[t] = 1;
                if (elim.push(unit)) {
                    cs[st.nu].at(i, t) = 1;
                    placed = true;
                }
            }
            if (!placed) throw std::logic_error("could not complete the leading matrix");
        }
    }
    res.success = true;
    res.parity = ParityCheck(p, std::move(cs));
    return res;
}

}  // namespace

GreedyResult greedy_construct(const CodeParams& p, std::uint64_t q, const SearchConfig& cfg) {
    const bool direct = p.delta < p.k;
    const bool dual = p.delta < p.n - p.k;
    if (!direct && !dual)
        throw std::invalid_argument("greedy construction requires delta < k or delta < n-k");
    // When both routes apply the worst-entry exclusion counts are
    // C(n-1, n-k-1) directly and C(n-1, k-1) through the dual, so build on
    // the side with fewer parity rows to stay within the field-size
    // guarantee of the exclusion bound.
    if (direct && (!dual || p.k >= p.n - p.k)) return greedy_direct(p, q, cfg);
    GreedyResult res = greedy_direct(CodeParams(p.n, p.n - p.k, p.delta), q, cfg);
    res.dual_realization = true;
    if (res.success)
        res.message =
            "parity check realizes the (n, n-k, delta) dual; its transpose generates the "
            "requested code";
    return res;
}

// --------------------------- probability estimation --------------------------

ProbabilityEstimate estimate_probability(const CodeParams& p, std::uint64_t q,
                                         CodeProperty property, std::uint64_t samples,
                                         const SearchConfig& cfg) {
    ProbabilityEstimate res;
    res.params = p;
    res.q = q;
    res.property = property;
    res.seed = cfg.seed;
    res.lower_bounds = probability_lower_bounds(p, q, property == CodeProperty::CompleteMdp);

    const bool family = (p.delta == 1 && (p.k == 1 || p.k == p.n - 1));
    if (samples == 0) {
        if (!family)
            throw std::invalid_argument(
                "exhaustive probability needs the unit-degree rate-1/n or (n-1)/n family");
        EnumerationResult e = enumerate_and_count(p, q, cfg);
        res.exhaustive = true;
        res.samples = e.total_matrices;
        res.noncatastrophic = e.noncatastrophic_matrices;
        switch (property) {
            case CodeProperty::Mdp: res.hits = e.mdp_matrices; break;
            case CodeProperty::ReverseMdp: res.hits = e.reverse_matrices; break;
            case CodeProperty::CompleteMdp: res.hits = e.complete_matrices; break;
        }
        res.hits_noncatastrophic = res.hits;  // all three imply non-catastrophic here
        res.exact_unconditional = BigRat(res.hits, res.samples);
        res.exact_conditional = BigRat(res.hits, res.noncatastrophic);
        res.unconditional = static_cast<double>(res.hits) / static_cast<double>(res.samples);
        res.conditional =
            static_cast<double>(res.hits) / static_cast<double>(res.noncatastrophic);
        return res;
    }

    const FieldSpec F = FieldSpec::make_q(static_cast<std::uint32_t>(q));
    const int threads = resolve_threads(cfg.threads);
    res.samples = samples;

    struct Tally {
        std::uint64_t hits = 0, noncat = 0, hits_noncat = 0;
    };
    std::vector<Tally> tallies(threads);
    auto worker = [&](int t) {
        Tally& tally = tallies[t];
        for (std::uint64_t idx = t; idx < samples; idx += threads) {
            Rng rng(cfg.seed, idx);
            bool hit = false, noncat = false;
            if (family) {
                std::vector<Fel> c0(p.n), c1(p.n);
                for (int i = 0; i < p.n; ++i) c0[i] = rng.element(F);
                bool zero = true;
                while (zero) {
                    for (int i = 0; i < p.n; ++i) {
                        c1[i] = rng.element(F);
                        if (c1[i]) zero = false;
                    }
                }
                if (p.k == 1) {
                    Generator g(p, {column_matrix(F, c0), column_matrix(F, c1)});
                    noncat = is_noncatastrophic(g);
                    switch (property) {
                        case CodeProperty::Mdp: hit = is_mdp(g).holds; break;
                        case CodeProperty::ReverseMdp: hit = is_reverse_mdp(g).holds; break;
                        case CodeProperty::CompleteMdp:
                            hit = false;
                            if (p.n == 2 && noncat) {
                                GfMatrix h0(F, 1, 2), h1(F, 1, 2);
                                h0.at(0, 0) = c0[1];
                                h0.at(0, 1) = F.neg(c0[0]);
                                h1.at(0, 0) = c1[1];
                                h1.at(0, 1) = F.neg(c1[0]);
                                hit = is_complete_mdp(ParityCheck(p, {h0, h1})).holds;
                            }
                            break;
                    }
                } else {
                    ParityCheck h(p, {row_matrix(F, c0), row_matrix(F, c1)});
                    noncat = is_left_prime(h);
                    hit = check_property(h, property);
                }
            } else {
                ParityCheck h = sample_parity(p, F, rng);
                noncat = is_left_prime(h);
                hit = check_property(h, property);
            }
            if (hit) ++tally.hits;
            if (noncat) {
                ++tally.noncat;
                if (hit) ++tally.hits_noncat;
            }
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (const auto& t : tallies) {
        res.hits += t.hits;
        res.noncatastrophic += t.noncat;
        res.hits_noncatastrophic += t.hits_noncat;
    }
    res.unconditional = static_cast<double>(res.hits) / static_cast<double>(samples);
    res.conditional = res.noncatastrophic
                          ? static_cast<double>(res.hits_noncatastrophic) /
                                static_cast<double>(res.noncatastrophic)
                          : 0.0;
    if (auto counts = small_case_exact(p, q)) {
        BigInt hits_exact;
        switch (property) {
            case CodeProperty::Mdp: hits_exact = counts->mdp_matrices; break;
            case CodeProperty::ReverseMdp: hits_exact = counts->reverse_matrices; break;
            case CodeProperty::CompleteMdp: hits_exact = counts->complete_matrices; break;
        }
        res.exact_unconditional = BigRat(hits_exact, counts->total_matrices);
        res.exact_conditional = BigRat(hits_exact, counts->noncatastrophic_matrices);
    }
    return res;
}

// ----------------------------- superregular search ---------------------------

namespace {

struct MinorPattern {
    std::vector<int> rows, cols;  // 0-based, cols[l] <= rows[l]
};

// All not-trivially-zero minor patterns grouped by the largest entry index
// they touch (depth d uses a_1..a_d and a_d itself).
std::vector<std::vector<MinorPattern>> patterns_by_depth(int gamma) {
    std::vector<std::vector<MinorPattern>> by_depth(gamma + 1);
    std::vector<int> rows, cols;
    std::function<void(int, int, int)> pick_cols;
    std::function<void(int, int)> pick_rows = [&](int start, int m) {
        if (static_cast<int>(rows.size()) == m) {
            pick_cols(0, 0, m);
            return;
        }
        for (int i = start; i < gamma; ++i) {
            rows.push_back(i);
            pick_rows(i + 1, m);
            rows.pop_back();
        }
    };
    pick_cols = [&](int start, int idx, int m) {
        if (idx == m) {
            by_depth[rows.back() - cols.front() + 1].push_back({rows, cols});
            return;
        }
        for (int j = start; j <= rows[idx]; ++j) {
            cols.push_back(j);
            pick_cols(j + 1, idx + 1, m);
            cols.pop_back();
        }
    };
    for (int m = 1; m <= gamma; ++m) pick_rows(0, m);
    return by_depth;
}

bool minor_nonzero(const FieldSpec& F, const std::vector<Fel>& a, const MinorPattern& pat) {
    const int m = static_cast<int>(pat.rows.size());
    GfMatrix sub(F, m, m);
    for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y) {
            int d = pat.rows[x] - pat.cols[y];
            sub.at(x, y) = d >= 0 ? a[d] : 0;
        }
    return det(sub) != 0;
}

}  // namespace

SuperregularSearchResult superregular_search(int gamma, std::uint64_t q) {
    if (gamma < 1) throw std::invalid_argument("gamma must be positive");
    SuperregularSearchResult res;
    res.gamma = gamma;
    res.q = q;
    const FieldSpec F = FieldSpec::make_q(static_cast<std::uint32_t>(q));
    const auto by_depth = patterns_by_depth(gamma);

    // a_1 = 1 without loss of generality: scaling the vector scales every
    // minor by a nonzero constant.
    std::vector<Fel> a(gamma, 0);
    a[0] = 1;
    std::function<bool(int)> dfs = [&](int d) -> bool {
        for (const auto& pat : by_depth[d])
            if (!minor_nonzero(F, a, pat)) return false;
        if (d == gamma) return true;
        for (Fel v = 1; v < F.q(); ++v) {
            a[d] = v;
            ++res.candidates_tried;
            if (dfs(d + 1)) return true;
        }
        a[d] = 0;
        return false;
    };
    if (dfs(1)) {
        res.found = true;
        res.witness = a;
    }
    return res;
}

SuperregularSearchResult superregular_min_field(int gamma, std::uint64_t q_limit) {
    for (std::uint64_t q = 2; q <= q_limit; ++q) {
        if (!is_prime_power_u64(q)) continue;
        SuperregularSearchResult r = superregular_search(gamma, q);
        if (r.found) return r;
    }
    SuperregularSearchResult res;
    res.gamma = gamma;
    res.q = q_limit;
    return res;
}

// ------------------------------ serialization --------------------------------

nlohmann::ordered_json to_json(const EnumerationResult& r) {
    nlohmann::ordered_json j;
    j["params"] = {{"n", r.params.n}, {"k", r.params.k}, {"delta", r.params.delta}};
    j["q"] = r.q;
    j["total_matrices"] = r.total_matrices;
    j["noncatastrophic_matrices"] = r.noncatastrophic_matrices;
    j["mdp_matrices"] = r.mdp_matrices;
    j["reverse_matrices"] = r.reverse_matrices;
    j["complete_matrices"] = r.complete_matrices;
    j["mdp_codes"] = r.mdp_codes;
    j["reverse_codes"] = r.reverse_codes;
    j["complete_codes"] = r.complete_codes;
    j["hierarchy_violations"] = r.hierarchy_violations;
    j["mdp_complete_disagreements"] = r.mdp_complete_disagreements;
    if (r.first_mdp_witness) j["first_mdp_witness"] = *r.first_mdp_witness;
    return j;
}

nlohmann::ordered_json to_json(const RandomSearchResult& r) {
    nlohmann::ordered_json j;
    j["found"] = r.found;
    j["tries"] = r.tries;
    if (r.found) {
        j["found_index"] = r.found_index;
        j["witness"] = to_json(*r.witness);
    }
    return j;
}

nlohmann::ordered_json to_json(const GreedyResult& r) {
    nlohmann::ordered_json j;
    j["success"] = r.success;
    j["backtracks"] = r.backtracks;
    j["exclusions_worst_entry"] = r.exclusions_worst_entry;
    j["dual_realization"] = r.dual_realization;
    if (!r.message.empty()) j["message"] = r.message;
    if (r.parity) j["parity_check"] = to_json(*r.parity);
    return j;
}

nlohmann::ordered_json to_json(const ProbabilityEstimate& r) {
    nlohmann::ordered_json j;
    j["params"] = {{"n", r.params.n}, {"k", r.params.k}, {"delta", r.params.delta}};
    j["q"] = r.q;
    j["property"] = property_name(r.property);
    j["exhaustive"] = r.exhaustive;
    j["samples"] = r.samples;
    j["hits"] = r.hits;
    j["noncatastrophic"] = r.noncatastrophic;
    j["hits_noncatastrophic"] = r.hits_noncatastrophic;
    j["unconditional"] = r.unconditional;
    j["conditional"] = r.conditional;
    if (r.exact_unconditional) {
        j["exact_unconditional"] = {{"num", boost::multiprecision::numerator(*r.exact_unconditional).str()},
                                    {"den", boost::multiprecision::denominator(*r.exact_unconditional).str()}};
        j["exact_conditional"] = {{"num", boost::multiprecision::numerator(*r.exact_conditional).str()},
                                  {"den", boost::multiprecision::denominator(*r.exact_conditional).str()}};
    }
    j["seed"] = r.seed;
    j["lower_bounds"] = nlohmann::ordered_json::array();
    for (const auto& b : r.lower_bounds) {
        nlohmann::ordered_json bj;
        bj["source"] = b.source;
        bj["count"] = b.d.str();
        bj["applicable"] = b.applicable;
        bj["unconditional"] = static_cast<double>(b.unconditional);
        bj["conditional_approx"] = static_cast<double>(b.conditional_approx);
        bj["note"] = b.note;
        j["lower_bounds"].push_back(std::move(bj));
    }
    return j;
}

nlohmann::ordered_json to_json(const SuperregularSearchResult& r) {
    nlohmann::ordered_json j;
    j["gamma"] = r.gamma;
    j["found"] = r.found;
    j["q"] = r.q;
    if (r.found) j["witness"] = r.witness;
    j["candidates_tried"] = r.candidates_tried;
    return j;
}

}  // namespace ccodes
