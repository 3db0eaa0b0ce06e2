#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccodes/bounds.hpp"
#include "ccodes/verify.hpp"

namespace ccodes {

// splitmix64 step; the whole toolkit derives per-sample generators as
// mix(seed, sample_index) so results are byte-identical for any thread count.
std::uint64_t splitmix64(std::uint64_t& state);

class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t next();
    // Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound);
    Fel element(const FieldSpec& f);           // uniform over GF(q)
    Fel nonzero_element(const FieldSpec& f);   // uniform over GF(q) \ {0}

private:
    std::uint64_t state_;
};

struct SearchConfig {
    std::uint64_t seed = 1;
    int threads = 1;           // <= 0 means: use CCODES_THREADS or 1
    std::uint64_t max_tries = 100'000;
    std::uint64_t budget = 100'000'000;  // enumeration size guard
    std::uint64_t backtrack_budget = 0;  // greedy
};

int resolve_threads(int requested);

enum class CodeProperty { Mdp, ReverseMdp, CompleteMdp };
std::string property_name(CodeProperty p);

// ---------------------------------------------------------------------------
// Exhaustive enumeration (unit-memory families k = 1 and k = n-1, delta = 1)
// ---------------------------------------------------------------------------

struct EnumerationResult {
    CodeParams params;
    std::uint64_t q = 0;
    std::uint64_t total_matrices = 0;
    std::uint64_t noncatastrophic_matrices = 0;
    std::uint64_t mdp_matrices = 0;
    std::uint64_t reverse_matrices = 0;
    std::uint64_t complete_matrices = 0;
    // Matrix counts divided by q-1 (scalar multiples generate equal codes;
    // each class has exactly q-1 representatives in these families).
    std::uint64_t mdp_codes = 0;
    std::uint64_t reverse_codes = 0;
    std::uint64_t complete_codes = 0;
    // Instances violating complete => reverse => mdp (always 0).
    std::uint64_t hierarchy_violations = 0;
    // Instances where the mdp and complete verdicts differ (of interest for
    // (2,1,1), where the two notions coincide).
    std::uint64_t mdp_complete_disagreements = 0;
    std::optional<nlohmann::ordered_json> first_mdp_witness;
};

// Enumerates every coefficient assignment of the family and counts the three
// properties.  Supported parameters: delta == 1 with k == 1 or k == n-1.
// Throws std::invalid_argument otherwise, std::length_error over budget.
EnumerationResult enumerate_and_count(const CodeParams& p, std::uint64_t q,
                                      const SearchConfig& cfg = {});

// ---------------------------------------------------------------------------
// Random search
// ---------------------------------------------------------------------------

struct RandomSearchResult {
    bool found = false;
    std::uint64_t tries = 0;        // samples examined (<= max_tries)
    std::uint64_t found_index = 0;  // sample index of the witness
    std::optional<ParityCheck> witness;
};

// Samples parity checks with generic row degrees in the systematic shape
// described below under sample_parity, checks the property, and returns the
// smallest sample index that succeeds.  Deterministic in (seed, max_tries)
// for any thread count.
RandomSearchResult random_search(const CodeParams& p, std::uint64_t q, CodeProperty property,
                                 const SearchConfig& cfg);

// One random parity check with generic row degrees, guaranteed row proper and
// of degree exactly delta: H_nu carries an identity block on its first
// rr = delta - (n-k)(nu-1) rows (zeros in its other leading-column entries
// keep the leading row matrix block triangular, remaining rows zero),
// H_{nu-1} completes the identity on the remaining rows, and every entry not
// pinned by that pattern is uniform.
ParityCheck sample_parity(const CodeParams& p, const FieldSpec& F, Rng& rng);

// ---------------------------------------------------------------------------
// Greedy construction (delta < k, or delta < n-k via the dual parameters)
// ---------------------------------------------------------------------------

struct GreedyResult {
    bool success = false;
    std::optional<ParityCheck> parity;  // for delta < n-k this is the dual's
    bool dual_realization = false;      // parity describes the (n, n-k, delta) dual
    std::uint64_t backtracks = 0;
    std::uint64_t exclusions_worst_entry = 0;  // max candidate exclusions seen
    std::string message;
};

// Fills the parity-check coefficients entry by entry in sliding-stack row
// order, at each entry excluding the values that would zero a valid minor
// completed by that entry, and picking the smallest surviving field element.
// With q > bound_S no entry ever runs out of values and no backtracking
// occurs; the backtrack budget exists for experiments below the bound.
GreedyResult greedy_construct(const CodeParams& p, std::uint64_t q, const SearchConfig& cfg = {});

// ---------------------------------------------------------------------------
// Probability estimation
// ---------------------------------------------------------------------------

struct ProbabilityEstimate {
    CodeParams params;
    std::uint64_t q = 0;
    CodeProperty property = CodeProperty::Mdp;
    bool exhaustive = false;
    std::uint64_t samples = 0;      // total (or family size when exhaustive)
    std::uint64_t hits = 0;
    std::uint64_t noncatastrophic = 0;
    std::uint64_t hits_noncatastrophic = 0;
    double unconditional = 0.0;
    double conditional = 0.0;
    std::optional<BigRat> exact_unconditional;  // closed form, when known
    std::optional<BigRat> exact_conditional;
    std::vector<ProbabilityLowerBound> lower_bounds;
    std::uint64_t seed = 0;
};

// samples == 0 requests exhaustive evaluation (closed-form families only);
// otherwise Monte Carlo over sample_parity draws.  Deterministic in seed.
ProbabilityEstimate estimate_probability(const CodeParams& p, std::uint64_t q,
                                         CodeProperty property, std::uint64_t samples,
                                         const SearchConfig& cfg = {});

// ---------------------------------------------------------------------------
// Superregular search
// ---------------------------------------------------------------------------

struct SuperregularSearchResult {
    int gamma = 0;
    bool found = false;
    std::uint64_t q = 0;               // field of the witness / last field tried
    std::vector<Fel> witness;          // a_1..a_gamma
    std::uint64_t candidates_tried = 0;
};

// Depth-first search for a superregular lower-triangular Toeplitz matrix over
// GF(q), with a_1 normalized to 1 (scaling preserves superregularity) and
// minors checked as soon as their deepest entry is assigned.
SuperregularSearchResult superregular_search(int gamma, std::uint64_t q);

// Smallest field size (iterating prime powers upward from 2) admitting a
// gamma x gamma superregular triangular Toeplitz matrix.
SuperregularSearchResult superregular_min_field(int gamma, std::uint64_t q_limit = 1u << 20);

nlohmann::ordered_json to_json(const EnumerationResult& r);
nlohmann::ordered_json to_json(const RandomSearchResult& r);
nlohmann::ordered_json to_json(const GreedyResult& r);
nlohmann::ordered_json to_json(const ProbabilityEstimate& r);
nlohmann::ordered_json to_json(const SuperregularSearchResult& r);

}  // namespace ccodes
