#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ccodes/code.hpp"

#include <nlohmann/json.hpp>

namespace ccodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt binomial(long n, long k);  // 0 when k < 0 or k > n

// Smallest prime power q with q > x (strict) or q >= x (non-strict).
std::uint64_t next_prime_power(const BigInt& x, bool strict);
bool is_prime_power_u64(std::uint64_t q);

// ---------------------------------------------------------------------------
// Field-size bounds.  Each returns the raw formula value; admissibility
// (the smallest usable prime power) is layered on top in BoundsReport.
// ---------------------------------------------------------------------------

// Counting bounds sufficient for MDP existence.  Sufficient condition is
// strict: a field with q > value works.
struct MdpCountBounds {
    BigInt m1, m2, m3;
};
MdpCountBounds bound_M(const CodeParams& p);

// Counting bounds sufficient for complete-MDP existence; requires
// (n-k) | delta.  Throws std::invalid_argument otherwise.
struct CompleteCountBounds {
    BigInt n1, n2;
};
CompleteCountBounds bound_N(const CodeParams& p);

// Necessary bound via the worst single entry of the greedy construction:
// requires delta < k or delta < n-k (the dual case uses the dual parameters).
// Sufficient with q > value.
BigInt bound_S(const CodeParams& p);

// One-minor bound: number of valid full-size minors through a fixed last
// column, C((L+1)n - 1, (L+1)(n-k) - 1); the dual form is used when
// delta < n-k <= k would make it smaller per the construction route.
BigInt bound_one(const CodeParams& p);

// Memoryless bound for L = 0 (delta < min{k, n-k}):
// min{C(n-1, n-k-1), C(n-1, k-1)}.
BigInt bound_L0(const CodeParams& p);

// Superregular-matrix route: gamma = (L+1)(n-1) when (n-k) | delta, else
// (L+1)(n-1) + k + r - 1, minimized over the code and its dual.  value is
// B_gamma = ((1/gamma) C(2(gamma-1), gamma-1) + C(gamma-1, floor((gamma-1)/2))) / 2,
// and q > value suffices.
struct GammaBound {
    int gamma = 0;
    BigInt value;
};
GammaBound bound_Bgamma(const CodeParams& p);

// Conjectured sufficient size 2^(gamma-2) for the same gamma (needs
// gamma >= 5); unproven.  Admissibility is taken strictly, matching the
// worked comparisons.
std::optional<GammaBound> bound_conjecture(const CodeParams& p);

// Known exact minimal field sizes admitting a gamma x gamma superregular
// lower-triangular Toeplitz matrix, for gamma in [3, 10].  The gamma = 10
// entry (127) is only an upper bound.  Non-strict: the value itself works.
struct SuperregularTableEntry {
    int gamma = 0;
    std::uint64_t min_field = 0;
    bool exact = true;
};
std::optional<SuperregularTableEntry> superregular_table(int gamma);

// (2^(m-1), 2^(m-1)-1, 2) codes: complete MDP exists over GF(q) iff
// q >= 2^m (m > 2).  Non-strict.
std::optional<BigInt> bound_two_power(const CodeParams& p);

// ---------------------------------------------------------------------------
// Reporting
// ---------------------------------------------------------------------------

struct BoundEntry {
    std::string name;       // "bound_S", "bound_one", "M1", ... "superregular_table"
    std::string target;     // "mdp", "complete", "superregular"
    BigInt raw;             // formula value
    std::uint64_t admissible = 0;  // smallest usable prime power
    bool strict = true;     // q > raw vs q >= raw
    bool sufficient = true; // false for purely conjectural/unproven entries
    bool via_dual = false;  // value came from the dual parameters
    std::string note;
};

struct BoundsReport {
    CodeParams params;
    std::vector<BoundEntry> entries;
    std::vector<std::string> notes;
    // Name of the smallest-admissible proven-sufficient MDP entry.
    std::string best_sufficient;
};

// All applicable bounds for the parameters, including duality-minimized
// B_gamma/conjecture/superregular-table entries and comparison notes.
BoundsReport compare_bounds(const CodeParams& p);

nlohmann::ordered_json to_json(const BoundsReport& r);
std::string render_table(const BoundsReport& r);

// ---------------------------------------------------------------------------
// Exact counts and probabilities for the closed-form families
// ---------------------------------------------------------------------------

// Exact matrix counts over GF(q) for the families with known formulas:
//   (n, 1, 1):   MDP/reverse  q(q-1)^(n+1) prod_{i=2}^{n-1}(q-i)
//   (n, n-1, 1): MDP          same count (dual family);
//                reverse = complete  (q-1)^(n+1) prod_{i=2}^{n}(q-i)
//   (2, 1, 1):   all three coincide, (q-1)^3 (q-2) matrices
// Counts are over coefficient matrices (generator pairs (g_0, g_1) with
// g_1 != 0, or the parity-check analogue); code counts divide by q-1.
struct SmallCaseCounts {
    BigInt mdp_matrices, reverse_matrices, complete_matrices;
    BigInt noncatastrophic_matrices;  // ambient denominator for conditionals
    BigInt total_matrices;
};
std::optional<SmallCaseCounts> small_case_exact(const CodeParams& p, std::uint64_t q);

// Exact probability formulas, t = 1/q:
//   (2, 1, 1):  unconditional (1-t)^2 (1-2t) / (1+t),
//               conditional   (1-t)(1-2t) / (1+t)
//   (n, 1, 1):  unconditional (1-t^n)^{-1} (1-t)^{n+1} prod_{i=2}^{n-1}(1-it),
//               conditional   ((1-t^n)(1-t^{n-1}))^{-1} (1-t)^{n+1} prod_{i=2}^{n-1}(1-it)
struct FamilyProbability {
    BigRat unconditional;
    BigRat conditional;
};
std::optional<FamilyProbability> family_mdp_probability(const CodeParams& p, std::uint64_t q);

// Lower bounds on the probability that a random code with generic row
// degrees is MDP (or complete MDP) over GF(q), t = 1/q:
//   unconditional: 1 - D t          (valid as stated)
//   conditional:   1 - D t / (1 - t^k)   [denominator approximate: an
//                  O(t^{k+1}) correction of the non-catastrophic mass is
//                  dropped]
// with D the smallest applicable counting bound.  Applicable when q > D.
struct ProbabilityLowerBound {
    std::string source;  // which counting bound supplied D
    BigInt d;
    BigRat unconditional;
    BigRat conditional_approx;
    bool applicable = false;  // q > d
    std::string note;
};
std::vector<ProbabilityLowerBound> probability_lower_bounds(const CodeParams& p, std::uint64_t q,
                                                            bool complete = false);

}  // namespace ccodes
