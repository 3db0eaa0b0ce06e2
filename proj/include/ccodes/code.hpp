#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccodes/gfmatrix.hpp"

#include <nlohmann/json.hpp>

namespace ccodes {

// Rate-k/n degree-delta convolutional code parameters and the derived
// quantities used throughout: L = floor(delta/k) + floor(delta/(n-k)),
// nu = ceil(delta/(n-k)), r = delta mod (n-k).
struct CodeParams {
    int n = 0, k = 0, delta = 0;

    CodeParams() = default;
    CodeParams(int n_, int k_, int delta_);  // throws std::invalid_argument

    int L() const;
    int nu() const;   // parity-check memory for generic row degrees
    int r() const;    // delta mod (n-k)
    int mu() const;   // generator memory ceil(delta/k)
    // Generic parity-check row degrees: r rows of degree nu and n-k-r rows of
    // degree nu-1 when r != 0; all rows of degree nu when r == 0.
    std::vector<int> generic_row_degrees() const;
    // Generic generator column degrees: delta mod k columns of degree mu,
    // the rest of degree floor(delta/k).
    std::vector<int> generic_column_degrees() const;

    bool operator==(const CodeParams& o) const { return n == o.n && k == o.k && delta == o.delta; }
};

// Parity-check representation: H(z) = H_0 + H_1 z + ... + H_nu z^nu with
// (n-k) x n coefficient matrices.  Exactly nu+1 coefficients are stored, and
// the per-row degrees are derived from the stored coefficients.
struct ParityCheck {
    CodeParams params;
    std::vector<GfMatrix> coeffs;  // coeffs[d] = H_d, size nu+1

    ParityCheck() = default;
    // Validates shapes, the coefficient count, and sum(row degrees) == delta.
    ParityCheck(CodeParams p, std::vector<GfMatrix> cs);

    const FieldSpec& field() const { return coeffs.front().field(); }
    std::vector<int> row_degrees() const;  // max d with a nonzero entry, per row
    // Leading row coefficient matrix: row i holds row i of H_{deg(i)}.
    GfMatrix leading_row_matrix() const;
    bool is_row_proper() const;  // leading_row_matrix has full row rank
};

// Generator representation: G(z) = G_0 + ... + G_mu z^mu with n x k
// coefficient matrices (codewords are G(z) * message).  Trailing zero
// coefficients are trimmed; column degrees are derived.
struct Generator {
    CodeParams params;
    std::vector<GfMatrix> coeffs;  // coeffs[d] = G_d

    Generator() = default;
    // Validates shapes and sum(column degrees) == delta (minimality of the
    // stored realization).
    Generator(CodeParams p, std::vector<GfMatrix> cs);

    const FieldSpec& field() const { return coeffs.front().field(); }
    std::vector<int> column_degrees() const;
    // Leading column coefficient matrix: column j holds column j of G_{deg(j)}.
    GfMatrix leading_col_matrix() const;
    bool is_column_proper() const;  // leading_col_matrix has full column rank
};

// The four sliding-window stacks whose full-size minors drive every verdict.
//
//   FullSize      rows (L+1)(n-k), cols (L+1)n,      block (s,t) = H_{s-t}
//   GenTranspose  rows (L+1)k,     cols (L+1)n,      block (s,t) = G_{t-s}^T
//   ReverseWindow rows (L+1)(n-k), cols (L+1)n,      block (s,t) = H_{nu-(t-s)}
//   PartialWindow rows (L+1)(n-k), cols (nu+L+1)n,   block (s,t) = H_{nu-(t-s)}
//
// A full-size minor selects all rows and an increasing column tuple
// j_1 < ... < j_R (1-based).  Valid selections (the ones that are not forced
// to vanish by the block support alone) are characterized by per-position
// index bounds:
//
//   FullSize      j_{s(n-k)}   <= s n            for s = 1..L
//   GenTranspose  j_{s k + 1}  >  s n            for s = 1..L
//   ReverseWindow j_{s(n-k)+1} >  s n            for s = 1..L
//   PartialWindow j_{s(n-k)+1} >  s n  and
//                 j_{s(n-k)}   <= s n + nu n     for s = 1..L
//
// For GenTranspose with non-generic column degrees the entries beyond a
// column's degree are additional fixed zeros inside the blocks; there the
// index rule is only necessary and validity is decided by a perfect-matching
// test on the realized support (interval_exact() == false).
enum class SlidingKind { FullSize, GenTranspose, ReverseWindow, PartialWindow };

struct SlidingMatrix {
    SlidingKind kind;
    CodeParams params;
    GfMatrix mat;
    // support[r][c] is true where the entry is structurally free (not a fixed
    // zero of the block pattern).
    std::vector<std::vector<bool>> support;
    // Propagated per-position selection bounds, 1-based: position t (1..R)
    // may hold columns lo[t]..hi[t].
    std::vector<int> lo, hi;
    bool interval_exact = true;

    int sel_size() const { return mat.rows(); }
    // True if the 1-based increasing column tuple satisfies the index bounds
    // (and, when interval_exact() is false, the support matching test).
    bool selection_valid(const std::vector<int>& cols_1based) const;
};

SlidingMatrix build_sliding(const ParityCheck& h, SlidingKind kind);
SlidingMatrix build_sliding(const Generator& g);  // GenTranspose

// Number of valid full-size column selections (structure only, no values).
std::uint64_t valid_selection_count(const SlidingMatrix& s);

// j-th column distance: minimum weight of a truncated codeword
// (v_0, ..., v_j) with v_0 != 0, i.e. messages with m_0 != 0.  Enumerates
// q^(k(j+1)) message prefixes; throws std::length_error beyond the budget.
int column_distance(const Generator& g, int j, std::uint64_t budget = 10'000'000);

struct DistanceProfile {
    std::vector<int> d;  // d[j] for j = 0..J
    // True if d[j] == (n-k)(j+1)+1 for all j (the maximal profile up to J).
    bool maximal(const CodeParams& p) const;
};

DistanceProfile distance_profile(const Generator& g, int upto_j, std::uint64_t budget = 10'000'000);

// True if the code generated by g has no polynomial-input/finite-output
// anomaly: the gcd of the k x k minors of G(z) is a nonzero constant.
bool is_noncatastrophic(const Generator& g);

// Parity-check side: gcd of the (n-k) x (n-k) minors of H(z) is constant.
bool is_left_prime(const ParityCheck& h);

// Reversal. reverse_parity flips each row by its own degree
// (row i of Hbar_d = row i of H_{deg(i)-d}); reverse_code does the same
// column-wise on a generator.  Both are involutions on proper inputs.
ParityCheck reverse_parity(const ParityCheck& h);
Generator reverse_code(const Generator& g);

// Duality: the dual code of (n, k, delta) is (n, n-k, delta); a parity check
// of one is the transpose of a generator of the other.
Generator dual_generator(const ParityCheck& h);   // G_dual = H^T coefficients
ParityCheck dual_parity(const Generator& g);      // H_dual = G^T coefficients

// JSON serialization.  Matrix files look like
//   {"p":3,"m":1,"params":{"n":3,"k":2,"delta":1},
//    "kind":"parity_check","coeffs":[[[...row...],...],...]}
nlohmann::ordered_json to_json(const ParityCheck& h);
nlohmann::ordered_json to_json(const Generator& g);
ParityCheck parity_from_json(const nlohmann::json& j);
Generator generator_from_json(const nlohmann::json& j);
// Reads either kind; exactly one of the results is set.
void load_code_file(const std::string& path, std::optional<ParityCheck>& h,
                    std::optional<Generator>& g);
void save_code_file(const std::string& path, const nlohmann::ordered_json& j);

}  // namespace ccodes
