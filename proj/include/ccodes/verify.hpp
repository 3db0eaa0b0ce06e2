#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccodes/code.hpp"

namespace ccodes {

// Verdict of a minor-criterion check.  When the answer is negative, witness
// holds the lexicographically first valid column selection whose full-size
// minor vanishes (1-based positions into the sliding stack that was checked).
struct MinorVerdict {
    bool holds = false;
    SlidingKind checked = SlidingKind::FullSize;
    std::optional<std::vector<int>> witness;
    // Set when the answer is forced by the parameters alone (no minors were
    // evaluated), e.g. complete-MDP with (n-k) not dividing delta.
    bool structural = false;
    std::string note;
};

// Maximum-distance-profile check: every valid full-size minor of the sliding
// parity-check stack (FullSize) is nonzero.  Throws std::invalid_argument if
// h is not row proper.
MinorVerdict is_mdp(const ParityCheck& h);
// Generator-side equivalent on the GenTranspose stack.  Throws if g is not
// column proper.
MinorVerdict is_mdp(const Generator& g);

// Reverse-MDP: the code is MDP and its reversal is MDP.  For parity checks
// with (n-k) | delta this is the ReverseWindow minor criterion; otherwise the
// reversed parity check is built explicitly and checked as MDP.
MinorVerdict is_reverse_mdp(const ParityCheck& h);
MinorVerdict is_reverse_mdp(const Generator& g);

// Complete-MDP: every valid full-size minor of the PartialWindow stack is
// nonzero.  Requires (n-k) | delta; otherwise returns a structural negative
// verdict (no such code exists with generic row degrees).
MinorVerdict is_complete_mdp(const ParityCheck& h);

// Core engine, exposed for tests: true iff every valid full-size minor of s
// is nonzero; otherwise returns the first witness in lexicographic order.
MinorVerdict all_valid_minors_nonzero(const SlidingMatrix& s);

// Reference implementation without pruning or incremental elimination:
// enumerates every size-R column subset, filters with selection_valid, and
// evaluates determinants directly.  For cross-checks at tiny sizes.
MinorVerdict all_valid_minors_nonzero_naive(const SlidingMatrix& s);

// Lower-triangular Toeplitz superregularity: with entries
// T(i,j) = a_{i-j+1} for i >= j (a = a_1..a_gamma), every minor that is not
// trivially zero (some selected column right of its row: j_l > i_l) must be
// nonzero.  Evaluates the vector as given.
bool is_superregular_toeplitz(const FieldSpec& F, const std::vector<Fel>& a);

}  // namespace ccodes
