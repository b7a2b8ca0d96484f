#pragma once

// Commuting shuffles: the permutation v_{m,n}, the closure cshuf(sigma,tau)
// under single commutation swaps across the sigma/tau boundary, and the
// union Shuf(m,n) over sigma in R(v_{m,n}) and shiftable tau.

#include <vector>

#include "tubing/perm.hpp"

namespace tubing {

// [m, m+1, ..., m+n, m-1, m-2, ..., 1] in S_{m+n}.
Perm v_word(int m, int n);

struct TaggedShuffle {
    ReducedWord letters;
    std::vector<int> sigma_indices;  // ascending positions of sigma letters
    std::vector<int> tau_indices;    // ascending positions of tau letters

    auto operator<=>(const TaggedShuffle&) const = default;
};

// Closure of sigma.tau under swapping positions (i, i+1) with i held by
// sigma, i+1 held by tau, and commuting letters.
std::vector<TaggedShuffle> commuting_shuffles(const ReducedWord& sigma,
                                              const ReducedWord& tau);

// Union over R(v_{m,n}) x shR(omega_0^(n+1)), de-duplicated as plain
// words and sorted. Guard: m+n <= 7.
std::vector<ReducedWord> shuf(int m, int n);

struct DecreasingSequences {
    // d[k - (m-1)] holds the indices of the decreasing run k, k-1, ..., k-m+2
    std::vector<std::vector<int>> d;
    std::vector<int> a;  // indices with sigma_{a_i} = i
};

// Extraction of Claim vmn part 3; throws InvariantError if sigma does not
// evaluate to v_{m,n}.
DecreasingSequences decreasing_sequences(const ReducedWord& sigma, int m, int n);

bool is_lattice_word(const std::vector<int>& word);
bool is_reverse_lattice_word(const std::vector<int>& word);

}  // namespace tubing
