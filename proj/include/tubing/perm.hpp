#pragma once

// Permutations of [N] in one-line notation, reduced words, inversions,
// weak-order covers and Tits moves. Conventions: everything is 1-indexed;
// a reduced word acts on positions, applied left to right starting from
// the identity (right weak order), so letter i swaps positions i and i+1.

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tubing/errors.hpp"

namespace tubing {

struct Perm {
    std::vector<int> word;  // word[k] = value at position k+1, values 1..N

    Perm() = default;
    explicit Perm(std::vector<int> w) : word(std::move(w)) {}

    static Perm identity(int n);

    int size() const { return static_cast<int>(word.size()); }
    int operator()(int i) const { return word[i - 1]; }  // 1-indexed
    int& at(int i) { return word[i - 1]; }

    bool is_valid() const;

    auto operator<=>(const Perm&) const = default;
};

struct ReducedWord {
    int n = 0;                // ambient S_n
    std::vector<int> letters;  // each in 1..n-1

    ReducedWord() = default;
    ReducedWord(int n_, std::vector<int> ls) : n(n_), letters(std::move(ls)) {}

    int size() const { return static_cast<int>(letters.size()); }

    auto operator<=>(const ReducedWord&) const = default;
};

// Value pair (a,b), a<b, appearing in decreasing order in the permutation.
// Matches the hyperplane label H_{a,b}.
using Inversion = std::pair<int, int>;

// Parses "213213" (single digits) or "2,1,3" into letters.
std::vector<int> parse_letters(const std::string& s);
std::string letters_to_string(const std::vector<int>& letters);

Perm longest_permutation(int n);

Perm apply_transposition(const Perm& w, int i);

Perm evaluate(const ReducedWord& rw);

bool is_reduced(const std::vector<int>& letters, int n);
bool is_reduced(const ReducedWord& rw);

std::set<Inversion> inversions(const Perm& w);
int inversion_count(const Perm& w);

// All v = w * s_i with w(i) < w(i+1), paired with the position i.
std::vector<std::pair<Perm, int>> weak_order_covers(const Perm& w);

// Positions i with w(i) > w(i+1); stripping one lowers the length.
std::vector<int> right_descents(const Perm& w);

// Complete enumeration of R(w) by memoized descent recursion,
// sorted lexicographically.
std::vector<ReducedWord> all_reduced_words(const Perm& w);
std::uint64_t reduced_word_count(const Perm& w);

// Positions i with letters[i] > letters[i+1], 1-indexed.
std::set<int> descent_set(const ReducedWord& rw);

// One braid move (i(i+1)i <-> (i+1)i(i+1)) or one commutation move
// (ij <-> ji, |i-j| > 1) away from rw.
std::set<ReducedWord> tits_neighbors(const ReducedWord& rw);

}  // namespace tubing
