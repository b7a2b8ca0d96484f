#pragma once

// Shortest maximal chains of L(L_{m,n}): skew balanced tableaux SMB, the
// column-by-column lift back to full balanced tableaux, the bijection
// varsigma onto R(w_{m,n}), adjacent-cycle chain words, and psi.

#include <set>
#include <vector>

#include "tubing/perm.hpp"
#include "tubing/tableau.hpp"
#include "tubing/tubing.hpp"

namespace tubing {

// [m+n, m-1, m-2, ..., 1, m, m+1, ..., m+n-1].
Perm w_mn(int m, int n);

// The cycle (a, b, b-1, ..., a+1): u.c removes the entry of u at position
// b and reinserts it at position a.
struct AdjacentCycle {
    int a = 0, b = 0;  // 1 <= a < b

    auto operator<=>(const AdjacentCycle&) const = default;
};

struct CycleWord {
    int n = 0;
    std::vector<AdjacentCycle> cycles;

    auto operator<=>(const CycleWord&) const = default;
};

Perm apply_cycle(const Perm& u, const AdjacentCycle& c);

// Skew shape st_{m+n} // (n^{m-1}, n-1, ..., 1): single cells on the
// diagonal rows m..m+n-1 plus a shifted staircase block in columns > n.
std::vector<std::pair<int, int>> smb_cells(int m, int n);

// All skew balanced fillings satisfying the diagonal-increase and
// column-(n+1) dominance conditions. Guard: m+n <= 6.
std::vector<GridTableau> enumerate_smb(int m, int n);
bool is_smb(const GridTableau& b, int m, int n);

// Full staircase balanced tableau whose intra-class deletion and
// standardization gives b back; built column by column via the S/E rule.
Tableau lift_smb(const GridTableau& b, int m, int n);

ReducedWord varsigma(const GridTableau& b, int m, int n);
GridTableau varsigma_inverse(const ReducedWord& sigma, int m, int n);

// sigma_i with letter >= m becomes (m+n-sigma_i, ..., m+n); letters < m
// become transpositions shifted by the number of earlier big letters.
CycleWord psi(const ReducedWord& sigma, int m, int n);

// Cycle word of a maximal chain read off the class-maximum representatives.
CycleWord chain_to_cycles(const TubingLattice& lat, const Chain& chain);

// {i : b_i >= b_{i+1}}.
std::set<int> cycle_descents(const CycleWord& gamma);

}  // namespace tubing
