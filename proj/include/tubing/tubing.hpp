#pragma once

// G-trees and G-equivalence, the tubing lattice L(G) as the weak order
// quotient, maximal-chain enumeration, intra-class hyperplane detection,
// and G-balanced tableaux.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "tubing/graph.hpp"
#include "tubing/perm.hpp"
#include "tubing/tableau.hpp"

namespace tubing {

struct GTree {
    int root = 0;
    std::vector<GTree> children;  // ordered by minimum vertex of the subtree
};

GTree g_tree(const SimpleGraph& g, const Perm& w);
std::string g_tree_key(const GTree& t);
bool g_equivalent(const SimpleGraph& g, const Perm& u, const Perm& v);

bool is_g_permutation(const SimpleGraph& g, const Perm& w);

// Forbidden pattern w(j) < w(k) < w(i) for i<j<k with w(k) >= m.
bool avoids_m312(const Perm& w, int m);
// Forbidden pattern w(i) < w(k) < w(j) for i<j<k with w(k) >= m.
bool avoids_m132(const Perm& w, int m);

// Minimum / maximum of [[w]] in the weak order, by greedy descent/ascent
// through same-class covers (classes are weak-order intervals).
Perm class_min(const SimpleGraph& g, const Perm& w);
Perm class_max(const SimpleGraph& g, const Perm& w);

// Is the cover u <* u.s_i intra-class? Requires an ascent at i. Uses the
// cut-set criterion and cross-checks it against G-tree equality.
bool same_class_cover(const SimpleGraph& g, const Perm& u, int i);

struct TubingLattice {
    SimpleGraph graph;
    std::vector<Perm> min_rep;  // class minimum = the G-permutation
    std::vector<Perm> max_rep;
    std::vector<std::vector<int>> upper_covers;  // class id -> covering ids
    int bottom = 0, top = 0;

    int size() const { return static_cast<int>(min_rep.size()); }
    int class_of(const Perm& w) const;  // via the stored key map
    std::map<std::string, int> key_to_class;
};

// Elements grouped by G-tree over all of S_N; covers are projected
// weak-order covers between distinct classes. Guard: N <= 8.
TubingLattice build_lattice(const SimpleGraph& g);

using Chain = std::vector<int>;  // class ids, bottom to top

// Exhaustive DFS over cover relations; guard N <= 7.
std::vector<Chain> maximal_chains(const TubingLattice& lat);
std::vector<Chain> longest_chains(const TubingLattice& lat);
std::vector<Chain> shortest_chains(const TubingLattice& lat);

// For a full-length chain the class minima form a weak-order maximal
// chain; its letters.
ReducedWord chain_word(const TubingLattice& lat, const Chain& chain);
std::vector<ReducedWord> longest_chain_words(const TubingLattice& lat);

// Walk positions k (1-indexed) whose hyperplane separates two same-class
// permutations. Computes all three conditions of the intra-class theorem
// and insists they agree.
std::set<int> intra_class_hyperplanes(const SimpleGraph& g,
                                      const ReducedWord& rw);

// The walk of rw with intra-class steps removed (an MH(G) member).
std::vector<Inversion> reduced_walk(const SimpleGraph& g,
                                    const ReducedWord& rw);

// Balanced tableau of rw with intra-class cells deleted and the rest
// standardized (an MB(G) member).
GridTableau g_balanced_tableau(const SimpleGraph& g, const ReducedWord& rw);

// The sequence of distinct classes visited by the chain of rw.
Chain project_chain(const TubingLattice& lat, const ReducedWord& rw);

}  // namespace tubing
