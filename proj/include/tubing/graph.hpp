#pragma once

// Simple graphs on [N]: filled/connected predicates, the lollipop family,
// ab-cut sets with the filled-graph witness, and edge intervals.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tubing/errors.hpp"

namespace tubing {

struct SimpleGraph {
    int n = 0;
    std::set<std::pair<int, int>> edges;  // stored with u < v

    SimpleGraph() = default;
    explicit SimpleGraph(int n_) : n(n_) {}

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;

    auto operator<=>(const SimpleGraph&) const = default;
};

SimpleGraph complete_graph(int n);
SimpleGraph path_graph(int n);

// Complete graph on [m] plus the path m, m+1, ..., m+n.
SimpleGraph lollipop(int m, int n);

bool is_filled(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

// Components of the subgraph induced on W, as sorted vertex sets.
std::vector<std::vector<int>> connected_components(const SimpleGraph& g,
                                                   const std::vector<int>& W);
std::vector<std::vector<int>> connected_components(const SimpleGraph& g);

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& W);

// Do a and b land in different components of G restricted to V - S?
bool is_ab_cut_set(const SimpleGraph& g, int a, int b, const std::set<int>& S);

// For filled connected g and a < b: the smallest c in [a+1,b] with
// {a,c} not an edge and {j < c : jc in E} contained in S, when S is an
// ab-cut set; empty otherwise.
std::optional<int> filled_cut_witness(const SimpleGraph& g, int a, int b,
                                      const std::set<int>& S);

struct EdgeInterval {
    int column = 0;  // j in 1..N-1, associated with vertex N-j+1
    int lo = 0, hi = 0;  // I_j = [lo, hi]

    auto operator<=>(const EdgeInterval&) const = default;
};

// For each column j, the interval of rows i with {i, N-j+1} an edge and
// i < N-j+1. Contiguity and membership of N-j are asserted.
std::vector<EdgeInterval> edge_intervals(const SimpleGraph& g);

// "K<N>", "P<N>", "L<m>,<n>", or "@file.json" with {"n":..,"edges":[[u,v],..]}.
SimpleGraph parse_graph_spec(const std::string& spec);

void require_filled_connected(const SimpleGraph& g, const std::string& where);

}  // namespace tubing
