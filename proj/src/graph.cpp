#include "tubing/graph.hpp"

#include <algorithm>
#include <numeric>

namespace tubing {

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw ArgumentError("loops are not allowed");
    if (u < 1 || v < 1 || u > n || v > n)
        throw ArgumentError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges.insert({u, v});
}

bool SimpleGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return edges.count({u, v}) > 0;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

SimpleGraph path_graph(int n) {
    SimpleGraph g(n);
    for (int u = 1; u < n; ++u) g.add_edge(u, u + 1);
    return g;
}

SimpleGraph lollipop(int m, int n) {
    if (m < 1 || n < 0) throw ArgumentError("lollipop requires m >= 1, n >= 0");
    SimpleGraph g(m + n);
    for (int u = 1; u <= m; ++u)
        for (int v = u + 1; v <= m; ++v) g.add_edge(u, v);
    for (int u = m; u < m + n; ++u) g.add_edge(u, u + 1);
    return g;
}

bool is_filled(const SimpleGraph& g) {
    for (auto [i, j] : g.edges)
        for (int k = i + 1; k < j; ++k)
            if (!g.has_edge(i, k) || !g.has_edge(k, j)) return false;
    return true;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g,
                                                   const std::vector<int>& W) {
    std::vector<std::vector<int>> comps;
    std::set<int> todo(W.begin(), W.end());
    for (int v : W)
        if (v < 1 || v > g.n) throw ArgumentError("vertex out of range");
    while (!todo.empty()) {
        std::vector<int> comp, stack{*todo.begin()};
        todo.erase(todo.begin());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (auto it = todo.begin(); it != todo.end();) {
                if (g.has_edge(u, *it)) {
                    stack.push_back(*it);
                    it = todo.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

std::vector<std::vector<int>> connected_components(const SimpleGraph& g) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 1);
    return connected_components(g, all);
}

bool is_connected(const SimpleGraph& g) {
    return g.n >= 1 && connected_components(g).size() == 1;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& W) {
    // Keeps the ambient vertex count; vertices outside W become isolated.
    SimpleGraph h(g.n);
    std::set<int> ws(W.begin(), W.end());
    for (auto [u, v] : g.edges)
        if (ws.count(u) && ws.count(v)) h.add_edge(u, v);
    return h;
}

bool is_ab_cut_set(const SimpleGraph& g, int a, int b, const std::set<int>& S) {
    if (a == b) throw ArgumentError("cut-set endpoints must differ");
    if (S.count(a) || S.count(b))
        throw ArgumentError("cut-set must not contain a or b");
    std::vector<int> rest;
    for (int v = 1; v <= g.n; ++v)
        if (!S.count(v)) rest.push_back(v);
    for (const auto& comp : connected_components(g, rest)) {
        bool has_a = std::binary_search(comp.begin(), comp.end(), a);
        bool has_b = std::binary_search(comp.begin(), comp.end(), b);
        if (has_a || has_b) return !(has_a && has_b);
    }
    return true;
}

std::optional<int> filled_cut_witness(const SimpleGraph& g, int a, int b,
                                      const std::set<int>& S) {
    require_filled_connected(g, "filled_cut_witness");
    if (a >= b) throw ArgumentError("filled_cut_witness requires a < b");
    if (S.count(a) || S.count(b))
        throw ArgumentError("cut-set must not contain a or b");
    for (int c = a + 1; c <= b; ++c) {
        if (g.has_edge(a, c)) continue;
        bool ok = true;
        for (int j = 1; j < c && ok; ++j)
            if (g.has_edge(j, c) && !S.count(j)) ok = false;
        if (ok) return c;
    }
    return std::nullopt;
}

std::vector<EdgeInterval> edge_intervals(const SimpleGraph& g) {
    require_filled_connected(g, "edge_intervals");
    if (g.n < 2) throw ArgumentError("edge_intervals needs N >= 2");
    std::vector<EdgeInterval> out;
    for (int j = 1; j <= g.n - 1; ++j) {
        int vtx = g.n - j + 1;
        std::vector<int> rows;
        for (int i = 1; i < vtx; ++i)
            if (g.has_edge(i, vtx)) rows.push_back(i);
        if (rows.empty() || rows.back() != g.n - j ||
            rows.back() - rows.front() + 1 != static_cast<int>(rows.size()))
            throw InvariantError("edge interval not contiguous down to N-j");
        out.push_back({j, rows.front(), rows.back()});
    }
    return out;
}

void require_filled_connected(const SimpleGraph& g, const std::string& where) {
    if (!is_filled(g) || !is_connected(g))
        throw ArgumentError(where + ": graph must be filled and connected");
}

}  // namespace tubing
