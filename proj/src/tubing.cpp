#include "tubing/tubing.hpp"

#include <algorithm>
#include <functional>

namespace tubing {

namespace {

GTree g_tree_on(const SimpleGraph& g, const std::vector<int>& word) {
    GTree t;
    t.root = word.back();
    std::vector<int> rest(word.begin(), word.end() - 1);
    for (const auto& comp : connected_components(g, rest)) {
        std::vector<int> sub;
        for (int v : word)
            if (std::binary_search(comp.begin(), comp.end(), v)) sub.push_back(v);
        t.children.push_back(g_tree_on(g, sub));
    }
    // components come back sorted by minimum vertex, which fixes the order
    return t;
}

}  // namespace

GTree g_tree(const SimpleGraph& g, const Perm& w) {
    if (!w.is_valid() || w.size() != g.n)
        throw ArgumentError("permutation does not match the graph");
    return g_tree_on(g, w.word);
}

std::string g_tree_key(const GTree& t) {
    std::string s = std::to_string(t.root) + "(";
    for (const auto& c : t.children) s += g_tree_key(c);
    s += ")";
    return s;
}

bool g_equivalent(const SimpleGraph& g, const Perm& u, const Perm& v) {
    return g_tree_key(g_tree(g, u)) == g_tree_key(g_tree(g, v));
}

bool is_g_permutation(const SimpleGraph& g, const Perm& w) {
    std::vector<int> prefix;
    int mx = 0;
    for (int i = 1; i <= w.size(); ++i) {
        prefix.push_back(w(i));
        mx = std::max(mx, w(i));
        auto comps = connected_components(g, prefix);
        const std::vector<int>* with_max = nullptr;
        for (const auto& c : comps)
            if (std::binary_search(c.begin(), c.end(), mx)) with_max = &c;
        if (!std::binary_search(with_max->begin(), with_max->end(), w(i)))
            return false;
    }
    return true;
}

bool avoids_m312(const Perm& w, int m) {
    if (m < 1) throw ArgumentError("need m >= 1");
    int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (w(j) < w(k) && w(k) < w(i) && w(k) >= m) return false;
    return true;
}

bool avoids_m132(const Perm& w, int m) {
    if (m < 1) throw ArgumentError("need m >= 1");
    int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                if (w(i) < w(k) && w(k) < w(j) && w(k) >= m) return false;
    return true;
}

bool same_class_cover(const SimpleGraph& g, const Perm& u, int i) {
    if (i < 1 || i >= u.size()) throw ArgumentError("index out of range");
    if (u(i) >= u(i + 1)) throw ArgumentError("no ascent at the given position");
    std::set<int> S;
    for (int p = i + 2; p <= u.size(); ++p) S.insert(u(p));
    bool by_cut = is_ab_cut_set(g, u(i), u(i + 1), S);
    bool by_tree = g_equivalent(g, u, apply_transposition(u, i));
    if (by_cut != by_tree)
        throw InvariantError("cut-set criterion disagrees with G-tree equality");
    return by_cut;
}

Perm class_min(const SimpleGraph& g, const Perm& w) {
    Perm cur = w;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i < cur.size(); ++i) {
            if (cur(i) <= cur(i + 1)) continue;
            Perm down = apply_transposition(cur, i);
            if (same_class_cover(g, down, i)) {
                cur = down;
                moved = true;
                break;
            }
        }
    }
    return cur;
}

Perm class_max(const SimpleGraph& g, const Perm& w) {
    Perm cur = w;
    for (bool moved = true; moved;) {
        moved = false;
        for (int i = 1; i < cur.size(); ++i) {
            if (cur(i) >= cur(i + 1)) continue;
            if (same_class_cover(g, cur, i)) {
                cur = apply_transposition(cur, i);
                moved = true;
                break;
            }
        }
    }
    return cur;
}

int TubingLattice::class_of(const Perm& w) const {
    auto it = key_to_class.find(g_tree_key(g_tree(graph, w)));
    if (it == key_to_class.end())
        throw ArgumentError("permutation does not belong to this lattice");
    return it->second;
}

TubingLattice build_lattice(const SimpleGraph& g) {
    require_filled_connected(g, "build_lattice");
    if (g.n > 8) throw CapacityError("lattice guard: N <= 8");

    TubingLattice lat;
    lat.graph = g;

    Perm w = Perm::identity(g.n);
    std::vector<Perm> perms;
    do {
        perms.push_back(w);
    } while (std::next_permutation(w.word.begin(), w.word.end()));

    std::vector<int> cls(perms.size());
    for (std::size_t p = 0; p < perms.size(); ++p) {
        std::string key = g_tree_key(g_tree(g, perms[p]));
        auto [it, fresh] =
            lat.key_to_class.emplace(key, static_cast<int>(lat.min_rep.size()));
        if (fresh) {
            lat.min_rep.push_back(perms[p]);
            lat.max_rep.push_back(perms[p]);
        }
        int c = it->second;
        cls[p] = c;
        if (inversion_count(perms[p]) < inversion_count(lat.min_rep[c]))
            lat.min_rep[c] = perms[p];
        if (inversion_count(perms[p]) > inversion_count(lat.max_rep[c]))
            lat.max_rep[c] = perms[p];
    }
    for (int c = 0; c < lat.size(); ++c)
        if (!is_g_permutation(g, lat.min_rep[c]))
            throw InvariantError("class minimum is not a G-permutation");

    std::map<Perm, int> index_of;
    for (std::size_t p = 0; p < perms.size(); ++p) index_of[perms[p]] = cls[p];

    std::vector<std::set<int>> covers(lat.size());
    for (const auto& u : perms) {
        int cu = index_of[u];
        for (const auto& [v, i] : weak_order_covers(u)) {
            int cv = index_of[v];
            if (cu != cv) covers[cu].insert(cv);
        }
    }
    lat.upper_covers.resize(lat.size());
    for (int c = 0; c < lat.size(); ++c)
        lat.upper_covers[c] = {covers[c].begin(), covers[c].end()};
    lat.bottom = index_of[Perm::identity(g.n)];
    lat.top = index_of[longest_permutation(g.n)];
    return lat;
}

std::vector<Chain> maximal_chains(const TubingLattice& lat) {
    if (lat.graph.n > 7) throw CapacityError("chain enumeration guard: N <= 7");
    std::vector<Chain> out;
    Chain cur{lat.bottom};
    std::function<void()> dfs = [&]() {
        int c = cur.back();
        if (lat.upper_covers[c].empty()) {
            if (c != lat.top)
                throw InvariantError("maximal chain does not end at the top");
            out.push_back(cur);
            return;
        }
        for (int nxt : lat.upper_covers[c]) {
            cur.push_back(nxt);
            dfs();
            cur.pop_back();
        }
    };
    dfs();
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<Chain> extreme_chains(const TubingLattice& lat, bool longest) {
    auto chains = maximal_chains(lat);
    std::size_t best = longest ? 0 : SIZE_MAX;
    for (const auto& c : chains)
        best = longest ? std::max(best, c.size()) : std::min(best, c.size());
    std::vector<Chain> out;
    for (auto& c : chains)
        if (c.size() == best) out.push_back(std::move(c));
    return out;
}

}  // namespace

std::vector<Chain> longest_chains(const TubingLattice& lat) {
    return extreme_chains(lat, true);
}

std::vector<Chain> shortest_chains(const TubingLattice& lat) {
    return extreme_chains(lat, false);
}

ReducedWord chain_word(const TubingLattice& lat, const Chain& chain) {
    std::vector<int> letters;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const Perm& u = lat.min_rep[chain[k]];
        const Perm& v = lat.min_rep[chain[k + 1]];
        int pos = 0;
        for (int i = 1; i < u.size(); ++i)
            if (apply_transposition(u, i) == v) { pos = i; break; }
        if (pos == 0)
            throw ArgumentError("chain minima are not weak-order covers");
        letters.push_back(pos);
    }
    return ReducedWord(lat.graph.n, std::move(letters));
}

std::vector<ReducedWord> longest_chain_words(const TubingLattice& lat) {
    int full = lat.graph.n * (lat.graph.n - 1) / 2;
    std::vector<ReducedWord> out;
    for (const auto& chain : longest_chains(lat)) {
        if (static_cast<int>(chain.size()) != full + 1)
            throw InvariantError(
                "longest chains are shorter than C(N,2); no single word per chain");
        out.push_back(chain_word(lat, chain));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> intra_class_hyperplanes(const SimpleGraph& g,
                                      const ReducedWord& rw) {
    require_filled_connected(g, "intra_class_hyperplanes");
    int N = g.n;
    if (rw.n != N || evaluate(rw) != longest_permutation(N) || !is_reduced(rw))
        throw ArgumentError("word must be reduced for the longest permutation");
    if (N == 1) return {};

    auto walk = word_to_walk(rw);
    Tableau bal = walk_to_balanced(walk, N);
    auto intervals = edge_intervals(g);
    std::map<Inversion, int> pos_of;
    for (int k = 1; k <= static_cast<int>(walk.size()); ++k)
        pos_of[walk[k - 1]] = k;

    // condition (2)/(3) share the edge-interval scan; they differ in how
    // "H_{i,b} precedes H_{a,b}" is read off
    auto scan = [&](int k, bool use_tableau) {
        auto [a, b] = walk[k - 1];
        for (const auto& iv : intervals) {
            int c = N - iv.column + 1;
            if (c < a + 1 || c > b || g.has_edge(a, c)) continue;
            bool all = true;
            for (int i = iv.lo; i <= iv.hi && all; ++i) {
                if (i >= b) { all = false; break; }
                if (use_tableau) {
                    if (bal.at(a, N - b + 1) <= bal.at(i, N - b + 1)) all = false;
                } else {
                    if (pos_of.at({i, b}) >= k) all = false;
                }
            }
            if (all) return true;
        }
        return false;
    };

    std::set<int> out;
    Perm u = Perm::identity(N);
    for (int k = 1; k <= rw.size(); ++k) {
        int i = rw.letters[k - 1];
        std::set<int> S;
        for (int p = i + 2; p <= N; ++p) S.insert(u(p));
        bool c1 = is_ab_cut_set(g, u(i), u(i + 1), S);
        bool c2 = scan(k, false);
        bool c3 = scan(k, true);
        if (c1 != c2 || c2 != c3)
            throw InvariantError("intra-class conditions disagree");
        if (c1) out.insert(k);
        u = apply_transposition(u, i);
    }
    return out;
}

std::vector<Inversion> reduced_walk(const SimpleGraph& g,
                                    const ReducedWord& rw) {
    auto intra = intra_class_hyperplanes(g, rw);
    auto walk = word_to_walk(rw);
    std::vector<Inversion> out;
    for (int k = 1; k <= static_cast<int>(walk.size()); ++k)
        if (!intra.count(k)) out.push_back(walk[k - 1]);
    return out;
}

GridTableau g_balanced_tableau(const SimpleGraph& g, const ReducedWord& rw) {
    auto intra = intra_class_hyperplanes(g, rw);
    auto walk = word_to_walk(rw);
    GridTableau t;
    int N = g.n;
    for (int k = 1; k <= static_cast<int>(walk.size()); ++k) {
        if (intra.count(k)) continue;
        auto [a, b] = walk[k - 1];
        t.cells[{a, N - b + 1}] = k;
    }
    return standardize(t);
}

Chain project_chain(const TubingLattice& lat, const ReducedWord& rw) {
    Perm u = Perm::identity(lat.graph.n);
    Chain chain{lat.class_of(u)};
    for (int l : rw.letters) {
        u = apply_transposition(u, l);
        int c = lat.class_of(u);
        if (c != chain.back()) chain.push_back(c);
    }
    return chain;
}

}  // namespace tubing
