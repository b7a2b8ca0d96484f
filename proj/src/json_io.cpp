#include "tubing/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace tubing {

using nlohmann::json;

json to_json(const Perm& w) { return json(w.word); }

json to_json(const ReducedWord& rw) {
    return json{{"n", rw.n}, {"letters", rw.letters}};
}

json to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"n", g.n}, {"edges", edges}};
}

json to_json(const Tableau& t) {
    return json{{"outer", t.shape()}, {"rows", t.rows}};
}

json syct_to_json(const Tableau& t) {
    return json{{"comp", t.shape()}, {"rows", t.rows}};
}

json to_json(const GridTableau& t) {
    // Emit the skew form when rows are contiguous and start at nested
    // offsets; otherwise pad gaps with null.
    int nrows = 0;
    for (const auto& [cell, v] : t.cells) nrows = std::max(nrows, cell.first);
    std::vector<int> first(nrows + 1, 0), last(nrows + 1, 0);
    for (const auto& [cell, v] : t.cells) {
        auto [i, j] = cell;
        if (first[i] == 0 || j < first[i]) first[i] = j;
        if (j > last[i]) last[i] = j;
    }
    bool skew = true;
    for (int i = 1; i <= nrows && skew; ++i) {
        if (first[i] == 0) { skew = false; break; }
        for (int j = first[i]; j <= last[i]; ++j)
            if (!t.has_cell(i, j)) { skew = false; break; }
        if (i > 1 && (first[i] > first[i - 1] || last[i] > last[i - 1]))
            skew = false;
    }
    json rows = json::array(), outer = json::array(), inner = json::array();
    for (int i = 1; i <= nrows; ++i) {
        json row = json::array();
        int from = skew ? first[i] : 1;
        for (int j = from; j <= last[i]; ++j)
            if (t.has_cell(i, j))
                row.push_back(t.at(i, j));
            else
                row.push_back(nullptr);
        rows.push_back(row);
        outer.push_back(last[i]);
        inner.push_back(skew ? first[i] - 1 : 0);
    }
    json out{{"outer", outer}, {"rows", rows}};
    if (skew) out["inner"] = inner;
    return out;
}

json to_json(const QSymExpr& q) {
    json terms = json::array();
    for (const auto& [c, x] : q.terms)
        terms.push_back(json{{"comp", c}, {"coeff", x}});
    return json{{"terms", terms}};
}

json to_json(const CycleWord& gamma) {
    json cycles = json::array();
    for (const auto& c : gamma.cycles)
        cycles.push_back(json{{"a", c.a}, {"b", c.b}});
    return json{{"n", gamma.n}, {"cycles", cycles}};
}

json to_json(const TaggedShuffle& sh) {
    return json{{"letters", sh.letters.letters},
                {"I", sh.sigma_indices},
                {"J", sh.tau_indices}};
}

json walk_to_json(const std::vector<Inversion>& walk) {
    json out = json::array();
    for (auto [a, b] : walk) out.push_back(json::array({a, b}));
    return out;
}

Perm perm_from_json(const json& j) {
    Perm w(j.get<std::vector<int>>());
    if (!w.is_valid()) throw ArgumentError("invalid permutation in JSON");
    return w;
}

ReducedWord reduced_word_from_json(const json& j) {
    return ReducedWord(j.at("n").get<int>(),
                       j.at("letters").get<std::vector<int>>());
}

SimpleGraph graph_from_json(const json& j) {
    SimpleGraph g(j.at("n").get<int>());
    if (g.n < 1) throw ArgumentError("graph needs n >= 1");
    for (const auto& e : j.at("edges"))
        g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

Tableau tableau_from_json(const json& j) {
    if (j.contains("inner"))
        for (const auto& p : j.at("inner"))
            if (p.get<int>() != 0)
                throw ArgumentError("skew tableau where a straight one is needed");
    Tableau t;
    for (const auto& row : j.at("rows"))
        t.rows.push_back(row.get<std::vector<int>>());
    return t;
}

SimpleGraph parse_graph_spec(const std::string& spec) {
    if (spec.empty()) throw ArgumentError("empty graph spec");
    try {
        if (spec[0] == '@') {
            std::ifstream in(spec.substr(1));
            if (!in) throw ArgumentError("cannot open " + spec.substr(1));
            json j;
            in >> j;
            return graph_from_json(j);
        }
        if (spec[0] == 'K') return complete_graph(std::stoi(spec.substr(1)));
        if (spec[0] == 'P') return path_graph(std::stoi(spec.substr(1)));
        if (spec[0] == 'L') {
            auto comma = spec.find(',');
            if (comma == std::string::npos)
                throw ArgumentError("lollipop spec is L<m>,<n>");
            return lollipop(std::stoi(spec.substr(1, comma - 1)),
                            std::stoi(spec.substr(comma + 1)));
        }
    } catch (const json::exception& e) {
        throw ArgumentError(std::string("bad graph JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ArgumentError("cannot parse graph spec: " + spec);
    }
    throw ArgumentError("cannot parse graph spec: " + spec);
}

std::string perm_to_string(const Perm& w) {
    std::string s = "[";
    for (int i = 1; i <= w.size(); ++i) {
        if (i > 1) s += ",";
        s += std::to_string(w(i));
    }
    return s + "]";
}

json lattice_to_json(const TubingLattice& lat) {
    json elements = json::array(), maxima = json::array(), covers = json::array();
    for (const auto& w : lat.min_rep) elements.push_back(to_json(w));
    for (const auto& w : lat.max_rep) maxima.push_back(to_json(w));
    for (int c = 0; c < lat.size(); ++c)
        for (int d : lat.upper_covers[c]) covers.push_back(json::array({c, d}));
    return json{{"graph", to_json(lat.graph)}, {"elements", elements},
                {"class_maxima", maxima},     {"covers", covers},
                {"bottom", lat.bottom},       {"top", lat.top}};
}

std::string lattice_to_dot(const TubingLattice& lat) {
    std::ostringstream out;
    out << "digraph tubing_lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int c = 0; c < lat.size(); ++c)
        out << "  n" << c << " [label=\"" << perm_to_string(lat.min_rep[c])
            << "\"];\n";
    for (int c = 0; c < lat.size(); ++c)
        for (int d : lat.upper_covers[c]) out << "  n" << c << " -> n" << d << ";\n";
    out << "}\n";
    return out.str();
}

std::string weak_order_overlay_dot(const SimpleGraph& g) {
    require_filled_connected(g, "weak_order_overlay_dot");
    if (g.n > 4) throw CapacityError("overlay export guard: N <= 4");
    Perm w = Perm::identity(g.n);
    std::vector<Perm> perms;
    do {
        perms.push_back(w);
    } while (std::next_permutation(w.word.begin(), w.word.end()));
    std::map<std::string, std::vector<int>> classes;
    for (std::size_t p = 0; p < perms.size(); ++p)
        classes[g_tree_key(g_tree(g, perms[p]))].push_back(static_cast<int>(p));
    std::ostringstream out;
    out << "digraph weak_order {\n  rankdir=BT;\n  node [shape=box];\n";
    int cluster = 0;
    for (const auto& [key, members] : classes) {
        out << "  subgraph cluster_" << cluster++ << " {\n    style=filled;\n"
            << "    color=lightblue;\n";
        for (int p : members)
            out << "    n" << p << " [label=\"" << perm_to_string(perms[p])
                << "\"];\n";
        out << "  }\n";
    }
    for (std::size_t p = 0; p < perms.size(); ++p)
        for (const auto& [v, i] : weak_order_covers(perms[p])) {
            auto it = std::lower_bound(perms.begin(), perms.end(), v);
            out << "  n" << p << " -> n" << (it - perms.begin()) << ";\n";
        }
    out << "}\n";
    return out.str();
}

}  // namespace tubing
