#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tubing/graph.hpp"

using namespace tubing;

namespace {

// The 6-vertex graph from the intra-class worked example.
SimpleGraph intra_example_graph() {
    SimpleGraph g(6);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    g.add_edge(3, 5);
    g.add_edge(4, 5);
    g.add_edge(4, 6);
    g.add_edge(5, 6);
    return g;
}

}  // namespace

TEST_CASE("lollipop family") {
    SimpleGraph g = lollipop(4, 2);
    CHECK(g.n == 6);
    SimpleGraph expected(6);
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) expected.add_edge(u, v);
    expected.add_edge(4, 5);
    expected.add_edge(5, 6);
    CHECK(g == expected);
    CHECK(lollipop(4, 0) == complete_graph(4));
    CHECK(lollipop(1, 4) == path_graph(5));
    CHECK_THROWS_AS(lollipop(0, 3), ArgumentError);
}

TEST_CASE("filled predicate") {
    CHECK(is_filled(lollipop(4, 2)));
    CHECK(is_filled(complete_graph(5)));
    SimpleGraph bad(3);
    bad.add_edge(1, 3);
    CHECK_FALSE(is_filled(bad));
}

TEST_CASE("components and induced subgraphs") {
    auto comps =
        connected_components(lollipop(4, 2), std::vector<int>{1, 2, 3, 5});
    CHECK(comps == std::vector<std::vector<int>>{{1, 2, 3}, {5}});
    CHECK(is_connected(complete_graph(1)));
    auto comps2 = connected_components(path_graph(4), std::vector<int>{1, 3, 4});
    CHECK(comps2 == std::vector<std::vector<int>>{{1}, {3, 4}});
}

TEST_CASE("ab-cut sets") {
    CHECK(is_ab_cut_set(path_graph(4), 1, 3, {2}));
    CHECK_FALSE(is_ab_cut_set(complete_graph(4), 1, 3, {2, 4}));
    CHECK(is_ab_cut_set(lollipop(3, 2), 1, 5, {3, 4}));
    CHECK_THROWS_AS(is_ab_cut_set(path_graph(4), 2, 3, {2}), ArgumentError);
}

TEST_CASE("filled cut witness") {
    CHECK(filled_cut_witness(lollipop(3, 2), 1, 5, {3, 4}) == 4);
    CHECK_FALSE(filled_cut_witness(complete_graph(4), 1, 3, {2, 4}).has_value());
    CHECK(filled_cut_witness(path_graph(4), 1, 4, {3}) == 4);
}

TEST_CASE("witness exists exactly when S is an ab-cut set (exhaustive N<=5)") {
    for (int n = 2; n <= 5; ++n)
        for (const auto& g : oracle::all_filled_connected_graphs(n))
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    std::vector<int> others;
                    for (int v = 1; v <= n; ++v)
                        if (v != a && v != b) others.push_back(v);
                    for (std::uint32_t mask = 0;
                         mask < (1u << others.size()); ++mask) {
                        std::set<int> S;
                        for (std::size_t k = 0; k < others.size(); ++k)
                            if (mask & (1u << k)) S.insert(others[k]);
                        CHECK(filled_cut_witness(g, a, b, S).has_value() ==
                              is_ab_cut_set(g, a, b, S));
                    }
                }
}

TEST_CASE("witness agreement, randomized at N = 6, 7") {
    std::mt19937 rng(20240615);
    for (int n = 6; n <= 7; ++n) {
        std::vector<SimpleGraph> graphs;
        for (int m = 1; m <= n; ++m) graphs.push_back(lollipop(m, n - m));
        for (int trial = 0; trial < 400; ++trial) {
            const auto& g = graphs[rng() % graphs.size()];
            int a = static_cast<int>(rng() % n) + 1;
            int b = static_cast<int>(rng() % n) + 1;
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            std::set<int> S;
            for (int v = 1; v <= n; ++v)
                if (v != a && v != b && rng() % 2) S.insert(v);
            CHECK(filled_cut_witness(g, a, b, S).has_value() ==
                  is_ab_cut_set(g, a, b, S));
        }
    }
}

TEST_CASE("edge intervals") {
    SUBCASE("lollipop closed form") {
        for (int m = 1; m <= 4; ++m)
            for (int n = 0; n <= 3; ++n) {
                if (m + n < 2) continue;
                int N = m + n;
                auto ivs = edge_intervals(lollipop(m, n));
                REQUIRE(static_cast<int>(ivs.size()) == N - 1);
                for (const auto& iv : ivs) {
                    if (iv.column <= n) {
                        CHECK(iv.lo == N - iv.column);
                        CHECK(iv.hi == N - iv.column);
                    } else {
                        CHECK(iv.lo == 1);
                        CHECK(iv.hi == N - iv.column);
                    }
                }
            }
    }
    SUBCASE("worked 6-vertex example") {
        auto ivs = edge_intervals(intra_example_graph());
        CHECK(ivs[0] == EdgeInterval{1, 4, 5});
        CHECK(ivs[1] == EdgeInterval{2, 3, 4});
        CHECK(ivs[2] == EdgeInterval{3, 2, 3});
        CHECK(ivs[3] == EdgeInterval{4, 2, 2});
        CHECK(ivs[4] == EdgeInterval{5, 1, 1});
    }
    SUBCASE("complete graph") {
        auto ivs = edge_intervals(complete_graph(3));
        CHECK(ivs[0] == EdgeInterval{1, 1, 2});
        CHECK(ivs[1] == EdgeInterval{2, 1, 1});
    }
}

TEST_CASE("lollipops are filled and connected") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 0; n <= 4; ++n) {
            CHECK(is_filled(lollipop(m, n)));
            CHECK(is_connected(lollipop(m, n)));
        }
}
