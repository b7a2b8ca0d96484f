#include <doctest.h>

#include "oracles.hpp"
#include "tubing/qsym.hpp"
#include "tubing/shortest.hpp"

using namespace tubing;

namespace {

QSymExpr q_of(std::vector<std::pair<Composition, long long>> terms) {
    QSymExpr out;
    for (auto& [c, x] : terms) out.add(c, x);
    return out;
}

}  // namespace

TEST_CASE("composition/set correspondence") {
    CHECK(comp_from_set({3, 5}, 6) == Composition{3, 2, 1});
    CHECK(comp_from_set({}, 4) == Composition{4});
    CHECK(comp_from_set({2, 4, 5}, 6) == Composition{2, 2, 1, 1});
    CHECK_THROWS_AS(comp_from_set({4}, 4), ArgumentError);
    for (const auto& c : {Composition{3, 2, 1}, Composition{1, 1, 2},
                          Composition{5}, Composition{}}) {
        auto [s, n] = set_from_comp(c);
        CHECK(comp_from_set(s, n) == c);
    }
}

TEST_CASE("stanley symmetric function") {
    CHECK(stanley_f(longest_permutation(3)) ==
          q_of({{{1, 2}, 1}, {{2, 1}, 1}}));
    CHECK(stanley_f(longest_permutation(3)) == schur({2, 1}));
    CHECK(stanley_f(Perm::identity(3)) == q_of({{{}, 1}}));
    CHECK(stanley_f(longest_permutation(4)) == schur({3, 2, 1}));
}

TEST_CASE("schur in the fundamental basis") {
    CHECK(schur({1, 1}) == q_of({{{1, 1}, 1}}));
    CHECK(schur({2, 1}) == q_of({{{2, 1}, 1}, {{1, 2}, 1}}));
}

TEST_CASE("young quasisymmetric schur") {
    CHECK(young_quasi_schur({2, 2}) == q_of({{{1, 2, 1}, 1}, {{2, 2}, 1}}));
    CHECK(young_quasi_schur({1}) == q_of({{{1}, 1}}));
    CHECK(young_quasi_schur({3, 2, 1}) ==
          q_of({{{3, 2, 1}, 1}, {{2, 2, 1, 1}, 1}}));
}

TEST_CASE("longest-chain function") {
    CHECK(lmf(path_graph(4)) == q_of({{{3, 2, 1}, 1}, {{2, 2, 1, 1}, 1}}));
    CHECK(lmf(path_graph(4)) == young_quasi_schur({3, 2, 1}));
    CHECK(lmf(complete_graph(3)) == stanley_f(longest_permutation(3)));
    auto res = expand_in_young_quasi_schur(lmf(lollipop(2, 1)));
    CHECK(res.ok);
    CHECK(res.nonnegative());
}

TEST_CASE("comp_mn") {
    CHECK(comp_mn(1, 3) == std::vector<Composition>{{3, 2, 1}});
    CHECK(comp_mn(3, 1) == std::vector<Composition>{{2, 3, 1}, {3, 2, 1}});
    CHECK(comp_mn(2, 2) == std::vector<Composition>{{3, 2, 1}});
    CHECK(comp_mn(1, 0) == std::vector<Composition>{{}});
}

TEST_CASE("longest-chain quasi-Schur positivity, m+n <= 4") {
    for (int N = 2; N <= 4; ++N)
        for (int m = 1; m <= N; ++m) {
            int n = N - m;
            QSymExpr lhs = lmf(lollipop(m, n));
            QSymExpr rhs;
            for (const auto& a : comp_mn(m, n)) rhs += young_quasi_schur(a);
            CHECK((lhs - rhs).is_zero());
            auto res = expand_in_young_quasi_schur(lhs);
            CHECK(res.ok);
            for (const auto& a : comp_mn(m, n)) {
                REQUIRE(res.coefficients.count(a));
                CHECK(res.coefficients.at(a) == 1);
            }
            CHECK(res.coefficients.size() == comp_mn(m, n).size());
        }
}

TEST_CASE("expansion failures are surfaced") {
    auto res = expand_in_young_quasi_schur(q_of({{{2, 2}, 1}}));
    CHECK((!res.ok || !res.nonnegative()));
    CHECK_THROWS_AS(
        expand_in_young_quasi_schur(q_of({{{2}, 1}, {{2, 1}, 1}})),
        ArgumentError);
}

TEST_CASE("stanley functions are schur positive") {
    for (const auto& w :
         {w_mn(3, 2), w_mn(2, 2), longest_permutation(4), Perm({4, 2, 3, 1})}) {
        auto res = expand_in_schur(stanley_f(w));
        CHECK(res.ok);
        CHECK(res.nonnegative());
    }
}

TEST_CASE("chain function of P_4 matches the displayed nine-term sum") {
    QSymExpr expected = q_of({{{3, 2, 1}, 1},
                              {{2, 2, 1, 1}, 1},
                              {{3, 1, 1}, 1},
                              {{1, 2, 1, 1}, 1},
                              {{2, 1, 1}, 2},
                              {{2, 2}, 1},
                              {{1, 2, 1}, 1},
                              {{1, 1, 1}, 1}});
    CHECK(chain_function_fg(path_graph(4)) == expected);
    CHECK(chain_function_fg(complete_graph(3)) ==
          stanley_f(longest_permutation(3)));
}

TEST_CASE("degree-5 slice of F_{P_4} is not quasi-Schur positive") {
    QSymExpr f = chain_function_fg(path_graph(4));
    QSymExpr slice = f.homogeneous_slice(5);
    CHECK(slice == q_of({{{3, 1, 1}, 1}, {{1, 2, 1, 1}, 1}}));
    auto res = expand_in_young_quasi_schur(slice);
    CHECK((!res.ok || !res.nonnegative()));
}

TEST_CASE("degree bookkeeping") {
    for (int N = 2; N <= 4; ++N)
        for (int m = 1; m <= N; ++m) {
            int n = N - m;
            QSymExpr f = lmf(lollipop(m, n));
            CHECK(f.degree_support() == std::set<int>{N * (N - 1) / 2});
            QSymExpr fg = chain_function_fg(lollipop(m, n));
            auto support = fg.degree_support();
            CHECK(*support.begin() == m * (m - 1) / 2 + n);
            CHECK(*support.rbegin() == N * (N - 1) / 2);
        }
}

TEST_CASE("capacity guard on stanley_f") {
    CHECK_THROWS_AS(stanley_f(longest_permutation(8)), CapacityError);
}
