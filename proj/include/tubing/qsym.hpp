#pragma once

// Integer-coefficient formal sums over compositions in the fundamental
// quasisymmetric basis, plus the expansions the chain functions need.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "tubing/graph.hpp"
#include "tubing/perm.hpp"

namespace tubing {

using Composition = std::vector<int>;

// (degree, lex) order; also the canonical serialization order.
struct CompOrder {
    bool operator()(const Composition& a, const Composition& b) const;
};

int comp_size(const Composition& a);

Composition comp_from_set(const std::set<int>& S, int n);
std::pair<std::set<int>, int> set_from_comp(const Composition& a);

struct QSymExpr {
    std::map<Composition, long long, CompOrder> terms;

    QSymExpr& add(const Composition& c, long long coeff);
    QSymExpr& operator+=(const QSymExpr& o);
    QSymExpr& operator-=(const QSymExpr& o);
    bool is_zero() const { return terms.empty(); }
    bool is_homogeneous() const;
    std::set<int> degree_support() const;
    QSymExpr homogeneous_slice(int degree) const;

    auto operator<=>(const QSymExpr&) const = default;
};

QSymExpr operator+(QSymExpr a, const QSymExpr& b);
QSymExpr operator-(QSymExpr a, const QSymExpr& b);

// Sum of Q_{Des(sigma),inv(w)} over R(w). Guard: inv(w) <= 21.
QSymExpr stanley_f(const Perm& w);

// Fundamental expansion of s_lambda via SYT descents.
QSymExpr schur(const std::vector<int>& lambda);

// Fundamental expansion of the Young quasisymmetric Schur function.
QSymExpr young_quasi_schur(const Composition& alpha);

// Sum over reduced words of the longest maximal chains of L(G).
QSymExpr lmf(const SimpleGraph& g);

// Sum over the adjacent-cycle words of all maximal chains of L(G).
QSymExpr chain_function_fg(const SimpleGraph& g);

// (alpha_1..alpha_{m-1}, n, n-1, ..., 1) with the prefix running over
// permutations of [n+1, n+m-1].
std::vector<Composition> comp_mn(int m, int n);

struct ExpandResult {
    bool ok = false;  // peeling terminated with zero residue
    std::map<Composition, long long, CompOrder> coefficients;
    QSymExpr residue;  // nonzero only when !ok

    bool nonnegative() const;
};

// Peels the lexicographically greatest surviving composition against
// basis(index); the basis element must have unit leading coefficient there.
ExpandResult expand_in_basis(
    const QSymExpr& expr,
    const std::function<QSymExpr(const Composition&)>& basis);

ExpandResult expand_in_young_quasi_schur(const QSymExpr& expr);
ExpandResult expand_in_schur(const QSymExpr& expr);

}  // namespace tubing
