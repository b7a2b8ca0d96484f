#include "tubing/qsym.hpp"

#include <algorithm>
#include <numeric>

#include "tubing/shortest.hpp"
#include "tubing/tableau.hpp"
#include "tubing/tubing.hpp"

namespace tubing {

int comp_size(const Composition& a) {
    return std::accumulate(a.begin(), a.end(), 0);
}

bool CompOrder::operator()(const Composition& a, const Composition& b) const {
    int da = comp_size(a), db = comp_size(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Composition comp_from_set(const std::set<int>& S, int n) {
    if (n == 0) {
        if (!S.empty()) throw ArgumentError("set must be empty for n = 0");
        return {};
    }
    Composition a;
    int prev = 0;
    for (int s : S) {
        if (s <= prev || s >= n) throw ArgumentError("need 0 < s < n for all s");
        a.push_back(s - prev);
        prev = s;
    }
    a.push_back(n - prev);
    return a;
}

std::pair<std::set<int>, int> set_from_comp(const Composition& a) {
    std::set<int> S;
    int run = 0;
    for (std::size_t k = 0; k + 1 < a.size(); ++k) {
        run += a[k];
        S.insert(run);
    }
    return {S, comp_size(a)};
}

QSymExpr& QSymExpr::add(const Composition& c, long long coeff) {
    for (int p : c)
        if (p < 1) throw ArgumentError("composition parts must be positive");
    auto it = terms.find(c);
    if (it == terms.end()) {
        if (coeff != 0) terms.emplace(c, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms.erase(it);
    }
    return *this;
}

QSymExpr& QSymExpr::operator+=(const QSymExpr& o) {
    for (const auto& [c, x] : o.terms) add(c, x);
    return *this;
}

QSymExpr& QSymExpr::operator-=(const QSymExpr& o) {
    for (const auto& [c, x] : o.terms) add(c, -x);
    return *this;
}

QSymExpr operator+(QSymExpr a, const QSymExpr& b) { return a += b; }
QSymExpr operator-(QSymExpr a, const QSymExpr& b) { return a -= b; }

bool QSymExpr::is_homogeneous() const { return degree_support().size() <= 1; }

std::set<int> QSymExpr::degree_support() const {
    std::set<int> out;
    for (const auto& [c, x] : terms) out.insert(comp_size(c));
    return out;
}

QSymExpr QSymExpr::homogeneous_slice(int degree) const {
    QSymExpr out;
    for (const auto& [c, x] : terms)
        if (comp_size(c) == degree) out.add(c, x);
    return out;
}

QSymExpr stanley_f(const Perm& w) {
    int len = inversion_count(w);
    if (len > max_enumeration_cells())
        throw CapacityError("stanley_f guard: inv(w) <= cell guard");
    QSymExpr out;
    for (const auto& rw : all_reduced_words(w))
        out.add(comp_from_set(descent_set(rw), len), 1);
    return out;
}

QSymExpr schur(const std::vector<int>& lambda) {
    QSymExpr out;
    if (lambda.empty()) return out.add({}, 1);
    int sz = std::accumulate(lambda.begin(), lambda.end(), 0);
    for (const auto& t : enumerate_syt(lambda))
        out.add(comp_from_set(tableau_descents(t), sz), 1);
    return out;
}

QSymExpr young_quasi_schur(const Composition& alpha) {
    QSymExpr out;
    if (alpha.empty()) return out.add({}, 1);
    int sz = comp_size(alpha);
    for (const auto& y : enumerate_syct(alpha))
        out.add(comp_from_set(syct_descents(y), sz), 1);
    return out;
}

QSymExpr lmf(const SimpleGraph& g) {
    auto lat = build_lattice(g);
    QSymExpr out;
    for (const auto& rw : longest_chain_words(lat))
        out.add(comp_from_set(descent_set(rw), rw.size()), 1);
    return out;
}

QSymExpr chain_function_fg(const SimpleGraph& g) {
    auto lat = build_lattice(g);
    QSymExpr out;
    for (const auto& chain : maximal_chains(lat)) {
        CycleWord gamma = chain_to_cycles(lat, chain);
        out.add(comp_from_set(cycle_descents(gamma),
                              static_cast<int>(gamma.cycles.size())),
                1);
    }
    return out;
}

std::vector<Composition> comp_mn(int m, int n) {
    if (m < 1 || n < 0) throw ArgumentError("comp_mn requires m >= 1, n >= 0");
    std::vector<int> prefix;
    for (int v = n + 1; v <= n + m - 1; ++v) prefix.push_back(v);
    std::vector<Composition> out;
    do {
        Composition a = prefix;
        for (int v = n; v >= 1; --v) a.push_back(v);
        out.push_back(std::move(a));
    } while (std::next_permutation(prefix.begin(), prefix.end()));
    std::sort(out.begin(), out.end(), CompOrder{});
    return out;
}

bool ExpandResult::nonnegative() const {
    for (const auto& [c, x] : coefficients)
        if (x < 0) return false;
    return true;
}

ExpandResult expand_in_basis(
    const QSymExpr& expr,
    const std::function<QSymExpr(const Composition&)>& basis) {
    if (!expr.is_homogeneous())
        throw ArgumentError("expansion requires a homogeneous expression");
    ExpandResult res;
    QSymExpr rest = expr;
    while (!rest.is_zero()) {
        auto lead = std::prev(rest.terms.end());  // (degree, lex)-greatest
        const Composition gamma = lead->first;
        long long c = lead->second;
        QSymExpr b = basis(gamma);
        auto bl = b.terms.empty() ? b.terms.end() : std::prev(b.terms.end());
        if (bl == b.terms.end() || bl->first != gamma || bl->second != 1) {
            res.ok = false;
            res.residue = rest;
            return res;
        }
        res.coefficients[gamma] += c;
        for (const auto& [idx, x] : b.terms) rest.add(idx, -c * x);
    }
    res.ok = true;
    return res;
}

ExpandResult expand_in_young_quasi_schur(const QSymExpr& expr) {
    return expand_in_basis(
        expr, [](const Composition& a) { return young_quasi_schur(a); });
}

ExpandResult expand_in_schur(const QSymExpr& expr) {
    return expand_in_basis(expr, [](const Composition& a) {
        for (std::size_t k = 0; k + 1 < a.size(); ++k)
            if (a[k] < a[k + 1]) return QSymExpr{};  // not a partition: no leading term
        return schur(a);
    });
}

}  // namespace tubing
