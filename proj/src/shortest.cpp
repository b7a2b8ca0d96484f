#include "tubing/shortest.hpp"

#include <algorithm>

namespace tubing {

Perm w_mn(int m, int n) {
    if (m < 1 || n < 0) throw ArgumentError("w_mn requires m >= 1, n >= 0");
    std::vector<int> w{m + n};
    for (int v = m - 1; v >= 1; --v) w.push_back(v);
    for (int v = m; v <= m + n - 1; ++v) w.push_back(v);
    return Perm(std::move(w));
}

Perm apply_cycle(const Perm& u, const AdjacentCycle& c) {
    if (c.a < 1 || c.a >= c.b || c.b > u.size())
        throw ArgumentError("cycle out of range");
    Perm v = u;
    int moved = u(c.b);
    for (int i = c.b; i > c.a; --i) v.at(i) = u(i - 1);
    v.at(c.a) = moved;
    return v;
}

std::vector<std::pair<int, int>> smb_cells(int m, int n) {
    if (m < 1 || n < 0) throw ArgumentError("need m >= 1, n >= 0");
    int N = m + n;
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= m - 1; ++i)          // shifted staircase block
        for (int j = n + 1; j <= N - i; ++j) cells.push_back({i, j});
    for (int i = m; i <= N - 1; ++i) cells.push_back({i, N - i});  // diagonal
    return cells;
}

bool is_smb(const GridTableau& b, int m, int n) {
    int N = m + n;
    auto cells = smb_cells(m, n);
    if (b.cell_count() != static_cast<int>(cells.size())) return false;
    for (auto [i, j] : cells)
        if (!b.has_cell(i, j)) return false;
    std::vector<int> vals;
    for (const auto& [cell, v] : b.cells) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    for (std::size_t k = 0; k < vals.size(); ++k)
        if (vals[k] != static_cast<int>(k) + 1) return false;
    if (!is_balanced(b)) return false;
    for (int i = N - 1; i > m; --i)  // diagonal increases up the antidiagonal
        if (b.at(i, N - i) >= b.at(i - 1, N - i + 1)) return false;
    if (n >= 1)
        for (int i = 1; i <= m - 1; ++i)
            if (b.at(m, n) >= b.at(i, n + 1)) return false;
    return true;
}

std::vector<GridTableau> enumerate_smb(int m, int n) {
    if (m + n > 6) throw CapacityError("smb guard: m + n <= 6");
    auto cells = smb_cells(m, n);
    int M = static_cast<int>(cells.size());
    // bottom-to-top, right-to-left: each placement completes its own hook
    std::sort(cells.begin(), cells.end(), [](auto x, auto y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second > y.second;
    });
    GridTableau t;
    std::vector<bool> used(M + 1, false);
    std::vector<GridTableau> out;
    auto balanced_at = [&](int i, int j) {
        int x = t.at(i, j), leg = 0, le = 0;
        for (int i2 = i; t.has_cell(i2, j); ++i2) {
            ++leg;
            if (t.at(i2, j) <= x) ++le;
        }
        for (int j2 = j + 1; t.has_cell(i, j2); ++j2)
            if (t.at(i, j2) <= x) ++le;
        return le == leg;
    };
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == M) {
            if (is_smb(t, m, n)) out.push_back(t);
            return;
        }
        auto [i, j] = cells[idx];
        for (int v = 1; v <= M; ++v) {
            if (used[v]) continue;
            t.cells[{i, j}] = v;
            used[v] = true;
            if (balanced_at(i, j)) self(self, idx + 1);
            used[v] = false;
        }
        t.cells.erase({i, j});
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Tableau lift_smb(const GridTableau& b, int m, int n) {
    if (!is_smb(b, m, n)) throw ArgumentError("not an SMB tableau");
    int N = m + n;
    GridTableau cur = b;
    for (int k = n; k >= 1; --k) {
        for (int i = N - k - 1; i >= 1; --i) {
            // numbers right of and below (i,k), in increasing order, each
            // tagged east or south
            std::vector<std::pair<int, bool>> h;  // (value, is_south)
            for (int j2 = k + 1; cur.has_cell(i, j2); ++j2)
                h.push_back({cur.at(i, j2), false});
            for (int i2 = i + 1; cur.has_cell(i2, k); ++i2)
                h.push_back({cur.at(i2, k), true});
            std::sort(h.begin(), h.end());
            int want = N - k - i;
            if (want < 1 || want > static_cast<int>(h.size()) ||
                !h[want - 1].second)
                throw InvariantError("lift: expected a south step");
            int y = h[want - 1].first;
            for (auto& [cell, v] : cur.cells)
                if (v >= y + 1) ++v;
            cur.cells[{i, k}] = y + 1;
        }
    }
    Tableau out = to_rows(cur);
    if (out.shape() != staircase(N) || !is_balanced(out))
        throw InvariantError("lift did not produce a balanced staircase");
    return out;
}

ReducedWord varsigma(const GridTableau& b, int m, int n) {
    if (!is_smb(b, m, n)) throw ArgumentError("not an SMB tableau");
    int N = m + n;
    int len = n + m * (m - 1) / 2;
    std::vector<int> letters(len, 0);
    for (int i = N - 1; i >= m; --i)  // diagonal carries m+n-1 down to m
        letters[b.at(i, N - i) - 1] = i;
    // right block, standardized, is a balanced st_m tableau; read its word
    GridTableau block;
    std::vector<int> positions;
    for (auto [cell, v] : b.cells) {
        auto [i, j] = cell;
        if (j > n) {
            block.cells[{i, j - n}] = v;
            positions.push_back(v);
        }
    }
    std::sort(positions.begin(), positions.end());
    if (m >= 2) {
        Tableau R = to_rows(standardize(block));
        ReducedWord rho = walk_to_word(balanced_to_walk(R), m);
        for (int k = 0; k < rho.size(); ++k)
            letters[positions[k] - 1] = rho.letters[k];
    }
    ReducedWord sigma(N, std::move(letters));
    if (evaluate(sigma) != w_mn(m, n) || !is_reduced(sigma))
        throw InvariantError("varsigma output is not a word of w_{m,n}");
    return sigma;
}

GridTableau varsigma_inverse(const ReducedWord& sigma, int m, int n) {
    int N = m + n;
    if (sigma.n != N || evaluate(sigma) != w_mn(m, n) || !is_reduced(sigma))
        throw ArgumentError("expected a reduced word of w_{m,n}");
    GridTableau b;
    std::vector<int> rho;      // letters < m in order
    std::vector<int> rho_pos;  // their positions
    for (int k = 1; k <= sigma.size(); ++k) {
        int l = sigma.letters[k - 1];
        if (l >= m) {
            b.cells[{l, N - l}] = k;  // diagonal cell (i, N-i) carries letter i
        } else {
            rho.push_back(l);
            rho_pos.push_back(k);
        }
    }
    if (m >= 2) {
        auto walk = word_to_walk(ReducedWord(m, rho));
        Tableau R = walk_to_balanced(walk, m);
        for (int i = 1; i <= R.row_count(); ++i)
            for (int j = 1; j <= R.row_length(i); ++j)
                b.cells[{i, j + n}] = rho_pos[R.at(i, j) - 1];
    }
    if (!is_smb(b, m, n))
        throw ArgumentError("word does not correspond to an SMB tableau");
    return b;
}

CycleWord psi(const ReducedWord& sigma, int m, int n) {
    int N = m + n;
    if (sigma.n != N || evaluate(sigma) != w_mn(m, n) || !is_reduced(sigma))
        throw ArgumentError("expected a reduced word of w_{m,n}");
    CycleWord gamma;
    gamma.n = N;
    int big_seen = 0;
    for (int l : sigma.letters) {
        if (l >= m) {
            gamma.cycles.push_back({N - l, N});
            ++big_seen;
        } else {
            gamma.cycles.push_back({l + big_seen, l + big_seen + 1});
        }
    }
    return gamma;
}

CycleWord chain_to_cycles(const TubingLattice& lat, const Chain& chain) {
    CycleWord gamma;
    gamma.n = lat.graph.n;
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
        const Perm& u = lat.max_rep[chain[k]];
        const Perm& v = lat.max_rep[chain[k + 1]];
        int a = 0, b = 0;
        for (int i = 1; i <= u.size(); ++i)
            if (u(i) != v(i)) {
                a = i;
                break;
            }
        for (int i = u.size(); i >= 1; --i)
            if (u(i) != v(i)) {
                b = i;
                break;
            }
        if (a == 0 || apply_cycle(u, {a, b}) != v)
            throw InvariantError("cover is not an adjacent cycle on maxima");
        gamma.cycles.push_back({a, b});
    }
    return gamma;
}

std::set<int> cycle_descents(const CycleWord& gamma) {
    std::set<int> des;
    for (std::size_t i = 1; i < gamma.cycles.size(); ++i)
        if (gamma.cycles[i - 1].b >= gamma.cycles[i].b)
            des.insert(static_cast<int>(i));
    return des;
}

}  // namespace tubing
