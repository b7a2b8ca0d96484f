#include "tubing/tableau.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "tubing/shuffle.hpp"

namespace tubing {

int Tableau::cell_count() const {
    int c = 0;
    for (const auto& r : rows) c += static_cast<int>(r.size());
    return c;
}

std::vector<int> Tableau::shape() const {
    std::vector<int> s;
    s.reserve(rows.size());
    for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
    return s;
}

bool Tableau::has_partition_shape() const {
    for (int i = 1; i < row_count(); ++i)
        if (row_length(i) < row_length(i + 1)) return false;
    return row_count() == 0 || row_length(row_count()) >= 1;
}

std::vector<int> staircase(int n) {
    std::vector<int> s;
    for (int k = n - 1; k >= 1; --k) s.push_back(k);
    return s;
}

GridTableau to_grid(const Tableau& t) {
    GridTableau g;
    for (int i = 1; i <= t.row_count(); ++i)
        for (int j = 1; j <= t.row_length(i); ++j) g.cells[{i, j}] = t.at(i, j);
    return g;
}

Tableau to_rows(const GridTableau& t) {
    Tableau out;
    for (const auto& [cell, v] : t.cells) {
        auto [i, j] = cell;
        if (i < 1 || j < 1) throw ArgumentError("cell out of range");
        if (static_cast<int>(out.rows.size()) < i) out.rows.resize(i);
        if (static_cast<int>(out.rows[i - 1].size()) + 1 != j)
            throw ArgumentError("cells are not left-justified rows");
        out.rows[i - 1].push_back(v);
    }
    return out;
}

namespace {

bool entries_are_standard(const std::vector<int>& entries) {
    std::vector<int> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t k = 0; k < sorted.size(); ++k)
        if (sorted[k] != static_cast<int>(k) + 1) return false;
    return true;
}

std::vector<int> all_entries(const Tableau& t) {
    std::vector<int> out;
    for (const auto& r : t.rows) out.insert(out.end(), r.begin(), r.end());
    return out;
}

}  // namespace

bool is_syt(const Tableau& t) {
    if (!t.has_partition_shape()) return false;
    if (!entries_are_standard(all_entries(t))) return false;
    for (int i = 1; i <= t.row_count(); ++i)
        for (int j = 2; j <= t.row_length(i); ++j)
            if (t.at(i, j - 1) >= t.at(i, j)) return false;
    for (int i = 2; i <= t.row_count(); ++i)
        for (int j = 1; j <= t.row_length(i); ++j)
            if (t.at(i - 1, j) >= t.at(i, j)) return false;
    return true;
}

bool is_balanced(const GridTableau& t) {
    for (const auto& [cell, x] : t.cells) {
        auto [i, j] = cell;
        int leg = 0, below_or_self = 0;
        for (int i2 = i; t.has_cell(i2, j); ++i2) {
            ++leg;
            if (t.at(i2, j) <= x) ++below_or_self;
        }
        int right = 0;
        for (int j2 = j + 1; t.has_cell(i, j2); ++j2)
            if (t.at(i, j2) <= x) ++right;
        if (below_or_self + right != leg) return false;
    }
    return true;
}

bool is_balanced(const Tableau& t) { return is_balanced(to_grid(t)); }

bool is_n_row_shiftable(const Tableau& t, int n) {
    int N = t.row_count() + 1;
    if (t.shape() != staircase(N))
        throw ArgumentError("shiftability is defined on staircase shapes");
    if (!is_syt(t)) throw ArgumentError("shiftability requires a standard tableau");
    if (n < 0 || n >= N) throw ArgumentError("need 0 <= n < N");
    for (int i = std::max(1, N - n - 1); i <= N - 2; ++i)
        for (int j = 2; j <= t.row_length(i); ++j)
            if (t.at(i, j) >= t.at(i + 1, j - 1)) return false;
    return true;
}

bool is_syct(const Tableau& t) {
    for (const auto& r : t.rows)
        if (r.empty()) return false;
    if (t.row_count() == 0) return false;
    if (!entries_are_standard(all_entries(t))) return false;
    // rows weakly increase; entries are distinct, so strictly
    for (int i = 1; i <= t.row_count(); ++i)
        for (int j = 2; j <= t.row_length(i); ++j)
            if (t.at(i, j - 1) >= t.at(i, j)) return false;
    for (int i = 2; i <= t.row_count(); ++i)
        if (t.at(i - 1, 1) >= t.at(i, 1)) return false;
    // triple rule, cells outside the shape read as +infinity
    for (int j = 1; j <= t.row_count(); ++j)
        for (int k = 1; k + 1 <= t.row_length(j); ++k) {
            int a = t.at(j, k + 1);
            for (int i = j + 1; i <= t.row_count(); ++i) {
                if (!t.has_cell(i, k)) continue;
                if (t.at(i, k) <= a) {
                    if (!t.has_cell(i, k + 1) || t.at(i, k + 1) >= a)
                        return false;
                }
            }
        }
    return true;
}

Tableau walk_to_balanced(const std::vector<Inversion>& walk, int N) {
    int M = N * (N - 1) / 2;
    if (static_cast<int>(walk.size()) != M)
        throw ArgumentError("walk must have length C(N,2)");
    std::set<Inversion> seen;
    Tableau t;
    for (int k = N - 1; k >= 1; --k) t.rows.emplace_back(k, 0);
    for (int k = 1; k <= M; ++k) {
        auto [a, b] = walk[k - 1];
        if (a < 1 || a >= b || b > N || !seen.insert({a, b}).second)
            throw ArgumentError("walk is not a permutation of all pairs");
        t.at(a, N - b + 1) = k;
    }
    return t;
}

std::vector<Inversion> balanced_to_walk(const Tableau& t) {
    int N = t.row_count() + 1;
    if (t.shape() != staircase(N))
        throw ArgumentError("expected a staircase tableau");
    int M = N * (N - 1) / 2;
    std::vector<Inversion> walk(M, {0, 0});
    for (int i = 1; i <= t.row_count(); ++i)
        for (int j = 1; j <= t.row_length(i); ++j) {
            int k = t.at(i, j);
            if (k < 1 || k > M || walk[k - 1] != Inversion{0, 0})
                throw ArgumentError("entries must be 1..C(N,2), each once");
            walk[k - 1] = {i, N - j + 1};
        }
    return walk;
}

std::vector<Inversion> word_to_walk(const ReducedWord& rw) {
    Perm w = Perm::identity(rw.n);
    std::vector<Inversion> walk;
    walk.reserve(rw.size());
    for (int l : rw.letters) {
        if (l < 1 || l >= rw.n) throw ArgumentError("letter out of range");
        int a = w(l), b = w(l + 1);
        if (a > b) throw ArgumentError("word is not reduced");
        walk.push_back({a, b});
        std::swap(w.word[l - 1], w.word[l]);
    }
    return walk;
}

ReducedWord walk_to_word(const std::vector<Inversion>& walk, int N) {
    Perm w = Perm::identity(N);
    std::vector<int> letters;
    letters.reserve(walk.size());
    for (auto [a, b] : walk) {
        int pos = 0;
        for (int i = 1; i < N; ++i)
            if (w(i) == a && w(i + 1) == b) { pos = i; break; }
        if (pos == 0)
            throw ArgumentError("walk step (a,b) not adjacent in the chain");
        letters.push_back(pos);
        std::swap(w.word[pos - 1], w.word[pos]);
    }
    return ReducedWord(N, std::move(letters));
}

std::pair<Tableau, Tableau> eg_insert(const ReducedWord& rw) {
    if (!is_reduced(rw)) throw ArgumentError("word is not reduced");
    Tableau P, Q;
    for (int k = 1; k <= rw.size(); ++k) {
        int x = rw.letters[k - 1];
        int row = 1;
        for (;; ++row) {
            if (row > P.row_count()) {
                P.rows.emplace_back();
                Q.rows.emplace_back();
            }
            auto& R = P.rows[row - 1];
            if (R.empty() || R.back() < x) {
                R.push_back(x);
                Q.rows[row - 1].push_back(k);
                break;
            }
            auto it = std::lower_bound(R.begin(), R.end(), x);
            if (*it == x) {
                x = x + 1;  // bump without changing the row
            } else {
                int z = *it;
                *it = x;
                x = z;
            }
        }
    }
    return {P, Q};
}

Tableau eg_q(const ReducedWord& rw) { return eg_insert(rw).second; }

namespace {

void check_increasing_grid(const Tableau& t) {
    if (!t.has_partition_shape())
        throw ArgumentError("expected a partition-shaped tableau");
    for (int i = 1; i <= t.row_count(); ++i)
        for (int j = 2; j <= t.row_length(i); ++j)
            if (t.at(i, j - 1) >= t.at(i, j))
                throw ArgumentError("rows must increase");
    for (int i = 2; i <= t.row_count(); ++i)
        for (int j = 1; j <= t.row_length(i); ++j)
            if (t.at(i - 1, j) >= t.at(i, j))
                throw ArgumentError("columns must increase");
}

std::pair<int, int> largest_entry_cell(const Tableau& t) {
    std::pair<int, int> cell{0, 0};
    int best = std::numeric_limits<int>::min();
    for (int i = 1; i <= t.row_count(); ++i)
        for (int j = 1; j <= t.row_length(i); ++j)
            if (t.at(i, j) > best) {
                best = t.at(i, j);
                cell = {i, j};
            }
    return cell;
}

}  // namespace

Tableau elementary_promotion(const Tableau& t) {
    check_increasing_grid(t);
    if (t.cell_count() == 0) throw ArgumentError("empty tableau");
    auto [p, q] = largest_entry_cell(t);
    int old_min = t.at(1, 1);  // rows and columns increase
    std::vector<std::pair<int, int>> path{{p, q}};
    while (path.back() != std::pair<int, int>{1, 1}) {
        auto [pi, qi] = path.back();
        if (qi == 1 || (pi > 1 && t.at(pi - 1, qi) > t.at(pi, qi - 1)))
            path.push_back({pi - 1, qi});
        else
            path.push_back({pi, qi - 1});
    }
    Tableau out = t;
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        out.at(path[k].first, path[k].second) =
            t.at(path[k + 1].first, path[k + 1].second);
    out.at(1, 1) = old_min - 1;
    return out;
}

ReducedWord gamma_word(const Tableau& t) {
    if (!is_syt(t)) throw ArgumentError("gamma expects a standard Young tableau");
    int M = t.cell_count();
    int n = t.row_length(1) + 1;
    std::vector<int> letters(M);
    Tableau cur = t;
    for (int k = 1; k <= M; ++k) {
        letters[M - k] = largest_entry_cell(cur).second;
        cur = elementary_promotion(cur);
    }
    return ReducedWord(n, std::move(letters));
}

namespace {

bool matches_lattice_characterization(const ReducedWord& rw, int n) {
    std::vector<int> count(n + 2, 0);
    for (int l : rw.letters) ++count[l];
    for (int i = 1; i <= n; ++i)
        if (count[i] != n - i + 1) return false;
    std::vector<int> rev(rw.letters.rbegin(), rw.letters.rend());
    return is_lattice_word(rw.letters) && is_lattice_word(rev);
}

// Backtracking over fully shiftable staircase SYT: appending k at (r,c)
// is legal unless the cell (r+1, c-1) is already filled, since entries
// are placed in increasing order.
std::vector<Tableau> enumerate_shiftable_staircase(int N) {
    auto shape = staircase(N);
    int M = N * (N - 1) / 2;
    Tableau t;
    for (int len : shape) t.rows.emplace_back(len, 0);
    std::vector<int> fill(shape.size(), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int k) -> void {
        if (k > M) {
            out.push_back(t);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (fill[r] == shape[r]) continue;
            if (r > 0 && fill[r - 1] <= fill[r]) continue;  // column rule
            if (fill[r] >= 1 && r + 1 < shape.size() && fill[r + 1] >= fill[r])
                continue;  // shiftability at (r+1, c-1)
            t.rows[r][fill[r]++] = k;
            self(self, k + 1);
            fill[r]--;
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

std::vector<ReducedWord> shiftable_words(int n) {
    if (n < 0) throw ArgumentError("need n >= 0");
    if (n == 0) return {ReducedWord(1, {})};
    std::vector<ReducedWord> out;
    for (const auto& t : enumerate_shiftable_staircase(n + 1)) {
        ReducedWord rw = gamma_word(t);
        if (!matches_lattice_characterization(rw, n) || eg_q(rw) != t)
            throw InvariantError("shiftable-word characterizations disagree");
        out.push_back(std::move(rw));
    }
    // at small sizes, cross-check against the filtered full enumeration
    if (n <= 4) {
        std::set<ReducedWord> direct(out.begin(), out.end());
        for (const auto& rw : all_reduced_words(longest_permutation(n + 1))) {
            bool by_tableau = is_n_row_shiftable(eg_q(rw), n);
            bool by_lattice = matches_lattice_characterization(rw, n);
            if (by_tableau != by_lattice || by_tableau != direct.count(rw))
                throw InvariantError("shiftable-word characterizations disagree");
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Tableau rho_hat(const Tableau& syct) {
    std::vector<std::vector<int>> rows = syct.rows;
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.size() > b.size(); });
    Tableau out{rows};
    for (int j = 1; out.row_count() > 0 && j <= out.row_length(1); ++j) {
        std::vector<int> col;
        for (int i = 1; i <= out.row_count() && out.has_cell(i, j); ++i)
            col.push_back(out.at(i, j));
        std::sort(col.begin(), col.end());
        for (std::size_t k = 0; k < col.size(); ++k)
            out.at(static_cast<int>(k) + 1, j) = col[k];
    }
    return out;
}

Tableau rho_hat_inverse(const Tableau& syt) {
    Tableau out;
    for (int i = 1; i <= syt.row_count(); ++i)
        out.rows.push_back({syt.at(i, 1)});
    int cols = syt.row_count() ? syt.row_length(1) : 0;
    for (int c = 2; c <= cols; ++c) {
        std::vector<int> col;
        for (int i = 1; i <= syt.row_count() && syt.has_cell(i, c); ++i)
            col.push_back(syt.at(i, c));
        std::sort(col.begin(), col.end());
        for (int e : col) {
            int target = 0;
            for (int r = out.row_count(); r >= 1; --r) {
                if (out.row_length(r) == c - 1 && out.rows[r - 1].back() <= e) {
                    target = r;
                    break;
                }
            }
            if (target == 0)
                throw ArgumentError("rho_hat_inverse: no admissible row");
            out.rows[target - 1].push_back(e);
        }
    }
    return out;
}

std::set<int> tableau_descents(const Tableau& syt) {
    int M = syt.cell_count();
    std::vector<int> row_of(M + 2, 0);
    for (int i = 1; i <= syt.row_count(); ++i)
        for (int j = 1; j <= syt.row_length(i); ++j) {
            int v = syt.at(i, j);
            if (v < 1 || v > M) throw ArgumentError("expected standard entries");
            row_of[v] = i;
        }
    std::set<int> des;
    for (int i = 1; i < M; ++i)
        if (row_of[i + 1] > row_of[i]) des.insert(i);
    return des;
}

std::set<int> syct_descents(const Tableau& syct) {
    return tableau_descents(rho_hat(syct));
}

Tableau standardize(const Tableau& t) {
    GridTableau g = standardize(to_grid(t));
    Tableau out = t;
    for (auto& [cell, v] : g.cells) out.at(cell.first, cell.second) = v;
    return out;
}

GridTableau standardize(const GridTableau& t) {
    std::vector<int> vals;
    vals.reserve(t.cells.size());
    for (const auto& [cell, v] : t.cells) vals.push_back(v);
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
        throw ArgumentError("standardize requires distinct entries");
    GridTableau out = t;
    for (auto& [cell, v] : out.cells)
        v = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), v) -
                             vals.begin()) + 1;
    return out;
}

namespace {

void check_enumeration_guard(int cells) {
    if (cells > max_enumeration_cells())
        throw CapacityError("shape exceeds the enumeration cell guard");
}

}  // namespace

std::vector<Tableau> enumerate_syt(const std::vector<int>& shape) {
    for (std::size_t i = 0; i + 1 < shape.size(); ++i)
        if (shape[i] < shape[i + 1]) throw ArgumentError("not a partition");
    int M = std::accumulate(shape.begin(), shape.end(), 0);
    check_enumeration_guard(M);
    Tableau t;
    for (int len : shape) {
        if (len < 1) throw ArgumentError("not a partition");
        t.rows.emplace_back(len, 0);
    }
    std::vector<int> fill(shape.size(), 0);  // cells used per row
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int k) -> void {
        if (k > M) {
            out.push_back(t);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            if (fill[r] == shape[r]) continue;
            if (r > 0 && fill[r - 1] <= fill[r]) continue;  // column rule
            t.rows[r][fill[r]++] = k;
            self(self, k + 1);
            fill[r]--;
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<Tableau> enumerate_syct(const std::vector<int>& comp) {
    int M = std::accumulate(comp.begin(), comp.end(), 0);
    check_enumeration_guard(M);
    for (int p : comp)
        if (p < 1) throw ArgumentError("composition parts must be positive");
    Tableau t;
    for (int len : comp) t.rows.emplace_back(len, 0);
    std::vector<int> fill(comp.size(), 0);
    std::vector<Tableau> out;
    auto rec = [&](auto&& self, int k) -> void {
        if (k > M) {
            if (is_syct(t)) out.push_back(t);
            return;
        }
        for (std::size_t r = 0; r < comp.size(); ++r) {
            if (fill[r] == comp[r]) continue;
            if (fill[r] == 0 && r > 0 && fill[r - 1] == 0)
                continue;  // first column must grow downward in order
            t.rows[r][fill[r]++] = k;
            self(self, k + 1);
            fill[r]--;
        }
    };
    rec(rec, 1);
    return out;
}

std::vector<Tableau> enumerate_balanced(const std::vector<int>& shape) {
    for (std::size_t i = 0; i + 1 < shape.size(); ++i)
        if (shape[i] < shape[i + 1]) throw ArgumentError("not a partition");
    int M = std::accumulate(shape.begin(), shape.end(), 0);
    check_enumeration_guard(M);
    // placing bottom-to-top and right-to-left completes each hook on
    // placement, so balance prunes immediately
    std::vector<std::pair<int, int>> order;
    for (int i = static_cast<int>(shape.size()); i >= 1; --i)
        for (int j = shape[i - 1]; j >= 1; --j) order.push_back({i, j});
    Tableau t;
    for (int len : shape) t.rows.emplace_back(len, 0);
    std::vector<bool> used(M + 1, false);
    std::vector<Tableau> out;
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
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            out.push_back(t);
            return;
        }
        auto [i, j] = order[idx];
        for (int v = 1; v <= M; ++v) {
            if (used[v]) continue;
            t.at(i, j) = v;
            used[v] = true;
            if (balanced_at(i, j)) self(self, idx + 1);
            used[v] = false;
        }
        t.at(i, j) = 0;
    };
    rec(rec, 0);
    return out;
}

}  // namespace tubing
