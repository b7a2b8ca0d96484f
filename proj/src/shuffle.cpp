#include "tubing/shuffle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "tubing/tableau.hpp"

namespace tubing {

Perm v_word(int m, int n) {
    if (m < 1 || n < 0) throw ArgumentError("v_word requires m >= 1, n >= 0");
    std::vector<int> w;
    for (int v = m; v <= m + n; ++v) w.push_back(v);
    for (int v = m - 1; v >= 1; --v) w.push_back(v);
    return Perm(std::move(w));
}

std::vector<TaggedShuffle> commuting_shuffles(const ReducedWord& sigma,
                                              const ReducedWord& tau) {
    if (sigma.n != tau.n) throw ArgumentError("ambient sizes differ");
    int n = sigma.n;
    std::vector<int> cat = sigma.letters;
    cat.insert(cat.end(), tau.letters.begin(), tau.letters.end());
    if (!is_reduced(cat, n))
        throw ArgumentError("sigma.tau must be reduced");

    int k = sigma.size(), len = k + tau.size();
    TaggedShuffle start;
    start.letters = ReducedWord(n, cat);
    for (int i = 1; i <= k; ++i) start.sigma_indices.push_back(i);
    for (int i = k + 1; i <= len; ++i) start.tau_indices.push_back(i);

    std::set<TaggedShuffle> seen{start};
    std::vector<TaggedShuffle> queue{start}, out;
    while (!queue.empty()) {
        TaggedShuffle cur = queue.back();
        queue.pop_back();
        out.push_back(cur);
        std::set<int> in_sigma(cur.sigma_indices.begin(), cur.sigma_indices.end());
        for (int i = 1; i < len; ++i) {
            if (!in_sigma.count(i) || in_sigma.count(i + 1)) continue;
            if (std::abs(cur.letters.letters[i - 1] - cur.letters.letters[i]) <= 1)
                continue;
            TaggedShuffle next = cur;
            std::swap(next.letters.letters[i - 1], next.letters.letters[i]);
            for (int& s : next.sigma_indices)
                if (s == i) s = i + 1;
            for (int& t : next.tau_indices)
                if (t == i + 1) t = i;
            std::sort(next.sigma_indices.begin(), next.sigma_indices.end());
            std::sort(next.tau_indices.begin(), next.tau_indices.end());
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ReducedWord> shuf(int m, int n) {
    if (m < 1 || n < 0) throw ArgumentError("shuf requires m >= 1, n >= 0");
    if (m + n > 7) throw CapacityError("shuf guard: m + n <= 7");
    int N = m + n;
    std::set<ReducedWord> words;
    auto taus = shiftable_words(n);
    for (auto& tau : taus) tau.n = N;  // letters at most n, reinterpreted in S_N
    for (const auto& sigma : all_reduced_words(v_word(m, n))) {
        for (const auto& tau : taus) {
            for (const auto& sh : commuting_shuffles(sigma, tau))
                words.insert(sh.letters);
        }
    }
    return {words.begin(), words.end()};
}

DecreasingSequences decreasing_sequences(const ReducedWord& sigma, int m, int n) {
    if (evaluate(sigma) != v_word(m, n) || !is_reduced(sigma))
        throw InvariantError("word is not a reduced word of v_{m,n}");
    int N = m + n;
    DecreasingSequences out;
    out.d.assign(n + 1, {});
    Perm w = Perm::identity(N);
    for (int t = 1; t <= sigma.size(); ++t) {
        int i = sigma.letters[t - 1];
        int moving_left = w(i + 1), moving_right = w(i);
        if (moving_right == 1) out.a.push_back(t);
        if (moving_left >= m && moving_left <= m + n)
            out.d[moving_left - m].push_back(t);
        std::swap(w.word[i - 1], w.word[i]);
    }
    // d[j] tracks value j+m moving left; its run k = m-1+j has letters
    // k, k-1, ..., k-m+2
    for (int j = 0; j <= n; ++j) {
        int k = m - 1 + j;
        if (static_cast<int>(out.d[j].size()) != m - 1)
            throw InvariantError("decreasing sequence has wrong length");
        for (int h = 0; h < m - 1; ++h)
            if (sigma.letters[out.d[j][h] - 1] != k - h)
                throw InvariantError("decreasing sequence letters mismatch");
    }
    if (static_cast<int>(out.a.size()) != N - 1)
        throw InvariantError("ascending witness has wrong length");
    for (int h = 0; h < N - 1; ++h)
        if (sigma.letters[out.a[h] - 1] != h + 1)
            throw InvariantError("ascending witness letters mismatch");
    return out;
}

bool is_lattice_word(const std::vector<int>& word) {
    std::vector<int> count;
    for (int x : word) {
        if (x < 1) throw ArgumentError("lattice words use positive integers");
        if (static_cast<int>(count.size()) < x + 1) count.resize(x + 1, 0);
        ++count[x - 1];
        if (x > 1 && count[x - 1] > count[x - 2]) return false;
    }
    return true;
}

bool is_reverse_lattice_word(const std::vector<int>& word) {
    std::vector<int> rev(word.rbegin(), word.rend());
    return is_lattice_word(rev);
}

}  // namespace tubing
