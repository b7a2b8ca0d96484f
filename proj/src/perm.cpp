#include "tubing/perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <sstream>

namespace tubing {

int max_enumeration_cells() {
    if (const char* env = std::getenv("TUBING_MAX_CELLS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 21;
}

Perm Perm::identity(int n) {
    if (n < 1) throw ArgumentError("permutation size must be at least 1");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
}

bool Perm::is_valid() const {
    int n = size();
    if (n < 1) return false;
    std::vector<bool> seen(n + 1, false);
    for (int v : word) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<int> parse_letters(const std::string& s) {
    std::vector<int> out;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            out.push_back(std::stoi(tok));
        }
        return out;
    }
    for (char c : s) {
        if (c < '1' || c > '9') throw ArgumentError("cannot parse word: " + s);
        out.push_back(c - '0');
    }
    return out;
}

std::string letters_to_string(const std::vector<int>& letters) {
    bool digits = std::all_of(letters.begin(), letters.end(),
                              [](int l) { return l >= 1 && l <= 9; });
    std::string s;
    for (std::size_t k = 0; k < letters.size(); ++k) {
        if (digits) {
            s += static_cast<char>('0' + letters[k]);
        } else {
            if (k) s += ',';
            s += std::to_string(letters[k]);
        }
    }
    return s;
}

Perm longest_permutation(int n) {
    if (n < 1) throw ArgumentError("permutation size must be at least 1");
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Perm(std::move(w));
}

Perm apply_transposition(const Perm& w, int i) {
    if (i < 1 || i >= w.size())
        throw ArgumentError("transposition index out of range");
    Perm v = w;
    std::swap(v.word[i - 1], v.word[i]);
    return v;
}

Perm evaluate(const ReducedWord& rw) {
    Perm w = Perm::identity(rw.n);
    for (int l : rw.letters) {
        if (l < 1 || l >= rw.n)
            throw ArgumentError("letter out of range for ambient n");
        std::swap(w.word[l - 1], w.word[l]);
    }
    return w;
}

bool is_reduced(const std::vector<int>& letters, int n) {
    Perm w = evaluate(ReducedWord(n, letters));
    return inversion_count(w) == static_cast<int>(letters.size());
}

bool is_reduced(const ReducedWord& rw) { return is_reduced(rw.letters, rw.n); }

std::set<Inversion> inversions(const Perm& w) {
    std::set<Inversion> inv;
    int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) inv.insert({w(j), w(i)});
    return inv;
}

int inversion_count(const Perm& w) {
    int n = w.size(), c = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++c;
    return c;
}

std::vector<std::pair<Perm, int>> weak_order_covers(const Perm& w) {
    std::vector<std::pair<Perm, int>> out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) < w(i + 1)) out.emplace_back(apply_transposition(w, i), i);
    return out;
}

std::vector<int> right_descents(const Perm& w) {
    std::vector<int> out;
    for (int i = 1; i < w.size(); ++i)
        if (w(i) > w(i + 1)) out.push_back(i);
    return out;
}

namespace {

// Strip a final descent and recurse; memoized per permutation.
const std::vector<std::vector<int>>& reduced_words_memo(
    const Perm& w, std::map<Perm, std::vector<std::vector<int>>>& memo) {
    auto it = memo.find(w);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<int>> words;
    auto descents = right_descents(w);
    if (descents.empty()) {
        words.push_back({});
    } else {
        for (int i : descents) {
            Perm u = apply_transposition(w, i);
            for (const auto& prefix : reduced_words_memo(u, memo)) {
                std::vector<int> word = prefix;
                word.push_back(i);
                words.push_back(std::move(word));
            }
        }
    }
    std::sort(words.begin(), words.end());
    return memo.emplace(w, std::move(words)).first->second;
}

}  // namespace

std::vector<ReducedWord> all_reduced_words(const Perm& w) {
    if (!w.is_valid()) throw ArgumentError("invalid permutation");
    std::map<Perm, std::vector<std::vector<int>>> memo;
    const auto& raw = reduced_words_memo(w, memo);
    std::vector<ReducedWord> out;
    out.reserve(raw.size());
    for (const auto& letters : raw) out.emplace_back(w.size(), letters);
    return out;
}

std::uint64_t reduced_word_count(const Perm& w) {
    std::map<Perm, std::uint64_t> memo;
    auto rec = [&](auto&& self, const Perm& v) -> std::uint64_t {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        auto descents = right_descents(v);
        std::uint64_t c = 0;
        if (descents.empty()) {
            c = 1;
        } else {
            for (int i : descents) c += self(self, apply_transposition(v, i));
        }
        memo.emplace(v, c);
        return c;
    };
    return rec(rec, w);
}

std::set<int> descent_set(const ReducedWord& rw) {
    std::set<int> des;
    for (int i = 1; i < rw.size(); ++i)
        if (rw.letters[i - 1] > rw.letters[i]) des.insert(i);
    return des;
}

std::set<ReducedWord> tits_neighbors(const ReducedWord& rw) {
    std::set<ReducedWord> out;
    const auto& l = rw.letters;
    int len = rw.size();
    for (int k = 0; k + 1 < len; ++k) {
        if (std::abs(l[k] - l[k + 1]) > 1) {
            ReducedWord v = rw;
            std::swap(v.letters[k], v.letters[k + 1]);
            out.insert(std::move(v));
        }
    }
    for (int k = 0; k + 2 < len; ++k) {
        if (l[k] == l[k + 2] && std::abs(l[k] - l[k + 1]) == 1) {
            ReducedWord v = rw;  // aba -> bab
            v.letters[k] = l[k + 1];
            v.letters[k + 1] = l[k];
            v.letters[k + 2] = l[k + 1];
            out.insert(std::move(v));
        }
    }
    return out;
}

}  // namespace tubing
