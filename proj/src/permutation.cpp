#include "stanley/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace stanley {

namespace {

void check_bijection(const std::vector<int>& oneline) {
    const int n = static_cast<int>(oneline.size());
    std::vector<char> seen(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        const int v = oneline[i];
        if (v < 1 || v > n)
            throw invalid_input("entry " + std::to_string(v) + " at position " +
                                std::to_string(i + 1) + " is outside 1.." + std::to_string(n));
        if (seen[v])
            throw invalid_input("duplicate entry " + std::to_string(v) + " at position " +
                                std::to_string(i + 1));
        seen[v] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> oneline) : oneline_(std::move(oneline)) {
    check_bijection(oneline_);
    while (!oneline_.empty() && oneline_.back() == static_cast<int>(oneline_.size()))
        oneline_.pop_back();
}

int Permutation::position_of(int value) const {
    for (int i = 0; i < size(); ++i)
        if (oneline_[i] == value) return i + 1;
    return value;  // fixed point beyond the stored window
}

std::string Permutation::str() const {
    if (oneline_.empty()) return "id";
    std::string out;
    const bool compact = size() <= 9;
    for (int i = 0; i < size(); ++i) {
        if (!compact && i > 0) out += ' ';
        out += std::to_string(oneline_[i]);
    }
    return out;
}

Permutation Permutation::parse(const std::string& text) {
    if (text.empty()) throw invalid_input("empty permutation literal");
    if (text == "id" || text == "e") return Permutation{};

    const bool delimited =
        text.find(' ') != std::string::npos || text.find(',') != std::string::npos;
    std::vector<int> vals;
    if (!delimited) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i])))
                throw invalid_input("unexpected character '" + std::string(1, text[i]) +
                                    "' at position " + std::to_string(i + 1));
            vals.push_back(text[i] - '0');
        }
        if (vals.size() > 9)
            throw invalid_input("compact permutation form is only valid for n <= 9");
    } else {
        std::size_t i = 0;
        while (i < text.size()) {
            while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i;
            if (i == text.size()) break;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start)
                throw invalid_input("unexpected character '" + std::string(1, text[i]) +
                                    "' at position " + std::to_string(i + 1));
            vals.push_back(std::stoi(text.substr(start, i - start)));
        }
    }
    try {
        return Permutation(std::move(vals));
    } catch (const invalid_input& e) {
        throw invalid_input(std::string("invalid permutation \"") + text + "\": " + e.what());
    }
}

Code::Code(std::vector<int> e) : entries(std::move(e)) {
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (entries[i] < 0)
            throw invalid_input("negative code entry at position " + std::to_string(i + 1));
}

int length(const Permutation& w) {
    int inv = 0;
    const int n = w.size();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

Code code(const Permutation& w) {
    const int n = w.size();
    std::vector<int> c(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(j) < w(i)) ++c[i - 1];
    return Code(std::move(c));
}

Permutation code_inverse(const Code& c) {
    int frame = static_cast<int>(c.entries.size());
    for (std::size_t k = 0; k < c.entries.size(); ++k)
        frame = std::max(frame, c.entries[k] + static_cast<int>(k) + 1);

    // w(k) is the (c_k+1)-th smallest unused value.
    std::vector<int> oneline;
    oneline.reserve(frame);
    std::vector<char> used(frame + 1, 0);
    for (int k = 0; k < frame; ++k) {
        const int want = k < static_cast<int>(c.entries.size()) ? c.entries[k] : 0;
        int rank = 0;
        int value = 0;
        for (int v = 1; v <= frame; ++v) {
            if (used[v]) continue;
            if (rank++ == want) {
                value = v;
                break;
            }
        }
        used[value] = 1;
        oneline.push_back(value);
    }
    return Permutation(std::move(oneline));
}

Permutation flatten(std::span<const int> values) {
    std::vector<int> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw invalid_input("flatten requires distinct entries");
    std::vector<int> oneline(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        oneline[i] = 1 + static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                           values[i]) -
                                          sorted.begin());
    return Permutation(std::move(oneline));
}

Permutation shift(int m, const Permutation& w) {
    if (m < 0) throw invalid_input("shift amount must be nonnegative");
    if (m == 0 || w.is_identity()) return w;
    std::vector<int> oneline(m + w.size());
    std::iota(oneline.begin(), oneline.begin() + m, 1);
    for (int i = 1; i <= w.size(); ++i) oneline[m + i - 1] = w(i) + m;
    return Permutation(std::move(oneline));
}

Permutation apply_transposition(const Permutation& w, int i, int j) {
    if (i < 1 || j < 1) throw invalid_input("transposition positions must be >= 1");
    const int n = std::max({w.size(), i, j});
    std::vector<int> oneline(n);
    for (int k = 1; k <= n; ++k) oneline[k - 1] = w(k);
    std::swap(oneline[i - 1], oneline[j - 1]);
    return Permutation(std::move(oneline));
}

namespace {

// Positional DFS: extend the occurrence left to right, requiring the next
// value's rank among the chosen values to match the pattern's.
struct ContainsSearch {
    const Permutation& w;
    std::span<const int> word;
    int n, k;
    std::vector<int> chosen_values;   // values picked so far, unsorted
    std::vector<int> chosen_pos;
    std::vector<std::vector<int>>* sink = nullptr;
    std::size_t max_count = SIZE_MAX;
    bool found = false;

    ContainsSearch(const Permutation& w_, std::span<const int> word_) : w(w_), word(word_) {
        n = w.size();
        k = static_cast<int>(word.size());
    }

    // rank of word[t] among word[0..t): how many of the already-placed
    // pattern values are below the next one.
    int pattern_rank(int t) const {
        int r = 0;
        for (int a = 0; a < t; ++a)
            if (word[a] < word[t]) ++r;
        return r;
    }

    bool extend(int t, int min_pos) {
        if (t == k) {
            found = true;
            if (sink) {
                sink->push_back(chosen_pos);
                return sink->size() < max_count;
            }
            return false;  // stop at first witness
        }
        const int need_rank = pattern_rank(t);
        for (int p = min_pos; p <= n - (k - t - 1); ++p) {
            const int val = w(p);
            int r = 0;
            for (int x : chosen_values)
                if (x < val) ++r;
            if (r != need_rank) continue;
            chosen_values.push_back(val);
            chosen_pos.push_back(p);
            const bool keep_going = extend(t + 1, p + 1);
            chosen_values.pop_back();
            chosen_pos.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

bool contains(const Permutation& w, std::span<const int> pattern_word) {
    if (pattern_word.empty()) return true;
    if (static_cast<int>(pattern_word.size()) > w.size()) return false;
    ContainsSearch search(w, pattern_word);
    search.extend(0, 1);
    return search.found;
}

bool contains(const Permutation& w, const Permutation& v) {
    return contains(w, std::span<const int>(v.oneline()));
}

bool contains_2143(const Permutation& w) {
    const int n = w.size();
    if (n < 4) return false;
    // min_top[i] = smallest w(a) over inversions (a,b) with b <= i.
    std::vector<int> min_top(n + 1, n + 1);
    for (int b = 1; b <= n; ++b) {
        min_top[b] = min_top[b - 1];
        for (int a = 1; a < b; ++a)
            if (w(a) > w(b)) min_top[b] = std::min(min_top[b], w(a));
    }
    for (int c = 2; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d)
            if (w(c) > w(d) && min_top[c - 1] < w(d)) return true;
    return false;
}

std::vector<std::vector<int>> occurrences(const Permutation& w,
                                          std::span<const int> pattern_word,
                                          std::size_t max_count) {
    std::vector<std::vector<int>> out;
    if (max_count == 0) return out;
    if (pattern_word.empty()) {
        out.push_back({});
        return out;
    }
    if (static_cast<int>(pattern_word.size()) > w.size()) return out;
    ContainsSearch search(w, pattern_word);
    search.sink = &out;
    search.max_count = max_count;
    search.extend(0, 1);
    return out;
}

std::vector<std::vector<int>> occurrences(const Permutation& w, const Permutation& v,
                                          std::size_t max_count) {
    return occurrences(w, std::span<const int>(v.oneline()), max_count);
}

std::vector<Permutation> one_point_deletions(const Permutation& w) {
    std::vector<Permutation> out;
    const int n = w.size();
    out.reserve(n);
    for (int skip = 1; skip <= n; ++skip) {
        std::vector<int> rest;
        rest.reserve(n - 1);
        for (int i = 1; i <= n; ++i)
            if (i != skip) rest.push_back(w(i));
        out.push_back(flatten(rest));
    }
    return out;
}

namespace {

struct WordEnumerator {
    const std::function<bool(std::span<const int>)>* fn = nullptr;
    unsigned long long cap = kDefaultWordCap;
    unsigned long long count = 0;
    std::vector<int> buffer;  // letters in reverse order (last letter first)
    bool stopped = false;

    // Peels the last letter: every reduced word of u ends with a descent of u.
    void run(std::vector<int>& u) {
        if (stopped) return;
        bool any_descent = false;
        for (int i = 0; i + 1 < static_cast<int>(u.size()); ++i) {
            if (u[i] > u[i + 1]) {
                any_descent = true;
                std::swap(u[i], u[i + 1]);
                buffer.push_back(i + 1);
                run(u);
                buffer.pop_back();
                std::swap(u[i], u[i + 1]);
                if (stopped) return;
            }
        }
        if (!any_descent) {
            if (++count > cap)
                throw enumeration_limit_error("reduced word enumeration exceeded cap of " +
                                              std::to_string(cap));
            if (fn) {
                std::vector<int> word(buffer.rbegin(), buffer.rend());
                if (!(*fn)(word)) stopped = true;
            }
        }
    }
};

}  // namespace

void for_each_reduced_word(const Permutation& w,
                           const std::function<bool(std::span<const int>)>& fn,
                           unsigned long long cap) {
    WordEnumerator e;
    e.fn = &fn;
    e.cap = cap;
    std::vector<int> u(w.oneline());
    e.run(u);
}

std::vector<std::vector<int>> reduced_words(const Permutation& w, unsigned long long cap) {
    std::vector<std::vector<int>> out;
    for_each_reduced_word(
        w,
        [&](std::span<const int> a) {
            out.emplace_back(a.begin(), a.end());
            return true;
        },
        cap);
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long reduced_word_count(const Permutation& w, unsigned long long cap) {
    WordEnumerator e;
    e.cap = cap;
    std::vector<int> u(w.oneline());
    e.run(u);
    return e.count;
}

bool is_reduced_word(std::span<const int> word) {
    int frame = 1;
    for (int a : word) {
        if (a < 1) return false;
        frame = std::max(frame, a + 1);
    }
    std::vector<int> u(frame);
    std::iota(u.begin(), u.end(), 1);
    for (int a : word) {
        if (u[a - 1] > u[a]) return false;  // length would drop
        std::swap(u[a - 1], u[a]);
    }
    return true;
}

Permutation word_to_permutation(std::span<const int> word) {
    int frame = 1;
    for (int a : word) {
        if (a < 1) throw invalid_input("word letters must be >= 1");
        frame = std::max(frame, a + 1);
    }
    std::vector<int> u(frame);
    std::iota(u.begin(), u.end(), 1);
    for (int a : word) std::swap(u[a - 1], u[a]);
    return Permutation(std::move(u));
}

std::set<Permutation> code_pattern_children(const Permutation& w) {
    std::vector<int> entries = code(w).entries;
    entries.push_back(0);  // the frame one past the canonical size
    std::set<Permutation> children;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i] != 0) continue;
        std::vector<int> rest;
        rest.reserve(entries.size() - 1);
        for (std::size_t j = 0; j < entries.size(); ++j)
            if (j != i) rest.push_back(entries[j]);
        children.insert(code_inverse(Code(std::move(rest))));
    }
    return children;
}

}  // namespace stanley
