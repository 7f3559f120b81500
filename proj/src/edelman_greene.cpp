#include "stanley/edelman_greene.hpp"

#include <algorithm>
#include <set>

namespace stanley {

Partition EGTableau::shape() const {
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
    return Partition(std::move(parts));
}

std::vector<int> EGTableau::column_word() const {
    std::vector<int> word;
    const int width = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    for (int c = 0; c < width; ++c)
        for (int r = static_cast<int>(rows.size()) - 1; r >= 0; --r)
            if (c < static_cast<int>(rows[r].size())) word.push_back(rows[r][c]);
    return word;
}

std::string EGTableau::str() const {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(row[i]);
        }
        out += '\n';
    }
    if (!out.empty()) out.pop_back();
    return out;
}

namespace {

// Core insertion of one letter; returns the (row, col) of the new cell.
std::pair<int, int> insert_letter(std::vector<std::vector<int>>& rows, int a) {
    for (std::size_t r = 0;; ++r) {
        if (r == rows.size()) {
            rows.push_back({a});
            return {static_cast<int>(r), 0};
        }
        auto& row = rows[r];
        auto it = std::upper_bound(row.begin(), row.end(), a);
        if (it == row.end()) {
            row.push_back(a);
            return {static_cast<int>(r), static_cast<int>(row.size()) - 1};
        }
        const bool row_has_a = it != row.begin() && *(it - 1) == a;
        if (row_has_a) {
            if (*it != a + 1)
                throw invalid_input("insertion met a repeated letter without its successor; "
                                    "the input word is not reduced");
            a = a + 1;  // row unchanged, carry a+1 down
        } else {
            std::swap(*it, a);  // ordinary bump
        }
    }
}

}  // namespace

std::pair<EGTableau, RecordingTableau> eg_insert(std::span<const int> word) {
    if (!is_reduced_word(word)) throw invalid_input("eg_insert requires a reduced word");
    EGTableau p;
    RecordingTableau q;
    int step = 0;
    for (int a : word) {
        ++step;
        const auto [r, c] = insert_letter(p.rows, a);
        if (r == static_cast<int>(q.rows.size())) q.rows.emplace_back();
        (void)c;
        q.rows[r].push_back(step);
    }
    return {std::move(p), std::move(q)};
}

std::vector<EGTableau> eg_tableaux(const Permutation& w, unsigned long long cap) {
    std::set<std::vector<std::vector<int>>> seen;
    for_each_reduced_word(
        w,
        [&](std::span<const int> word) {
            std::vector<std::vector<int>> rows;
            for (int a : word) insert_letter(rows, a);
            seen.insert(std::move(rows));
            return true;
        },
        cap);
    std::vector<EGTableau> out;
    out.reserve(seen.size());
    for (auto& rows : seen) out.push_back(EGTableau{rows});
    return out;
}

SchurExpansion stanley_via_eg(const Permutation& w, unsigned long long cap) {
    SchurExpansion f;
    for (const EGTableau& p : eg_tableaux(w, cap)) f.add(conjugate(p.shape()));
    return f;
}

bool valid_eg_tableau(const EGTableau& t, const Permutation& w) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty()) return false;
        if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0 && row[c] <= row[c - 1]) return false;
            if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
        }
    }
    const std::vector<int> word = t.column_word();
    return is_reduced_word(word) && word_to_permutation(word) == w;
}

}  // namespace stanley
