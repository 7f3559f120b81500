#include "stanley/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "stanley/transition_tree.hpp"

namespace stanley {

Diagram::Diagram(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (const Cell& c : cells_)
        if (c.row < 1 || c.col < 1) throw invalid_input("cells must have positive coordinates");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool Diagram::contains(int row, int col) const {
    return std::binary_search(cells_.begin(), cells_.end(), Cell{row, col});
}

int Diagram::max_row() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.row);
    return m;
}

int Diagram::max_col() const {
    int m = 0;
    for (const Cell& c : cells_) m = std::max(m, c.col);
    return m;
}

std::vector<int> Diagram::row_counts() const {
    std::vector<int> counts(max_row(), 0);
    for (const Cell& c : cells_) ++counts[c.row - 1];
    return counts;
}

std::vector<int> Diagram::col_counts() const {
    std::vector<int> counts(max_col(), 0);
    for (const Cell& c : cells_) ++counts[c.col - 1];
    return counts;
}

std::string Diagram::ascii() const {
    if (cells_.empty()) return "(empty)";
    const int rows = max_row(), cols = max_col();
    std::string out;
    for (int r = 1; r <= rows; ++r) {
        for (int c = 1; c <= cols; ++c) out += contains(r, c) ? 'o' : '.';
        out += '\n';
    }
    out.pop_back();
    return out;
}

std::string JPMove::str() const {
    return std::string(kind == Kind::Row ? "R" : "C") + std::to_string(from) + "->" +
           std::to_string(to);
}

JPMove row_move(int from, int to) { return {JPMove::Kind::Row, from, to}; }
JPMove col_move(int from, int to) { return {JPMove::Kind::Col, from, to}; }

Diagram rothe(const Permutation& w) {
    std::vector<Cell> cells;
    const int n = w.size();
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (w(i) > w(j)) cells.push_back({i, w(j)});
    return Diagram(std::move(cells));
}

Diagram apply_move(const JPMove& m, const Diagram& d) {
    if (m.from < 1 || m.to < 1) throw invalid_input("move lines must be >= 1");
    const bool row = m.kind == JPMove::Kind::Row;
    const int a = m.from, b = m.to;
    if (a == b) return d;
    std::vector<Cell> out;
    out.reserve(d.cells().size());
    auto line = [&](const Cell& c) { return row ? c.row : c.col; };
    auto make = [&](int ln, int other) { return row ? Cell{ln, other} : Cell{other, ln}; };
    for (const Cell& c : d.cells()) {
        const int other = row ? c.col : c.row;
        if (line(c) == a) {
            if (d.contains(make(b, other)))
                out.push_back(c);  // blocked; the copy in line b is kept below
            else
                out.push_back(make(b, other));
        } else {
            out.push_back(c);
        }
    }
    return Diagram(std::move(out));
}

Diagram apply_moves(std::span<const JPMove> moves, const Diagram& d) {
    Diagram cur = d;
    for (const JPMove& m : moves) cur = apply_move(m, cur);
    return cur;
}

Partition d_min(const Diagram& d) {
    return Partition::sorted(d.row_counts());
}

Partition d_max(const Diagram& d) {
    return conjugate(Partition::sorted(d.col_counts()));
}

std::vector<Cell> essential_set(const Diagram& d) {
    std::vector<Cell> out;
    for (const Cell& c : d.cells())
        if (!d.contains(c.row + 1, c.col) && !d.contains(c.row, c.col + 1)) out.push_back(c);
    return out;
}

Subdiagram subdiagram(const Diagram& d, const std::vector<int>& rows,
                      const std::vector<int>& cols) {
    Subdiagram out;
    std::vector<int> r = rows, c = cols;
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (std::size_t i = 0; i < r.size(); ++i) out.row_map[r[i]] = static_cast<int>(i) + 1;
    for (std::size_t i = 0; i < c.size(); ++i) out.col_map[c[i]] = static_cast<int>(i) + 1;

    std::vector<Cell> orig, reind;
    for (const Cell& cell : d.cells()) {
        auto ri = out.row_map.find(cell.row);
        auto ci = out.col_map.find(cell.col);
        if (ri == out.row_map.end() || ci == out.col_map.end()) continue;
        orig.push_back(cell);
        reind.push_back({ri->second, ci->second});
    }
    out.original = Diagram(std::move(orig));
    out.reindexed = Diagram(std::move(reind));
    return out;
}

std::optional<Partition> equivalent_partition(const Diagram& d) {
    if (d.empty()) return Partition{};
    // Row supports must form a chain under inclusion.
    std::map<int, std::set<int>> supports;
    for (const Cell& c : d.cells()) supports[c.row].insert(c.col);
    std::vector<const std::set<int>*> rows;
    rows.reserve(supports.size());
    for (const auto& [row, cols] : supports) rows.push_back(&cols);
    std::sort(rows.begin(), rows.end(),
              [](const auto* a, const auto* b) { return a->size() > b->size(); });
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const auto& big = *rows[i];
        for (int col : *rows[i + 1])
            if (!big.count(col)) return std::nullopt;
    }
    for (const auto* s : rows) lengths.push_back(static_cast<int>(s->size()));
    return Partition(std::move(lengths));
}

bool graph_is_forest(const Diagram& d) {
    // Union-find over row nodes and column nodes; a cell is an edge.
    std::map<int, int> row_id, col_id;
    std::vector<int> parent;
    auto node = [&](std::map<int, int>& ids, int key) {
        auto [it, fresh] = ids.try_emplace(key, static_cast<int>(parent.size()));
        if (fresh) parent.push_back(it->second);
        return it->second;
    };
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Cell& c : d.cells()) {
        const int a = find(node(row_id, c.row));
        const int b = find(node(col_id, c.col));
        if (a == b) return false;
        parent[a] = b;
    }
    return true;
}

Diagram complement_in_rectangle(const Diagram& d, int rows, int cols) {
    if (d.max_row() > rows || d.max_col() > cols)
        throw invalid_input("diagram does not fit in the given rectangle");
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(rows) * cols - d.cells().size());
    for (int r = 1; r <= rows; ++r)
        for (int c = 1; c <= cols; ++c)
            if (!d.contains(r, c)) out.push_back({r, c});
    return Diagram(std::move(out));
}

std::optional<Permutation> rothe_inverse(const Diagram& d) {
    if (d.empty()) return Permutation{};
    Permutation w = code_inverse(Code(d.row_counts()));
    if (rothe(w) == d) return w;
    return std::nullopt;
}

bool is_staircase_with_box(const Diagram& d, const std::vector<int>& rows,
                           const std::vector<int>& cols) {
    if (rows.size() != cols.size() || rows.empty()) return false;
    const int p = static_cast<int>(rows.size());
    const Diagram sub = subdiagram(d, rows, cols).reindexed;
    std::vector<Cell> expect;
    for (int i = 1; i < p; ++i)
        for (int j = 1; j <= p - i; ++j) expect.push_back({i, j});
    expect.push_back({p, p});
    return sub == Diagram(std::move(expect));
}

TransitionStaircase staircase_subdiagram_of_transitions(const Permutation& w) {
    const Transitions t = transitions(w);
    TransitionStaircase out;
    out.base = t.base;
    out.shifts = t.shifts;
    const int p = static_cast<int>(t.js.size());
    // js holds j_1 > ... > j_p.
    for (int k = p - 1; k >= 1; --k) out.rows.push_back(t.js[k]);
    out.rows.push_back(t.r);
    for (int k = 0; k + 1 < p; ++k) out.cols.push_back(t.base(t.js[k]));
    out.cols.push_back(t.base(t.s));
    return out;
}

}  // namespace stanley
