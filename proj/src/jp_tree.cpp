#include "stanley/jp_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "json.hpp"

namespace stanley {

std::vector<Diagram> staircase_children(const Diagram& d, const std::vector<int>& rows_in,
                                        const std::vector<int>& cols_in) {
    if (!is_staircase_with_box(d, rows_in, cols_in))
        throw invalid_input("the selected rows and columns do not carry a "
                            "staircase-with-box subdiagram");
    std::vector<int> rows = rows_in, cols = cols_in;
    std::sort(rows.begin(), rows.end());
    std::sort(cols.begin(), cols.end());
    const int p = static_cast<int>(rows.size());
    std::vector<Diagram> out;
    out.reserve(p);
    for (int k = 1; k <= p; ++k) {
        Diagram child = apply_move(col_move(cols[p - 1], cols[k - 1]), d);
        child = apply_move(row_move(rows[p - 1], rows[p - k]), child);
        out.push_back(std::move(child));
    }
    return out;
}

namespace {

struct NodeCounter {
    unsigned long long used = 0;
    unsigned long long max_nodes = 0;
    void tick() {
        if (++used > max_nodes)
            throw tree_budget_error("diagram tree exceeded its node budget of " +
                                    std::to_string(max_nodes));
    }
};

// Transitions in a frame where no fallback can fire (the caller pre-shifts).
Transitions frame_transitions(const Permutation& v) {
    Transitions t = transitions(v);
    if (t.shifts != 0)
        throw std::logic_error("fallback fired in a pre-shifted frame");
    return t;
}

JPNode build_jp_node(const Permutation& v, NodeCounter& counter) {
    counter.tick();
    JPNode node;
    node.diagram = rothe(v);
    if (is_vexillary(v)) return node;

    const Transitions t = frame_transitions(v);
    const int p = static_cast<int>(t.js.size());
    const int r = t.r;
    const int ws = v(t.s);

    for (int k = 1; k <= p; ++k) {
        const int j = t.js[k - 1];
        const int wj = v(j);
        if (k == 1 || k == p) {
            // One extreme move joins the split; the other completes the
            // transition diagram one level down.
            const std::vector<JPMove> head =
                k == 1 ? std::vector<JPMove>{col_move(ws, wj)}
                       : std::vector<JPMove>{row_move(r, j)};
            const std::vector<JPMove> tail =
                k == 1 ? std::vector<JPMove>{row_move(r, j)}
                       : std::vector<JPMove>{col_move(ws, wj)};
            JPNode mid;
            mid.moves = head;
            mid.diagram = apply_moves(head, node.diagram);
            counter.tick();
            JPNode child = build_jp_node(t.children[k - 1], counter);
            child.moves = tail;
            if (apply_moves(tail, mid.diagram) != child.diagram)
                throw std::logic_error("move chain misses a transition diagram");
            mid.children.push_back(std::move(child));
            node.children.push_back(std::move(mid));
        } else {
            JPNode child = build_jp_node(t.children[k - 1], counter);
            child.moves = {row_move(r, j), col_move(ws, wj)};
            if (apply_moves(child.moves, node.diagram) != child.diagram)
                throw std::logic_error("moves do not reach the transition diagram");
            node.children.push_back(std::move(child));
        }
    }
    return node;
}

}  // namespace

JPTree jp_tree(const Permutation& w, const TreeBudget& budget) {
    JPTree tree;
    tree.shifts = max_shift_requirement(w, budget);
    tree.base = shift(tree.shifts, w);
    NodeCounter counter{0, budget.max_nodes};
    tree.root = build_jp_node(tree.base, counter);
    return tree;
}

std::pair<JPMove, JPMove> transition_moves(const Permutation& w, const Permutation& v) {
    if (w.is_identity()) throw invalid_input("the identity has no transitions");
    const Transitions t = transitions(w);
    if (t.shifts != 0)
        throw invalid_input(v.str() + " is not a transition of " + w.str() +
                            " in its own frame");
    for (std::size_t k = 0; k < t.children.size(); ++k) {
        if (t.children[k] == v) {
            const int j = t.js[k];
            return {row_move(t.r, j), col_move(w(t.s), w(j))};
        }
    }
    throw invalid_input(v.str() + " is not a transition of " + w.str());
}

namespace {

// Index relabeling accumulated from contracted edges. Maps original frame
// indices to their names in the reduced tree.
struct Relabel {
    std::vector<int> map;  // 1-based; identity initially

    explicit Relabel(int frame) : map(frame + 1) {
        for (int i = 0; i <= frame; ++i) map[i] = i;
    }
    int operator()(int i) const { return map[i]; }

    // Compose with the transposition (a b) applied before the current map.
    Relabel composed_with_swap(int a, int b) const {
        Relabel out = *this;
        out.map[a] = (*this)(b);
        out.map[b] = (*this)(a);
        return out;
    }
};

RJPNode build_reduced_node(const Permutation& v, const Relabel& rows, const Relabel& cols,
                           const Diagram& label, NodeCounter& counter) {
    counter.tick();
    if (is_vexillary(v)) {
        RJPNode node;
        node.diagram = label;
        return node;
    }
    const Transitions t = frame_transitions(v);
    const int p = static_cast<int>(t.js.size());
    const int r = t.r;
    const int ws = v(t.s);

    if (p == 1) {
        // Both moves only permute rows/columns; contract the whole chain.
        const int j = t.js[0];
        return build_reduced_node(t.children[0], rows.composed_with_swap(r, j),
                                  cols.composed_with_swap(ws, v(j)), label, counter);
    }

    RJPNode node;
    node.diagram = label;
    for (int k = 1; k <= p; ++k) {
        const int j = t.js[k - 1];
        const int wj = v(j);
        RJPNode::EdgeKind kind = RJPNode::EdgeKind::RC;
        std::vector<JPMove> moves;
        Relabel child_rows = rows;
        Relabel child_cols = cols;
        if (k == 1) {
            kind = RJPNode::EdgeKind::C;
            moves = {col_move(cols(ws), cols(wj))};
            child_rows = rows.composed_with_swap(r, j);
        } else if (k == p) {
            kind = RJPNode::EdgeKind::R;
            moves = {row_move(rows(r), rows(j))};
            child_cols = cols.composed_with_swap(ws, wj);
        } else {
            moves = {row_move(rows(r), rows(j)), col_move(cols(ws), cols(wj))};
        }
        Diagram child_label = apply_moves(moves, label);
        RJPNode child =
            build_reduced_node(t.children[k - 1], child_rows, child_cols, child_label, counter);
        child.kind = kind;
        child.moves = std::move(moves);
        node.children.push_back(std::move(child));
    }
    return node;
}

}  // namespace

ReducedJPTree reduced_jp_tree(const Permutation& w, const TreeBudget& budget) {
    ReducedJPTree tree;
    tree.shifts = max_shift_requirement(w, budget);
    tree.base = shift(tree.shifts, w);
    NodeCounter counter{0, budget.max_nodes};
    const int frame = std::max(tree.base.size(), 1);
    tree.root = build_reduced_node(tree.base, Relabel(frame), Relabel(frame),
                                   rothe(tree.base), counter);
    return tree;
}

ReducedJPTree reduce_tree(const JPTree& t, const TreeBudget& budget) {
    return reduced_jp_tree(t.base, budget);
}

namespace {

void collect_moves(const RJPNode& node, std::vector<JPMove>& out) {
    for (const RJPNode& child : node.children) {
        out.insert(out.end(), child.moves.begin(), child.moves.end());
        collect_moves(child, out);
    }
}

Permutation pattern_from_moves(const Permutation& base, const std::vector<JPMove>& moves) {
    std::vector<int> positions;
    for (const JPMove& m : moves) {
        if (m.kind == JPMove::Kind::Row) {
            positions.push_back(m.from);
            positions.push_back(m.to);
        } else {
            positions.push_back(base.position_of(m.from));
            positions.push_back(base.position_of(m.to));
        }
    }
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    std::vector<int> values;
    values.reserve(positions.size());
    for (int p : positions) values.push_back(base(p));
    return flatten(values);
}

}  // namespace

Permutation skeleton_pattern(const Permutation& w, const TreeBudget& budget) {
    if (is_vexillary(w)) return Permutation{};
    const ReducedJPTree tree = reduced_jp_tree(w, budget);
    std::vector<JPMove> moves;
    collect_moves(tree.root, moves);
    return pattern_from_moves(tree.base, moves);
}

namespace {

// A selected subtree of the reduced tree, grown until it has k+1 leaves.
struct Selection {
    const RJPNode* node;
    std::vector<Selection> chosen;

    long long leaves() const {
        if (chosen.empty()) return 1;
        long long total = 0;
        for (const Selection& sel : chosen) total += sel.leaves();
        return total;
    }

    Selection* leftmost_expandable() {
        if (chosen.empty()) return node->children.empty() ? nullptr : this;
        for (Selection& sel : chosen)
            if (Selection* found = sel.leftmost_expandable()) return found;
        return nullptr;
    }

    void collect(std::vector<JPMove>& out) const {
        for (const Selection& sel : chosen) {
            out.insert(out.end(), sel.node->moves.begin(), sel.node->moves.end());
            sel.collect(out);
        }
    }
};

}  // namespace

std::optional<Permutation> witness_pattern(const Permutation& w, long long k,
                                           const TreeBudget& budget) {
    if (k < 1) throw invalid_input("k must be >= 1");
    if (is_k_vexillary(w, k, budget)) return std::nullopt;

    const ReducedJPTree tree = reduced_jp_tree(w, budget);
    Selection root{&tree.root, {}};
    long long leaves = 1;
    while (leaves <= k) {
        Selection* at = root.leftmost_expandable();
        if (at == nullptr)
            throw std::logic_error("colorful subtree ran out of leaves");
        const auto& kids = at->node->children;
        const std::size_t last = kids.size() - 1;
        // C-edge and R-edge first, then the middle children.
        std::vector<std::size_t> order = {0, last};
        for (std::size_t i = 1; i < last; ++i) order.push_back(i);
        for (std::size_t idx : order) {
            at->chosen.push_back(Selection{&kids[idx], {}});
            leaves = root.leaves();
            if (leaves > k) break;
        }
    }
    std::vector<JPMove> moves;
    root.collect(moves);
    return pattern_from_moves(tree.base, moves);
}

std::optional<SchurExpansion> shapes_of_diagram(const Diagram& d, const TreeBudget& budget) {
    if (d.empty()) return SchurExpansion::one();
    if (auto w = rothe_inverse(d)) return stanley_via_ls(*w, budget);
    if (auto lambda = equivalent_partition(d)) {
        SchurExpansion e;
        e.add(*lambda);
        return e;
    }
    return std::nullopt;
}

namespace {

struct BlockSplit {
    Diagram d1;  // rows in U, cols in V (compressed through the given sets)
    Diagram d2;  // complementary block, compressed through its occupied lines
    std::vector<Cell> f1;  // rows outside U, cols in V
    std::vector<Cell> f2;  // rows in U, cols outside V
    std::vector<Cell> rest_cols;  // all cells in columns outside V
};

BlockSplit split_blocks(const Diagram& d, const std::vector<int>& U, const std::vector<int>& V) {
    BlockSplit out;
    const std::set<int> rows(U.begin(), U.end());
    const std::set<int> cols(V.begin(), V.end());
    std::vector<Cell> d2_cells;
    for (const Cell& c : d.cells()) {
        const bool in_u = rows.count(c.row) > 0;
        const bool in_v = cols.count(c.col) > 0;
        if (!in_v) out.rest_cols.push_back(c);
        if (in_u && !in_v) out.f2.push_back(c);
        if (!in_u && in_v) out.f1.push_back(c);
        if (!in_u && !in_v) d2_cells.push_back(c);
    }
    out.d1 = subdiagram(d, U, V).reindexed;
    const Diagram d2(std::move(d2_cells));
    std::vector<int> d2_rows, d2_cols;
    for (const Cell& c : d2.cells()) {
        d2_rows.push_back(c.row);
        d2_cols.push_back(c.col);
    }
    out.d2 = subdiagram(d2, d2_rows, d2_cols).reindexed;
    return out;
}

}  // namespace

std::map<std::pair<Partition, Partition>, Partition> iota_shapes(const Diagram& d,
                                                                 const std::vector<int>& U,
                                                                 const std::vector<int>& V,
                                                                 const TreeBudget& budget) {
    const BlockSplit blocks = split_blocks(d, U, V);
    const auto shapes1 = shapes_of_diagram(blocks.d1, budget);
    if (!shapes1)
        throw unsupported_subdiagram("no decomposition route for the (U x V) block");
    const auto shapes2 = shapes_of_diagram(blocks.d2, budget);
    if (!shapes2)
        throw unsupported_subdiagram("no decomposition route for the complementary block");
    const Partition f1_min = d_min(Diagram(blocks.f1));
    const Partition f2_max = d_max(Diagram(blocks.f2));

    std::map<std::pair<Partition, Partition>, Partition> out;
    for (const auto& [lambda, m1] : shapes1->terms())
        for (const auto& [mu, m2] : shapes2->terms())
            out[{lambda, mu}] =
                sum_parts(union_parts(lambda, f1_min), union_parts(f2_max, mu));
    return out;
}

std::map<Partition, Partition> iota_injection(const Diagram& d, const std::vector<int>& U,
                                              const std::vector<int>& V,
                                              const TreeBudget& budget) {
    const BlockSplit blocks = split_blocks(d, U, V);
    const auto shapes1 = shapes_of_diagram(blocks.d1, budget);
    if (!shapes1)
        throw unsupported_subdiagram("no decomposition route for the (U x V) block");
    const Partition f1_min = d_min(Diagram(blocks.f1));
    const Partition rho = d_max(Diagram(blocks.rest_cols));

    std::map<Partition, Partition> out;
    for (const auto& [lambda, mult] : shapes1->terms())
        out[lambda] = sum_parts(union_parts(lambda, f1_min), rho);
    return out;
}

namespace {

template <class Node>
void collect_leaves(const Node& node,
                    std::vector<std::pair<Diagram, std::optional<Partition>>>& out) {
    if (node.leaf()) {
        out.push_back({node.diagram, equivalent_partition(node.diagram)});
        return;
    }
    for (const auto& child : node.children) collect_leaves(child, out);
}

template <class Tree>
TreeShapeReport report_for(const Tree& t, const TreeBudget& budget) {
    TreeShapeReport report;
    collect_leaves(t.root, report.leaves);
    SchurExpansion from_leaves;
    bool all_partitions = true;
    for (const auto& [diagram, shape] : report.leaves) {
        if (!shape) {
            all_partitions = false;
            break;
        }
        from_leaves.add(*shape);
    }
    report.complete = all_partitions && from_leaves == stanley_via_ls(t.base, budget);
    return report;
}

}  // namespace

TreeShapeReport completeness_report(const JPTree& t, const TreeBudget& budget) {
    return report_for(t, budget);
}

TreeShapeReport completeness_report(const ReducedJPTree& t, const TreeBudget& budget) {
    return report_for(t, budget);
}

JPNode induced_tree(const JPNode& sub, const Diagram& parent,
                    const std::map<int, int>& row_to_parent,
                    const std::map<int, int>& col_to_parent) {
    auto rename = [](const std::map<int, int>& table, int idx) {
        auto it = table.find(idx);
        if (it == table.end())
            throw invalid_input("move index " + std::to_string(idx) +
                                " is outside the subdiagram coordinate maps");
        return it->second;
    };
    std::function<JPNode(const JPNode&, const Diagram&)> go = [&](const JPNode& node,
                                                                  const Diagram& label) {
        JPNode out;
        out.diagram = label;
        for (const JPNode& child : node.children) {
            std::vector<JPMove> mapped;
            for (const JPMove& m : child.moves) {
                const auto& table = m.kind == JPMove::Kind::Row ? row_to_parent : col_to_parent;
                mapped.push_back({m.kind, rename(table, m.from), rename(table, m.to)});
            }
            Diagram child_label = apply_moves(mapped, label);
            JPNode mapped_child = go(child, child_label);
            mapped_child.moves = std::move(mapped);
            out.children.push_back(std::move(mapped_child));
        }
        return out;
    };
    return go(sub, parent);
}

namespace {

std::string moves_label(const std::vector<JPMove>& moves, bool unicode_arrow) {
    std::string out;
    for (const JPMove& m : moves) {
        if (!out.empty()) out += ' ';
        if (unicode_arrow) {
            out += (m.kind == JPMove::Kind::Row ? "R" : "C");
            out += std::to_string(m.from) + "→" + std::to_string(m.to);
        } else {
            out += m.str();
        }
    }
    return out;
}

std::string dot_escape_grid(const Diagram& d) {
    std::string grid = d.ascii();
    std::string out;
    for (char ch : grid) {
        if (ch == '\n')
            out += "\\l";
        else
            out += ch;
    }
    out += "\\l";
    return out;
}

template <class Node>
void dot_walk(const Node& node, int& counter, int my_id, std::string& out) {
    out += "  n" + std::to_string(my_id) + " [label=\"" + dot_escape_grid(node.diagram) +
           "\"];\n";
    for (const auto& child : node.children) {
        const int child_id = ++counter;
        out += "  n" + std::to_string(my_id) + " -> n" + std::to_string(child_id) +
               " [label=\"" + moves_label(child.moves, true) + "\"];\n";
        dot_walk(child, counter, child_id, out);
    }
}

template <class Node>
nlohmann::ordered_json json_walk(const Node& node) {
    nlohmann::ordered_json j;
    auto& cells = j["cells"] = nlohmann::ordered_json::array();
    for (const Cell& c : node.diagram.cells()) cells.push_back({c.row, c.col});
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    for (const auto& child : node.children) {
        nlohmann::ordered_json e;
        auto& moves = e["moves"] = nlohmann::ordered_json::array();
        for (const JPMove& m : child.moves) moves.push_back(m.str());
        e["child"] = json_walk(child);
        edges.push_back(std::move(e));
    }
    return j;
}

template <class Tree>
std::string tree_dot(const Tree& t, const char* name) {
    std::string out = std::string("digraph ") + name + " {\n  node [shape=box, fontname=\"monospace\"];\n";
    int counter = 0;
    dot_walk(t.root, counter, 0, out);
    out += "}\n";
    return out;
}

}  // namespace

std::string jptree_dot(const JPTree& t) { return tree_dot(t, "jptree"); }

std::string jptree_json(const JPTree& t) { return json_walk(t.root).dump(); }

std::string reduced_jptree_dot(const ReducedJPTree& t) { return tree_dot(t, "rjptree"); }

std::string reduced_jptree_json(const ReducedJPTree& t) { return json_walk(t.root).dump(); }

}  // namespace stanley
