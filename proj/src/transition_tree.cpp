#include "stanley/transition_tree.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>

#include "json.hpp"

namespace stanley {

namespace {

[[noreturn]] void budget_exhausted(unsigned long long max_nodes) {
    throw tree_budget_error("transition tree exceeded its node budget of " +
                            std::to_string(max_nodes) +
                            "; this signals a bug, the tree is finite");
}

}  // namespace

TransitionSite max_transition_site(const Permutation& w) {
    if (w.is_identity()) throw invalid_input("the identity has no descent");
    const int n = w.size();
    int r = 0;
    for (int i = 1; i < n; ++i)
        if (w(i) > w(i + 1)) r = i;
    // r >= 1: a descent-free permutation is the identity.
    int s = 0;
    for (int j = r + 1; j <= n; ++j)
        if (w(j) < w(r)) s = j;
    return {r, s};
}

Transitions transitions(const Permutation& w) {
    if (w.is_identity()) throw invalid_input("the identity has no transitions");
    Transitions out;
    out.base = w;
    for (int attempt = 0;; ++attempt) {
        const auto [r, s] = max_transition_site(out.base);
        out.r = r;
        out.s = s;
        out.js.clear();
        const int ws = out.base(s);
        for (int j = r - 1; j >= 1; --j) {
            if (out.base(j) >= ws) continue;
            bool blocked = false;
            for (int j2 = j + 1; j2 < r && !blocked; ++j2)
                blocked = out.base(j) < out.base(j2) && out.base(j2) < ws;
            if (!blocked) out.js.push_back(j);
        }
        if (!out.js.empty()) break;
        if (attempt > 0)
            throw invalid_input("transition fallback failed twice for " + w.str());
        out.base = shift(1, out.base);
        out.shifts = 1;
    }
    out.children.reserve(out.js.size());
    const Permutation swapped = apply_transposition(out.base, out.r, out.s);
    for (int j : out.js) {
        Permutation child = apply_transposition(swapped, out.r, j);
        out.children.push_back(std::move(child));
    }
    return out;
}

bool is_vexillary(const Permutation& w) { return !contains_2143(w); }

Partition vexillary_shape(const Permutation& w) {
    if (!is_vexillary(w))
        throw invalid_input("vexillary_shape requires a 2143-avoiding permutation, got " +
                            w.str());
    return Partition::sorted(code(w).entries);
}

namespace {

// Depth-first expansion by transitions. The leaf callback returns false to
// stop the walk early.
bool walk_transition_tree(const Permutation& v, unsigned long long& nodes,
                          const TreeBudget& budget,
                          const std::function<bool(const Permutation&)>& leaf) {
    if (++nodes > budget.max_nodes) budget_exhausted(budget.max_nodes);
    if (is_vexillary(v)) return leaf(v);
    Transitions t = transitions(v);
    for (const Permutation& child : t.children)
        if (!walk_transition_tree(child, nodes, budget, leaf)) return false;
    return true;
}

LSNode build_node(const Permutation& v, std::atomic<unsigned long long>& nodes,
                  const TreeBudget& budget, int workers) {
    if (++nodes > budget.max_nodes) budget_exhausted(budget.max_nodes);
    LSNode node;
    node.perm = v;
    if (is_vexillary(v)) return node;
    Transitions t = transitions(v);
    node.shifts = t.shifts;
    if (t.shifts > 0) node.perm = t.base;
    node.children.resize(t.children.size());
    if (workers > 1 && t.children.size() > 1) {
        std::vector<std::thread> threads;
        std::vector<std::exception_ptr> errors(t.children.size());
        std::atomic<std::size_t> next{0};
        const int nthreads = std::min<std::size_t>(workers, t.children.size());
        for (int i = 0; i < nthreads; ++i) {
            threads.emplace_back([&] {
                for (std::size_t k = next++; k < t.children.size(); k = next++) {
                    try {
                        node.children[k] = build_node(t.children[k], nodes, budget, 1);
                    } catch (...) {
                        errors[k] = std::current_exception();
                    }
                }
            });
        }
        for (auto& th : threads) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    } else {
        for (std::size_t k = 0; k < t.children.size(); ++k)
            node.children[k] = build_node(t.children[k], nodes, budget, 1);
    }
    return node;
}

}  // namespace

LSTree ls_tree(const Permutation& w, const TreeBudget& budget, int workers) {
    LSTree tree;
    std::atomic<unsigned long long> nodes{0};
    tree.root = build_node(w, nodes, budget, workers);
    tree.node_count = nodes.load();
    return tree;
}

SchurExpansion stanley_via_ls(const Permutation& w, const TreeBudget& budget) {
    SchurExpansion f;
    unsigned long long nodes = 0;
    walk_transition_tree(w, nodes, budget, [&](const Permutation& leaf) {
        f.add(Partition::sorted(code(leaf).entries));
        return true;
    });
    return f;
}

long long eg_number(const Permutation& w, const TreeBudget& budget) {
    long long count = 0;
    unsigned long long nodes = 0;
    walk_transition_tree(w, nodes, budget, [&](const Permutation&) {
        ++count;
        return true;
    });
    return count;
}

bool is_k_vexillary(const Permutation& w, long long k, const TreeBudget& budget) {
    if (k < 1) throw invalid_input("k must be >= 1");
    long long count = 0;
    unsigned long long nodes = 0;
    return walk_transition_tree(w, nodes, budget,
                                [&](const Permutation&) { return ++count <= k; });
}

long long multiplicity_bound(const Permutation& w, const TreeBudget& budget) {
    return stanley_via_ls(w, budget).max_multiplicity();
}

bool multiplicity_bounded_by(const Permutation& w, long long k, const TreeBudget& budget) {
    if (k < 1) throw invalid_input("k must be >= 1");
    std::map<Partition, long long> counts;
    unsigned long long nodes = 0;
    return walk_transition_tree(w, nodes, budget, [&](const Permutation& leaf) {
        return ++counts[Partition::sorted(code(leaf).entries)] <= k;
    });
}

int max_shift_requirement(const Permutation& w, const TreeBudget& budget) {
    int max_total = 0;
    unsigned long long nodes = 0;
    std::function<void(const Permutation&, int)> walk = [&](const Permutation& v, int total) {
        if (++nodes > budget.max_nodes) budget_exhausted(budget.max_nodes);
        max_total = std::max(max_total, total);
        if (is_vexillary(v)) return;
        Transitions t = transitions(v);
        for (const Permutation& child : t.children) walk(child, total + t.shifts);
    };
    walk(w, 0);
    return max_total;
}

namespace {

void dot_node(const LSNode& node, int& counter, int my_id, std::string& out) {
    std::string label = node.perm.str();
    if (node.leaf()) label += "\\n" + vexillary_shape(node.perm).str();
    out += "  n" + std::to_string(my_id) + " [label=\"" + label + "\"];\n";
    for (const LSNode& child : node.children) {
        const int child_id = ++counter;
        out += "  n" + std::to_string(my_id) + " -> n" + std::to_string(child_id) + ";\n";
        dot_node(child, counter, child_id, out);
    }
}

nlohmann::ordered_json json_node(const LSNode& node) {
    nlohmann::ordered_json j;
    j["perm"] = node.perm.str();
    j["shifts"] = node.shifts;
    if (node.leaf()) {
        j["shape"] = vexillary_shape(node.perm).parts();
    } else {
        auto& children = j["children"] = nlohmann::ordered_json::array();
        for (const LSNode& child : node.children) children.push_back(json_node(child));
    }
    return j;
}

}  // namespace

std::string lstree_dot(const LSTree& tree) {
    std::string out = "digraph lstree {\n  node [shape=box];\n";
    int counter = 0;
    dot_node(tree.root, counter, 0, out);
    out += "}\n";
    return out;
}

std::string lstree_json(const LSTree& tree) { return json_node(tree.root).dump(); }

}  // namespace stanley
