#pragma once

#include <string>
#include <vector>

#include "stanley/partition.hpp"
#include "stanley/permutation.hpp"
#include "stanley/schur_expansion.hpp"

namespace stanley {

struct TreeBudget {
    unsigned long long max_nodes = 10'000'000ULL;
};

struct TransitionSite {
    int r = 0;
    int s = 0;
};

/// r maximal with w(r) > w(r+1), then s > r maximal with w(s) < w(r).
/// Throws invalid_input for the identity (no descent).
TransitionSite max_transition_site(const Permutation& w);

/// The transitions w t_{rs} t_{rj} of the same length. If w itself has none,
/// they are computed for 1 x w instead; `shifts` records that and `base` is
/// the frame the site and children live in. One shift always suffices.
struct Transitions {
    Permutation base;
    int shifts = 0;
    int r = 0;
    int s = 0;
    std::vector<int> js;                // j_1 > j_2 > ... > j_p
    std::vector<Permutation> children;  // w t_{rs} t_{rj}, same order as js
};

Transitions transitions(const Permutation& w);

/// 2143-avoidance, O(n^2).
bool is_vexillary(const Permutation& w);

/// Sorted code of a vexillary permutation; equals the partition its diagram
/// is equivalent to. Throws invalid_input on non-vexillary input.
Partition vexillary_shape(const Permutation& w);

/// Recursion tree expanding non-vexillary nodes by their transitions;
/// every leaf is vexillary. `shifts` counts the 1x embeddings applied at
/// that node before expanding.
struct LSNode {
    Permutation perm;
    int shifts = 0;
    std::vector<LSNode> children;
    bool leaf() const { return children.empty(); }
};

struct LSTree {
    LSNode root;
    unsigned long long node_count = 0;
};

/// workers > 1 builds the root's child subtrees concurrently; results are
/// identical to the sequential build.
LSTree ls_tree(const Permutation& w, const TreeBudget& budget = {}, int workers = 1);

/// Multiset of leaf shapes: the Schur expansion of F_w.
SchurExpansion stanley_via_ls(const Permutation& w, const TreeBudget& budget = {});

/// Leaf count of the tree = number of Schur terms of F_w with multiplicity.
long long eg_number(const Permutation& w, const TreeBudget& budget = {});

/// eg_number(w) <= k, with early termination. Throws invalid_input if k < 1.
bool is_k_vexillary(const Permutation& w, long long k, const TreeBudget& budget = {});

/// Largest Schur coefficient of F_w.
long long multiplicity_bound(const Permutation& w, const TreeBudget& budget = {});

/// multiplicity_bound(w) <= k, with early termination.
bool multiplicity_bounded_by(const Permutation& w, long long k, const TreeBudget& budget = {});

/// Leaf shapes with per-branch shift totals exposed; used by the diagram
/// tree machinery, which needs a shift-free frame.
int max_shift_requirement(const Permutation& w, const TreeBudget& budget = {});

std::string lstree_dot(const LSTree& tree);
std::string lstree_json(const LSTree& tree);

}  // namespace stanley
