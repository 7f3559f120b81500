#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stanley/diagram.hpp"
#include "stanley/schur_expansion.hpp"
#include "stanley/transition_tree.hpp"

namespace stanley {

/// Rooted tree of diagrams. Each child records the move sequence labeling
/// its incoming edge, and its diagram equals those moves applied to the
/// parent; vertices with more than one child split along a
/// staircase-with-box subdiagram.
struct JPNode {
    Diagram diagram;
    std::vector<JPMove> moves;  // edge label from the parent; empty at the root
    std::vector<JPNode> children;
    bool leaf() const { return children.empty(); }
};

struct JPTree {
    JPNode root;
    Permutation base;  // permutation whose diagram labels the root
    int shifts = 0;    // 1x embeddings applied so no node needs a fallback
};

/// The p diagrams R_{i_p -> i_{p-k+1}} C_{j_p -> j_k} D for k = 1..p, where
/// (rows, cols) = (i_1..i_p, j_1..j_p) carry the staircase-with-box
/// subdiagram of D. Throws invalid_input when the subdiagram does not match.
std::vector<Diagram> staircase_children(const Diagram& d, const std::vector<int>& rows,
                                        const std::vector<int>& cols);

/// Complete tree for D(w): every non-vexillary node splits along its
/// transition staircase, with single-move chains at the two extreme
/// children; the leaves are the diagrams of the vexillary leaves of the
/// transition tree.
JPTree jp_tree(const Permutation& w, const TreeBudget& budget = {});

/// The row and column move carrying D(w) to D(v) in either order, for v a
/// transition of w in w's own frame. Throws invalid_input otherwise.
std::pair<JPMove, JPMove> transition_moves(const Permutation& w, const Permutation& v);

/// Tree with the row/column-permuting edges contracted: at every split only
/// the C-edge (first transition), the RC-edges, and the R-edge (last
/// transition) remain, and moves below a contraction are renamed through
/// the induced row/column relabeling. Internal vertices have >= 2 children.
struct RJPNode {
    enum class EdgeKind { C, RC, R };
    Diagram diagram;
    EdgeKind kind = EdgeKind::RC;  // label of the edge from the parent
    std::vector<JPMove> moves;     // empty at the root
    std::vector<RJPNode> children;
    bool leaf() const { return children.empty(); }
};

struct ReducedJPTree {
    RJPNode root;
    Permutation base;
    int shifts = 0;
};

ReducedJPTree reduce_tree(const JPTree& t, const TreeBudget& budget = {});
ReducedJPTree reduced_jp_tree(const Permutation& w, const TreeBudget& budget = {});

/// The pattern fl(w at R(T) u w^{-1}C(T)) extracted from the full reduced
/// tree. It has the same number of Schur terms as F_w and size at most
/// 4*EG(w) - 4; vexillary input yields the empty permutation.
Permutation skeleton_pattern(const Permutation& w, const TreeBudget& budget = {});

/// If EG(w) > k, a pattern of w of size at most 4k that is itself not
/// k-vexillary, extracted from a greedily grown colorful subtree with k+1
/// leaves; nullopt when EG(w) <= k. Throws invalid_input if k < 1.
std::optional<Permutation> witness_pattern(const Permutation& w, long long k,
                                           const TreeBudget& budget = {});

/// Irreducible decomposition of S^D as a shape multiset, when d is empty,
/// exactly a Rothe diagram, or partition-equivalent; nullopt otherwise.
std::optional<SchurExpansion> shapes_of_diagram(const Diagram& d,
                                                const TreeBudget& budget = {});

/// Pair injection for the split of d along rows U and columns V, with
/// D1 = (U x V) n d and D2 the complementary block:
///   iota(lambda, mu) = (lambda u F1^min) + (F2^max u mu),
/// union before sum. Requires shape multisets for both diagonal blocks;
/// throws unsupported_subdiagram when either is unavailable.
std::map<std::pair<Partition, Partition>, Partition> iota_shapes(
    const Diagram& d, const std::vector<int>& U, const std::vector<int>& V,
    const TreeBudget& budget = {});

/// Single-sided injection shapes(D1) -> shapes(d), defined for an arbitrary
/// complementary block: the D2 column counts fold into the right-hand
/// summand. Agrees with iota_shapes(.., mu = shape of D2) when D2 is empty.
std::map<Partition, Partition> iota_injection(const Diagram& d, const std::vector<int>& U,
                                              const std::vector<int>& V,
                                              const TreeBudget& budget = {});

struct TreeShapeReport {
    std::vector<std::pair<Diagram, std::optional<Partition>>> leaves;
    bool complete = false;
};

/// complete <=> every leaf is partition-equivalent and the leaf shape
/// multiset equals the Schur expansion of F at the root.
TreeShapeReport completeness_report(const JPTree& t, const TreeBudget& budget = {});
TreeShapeReport completeness_report(const ReducedJPTree& t, const TreeBudget& budget = {});

/// Tree for a parent diagram induced by a tree for one of its subdiagrams:
/// same shape and edge labels, move indices renamed through the subdiagram
/// coordinate maps (compressed -> parent), vertices recomputed from the
/// parent root.
JPNode induced_tree(const JPNode& sub, const Diagram& parent,
                    const std::map<int, int>& row_to_parent,
                    const std::map<int, int>& col_to_parent);

std::string jptree_dot(const JPTree& t);
std::string jptree_json(const JPTree& t);
std::string reduced_jptree_dot(const ReducedJPTree& t);
std::string reduced_jptree_json(const ReducedJPTree& t);

}  // namespace stanley
