#include "doctest.h"

#include <set>

#include "json.hpp"

#include "stanley/jp_tree.hpp"
#include "stanley/pattern_lab.hpp"

using namespace stanley;

namespace {

Permutation P(const std::string& s) { return Permutation::parse(s); }

Diagram D(std::vector<Cell> cells) { return Diagram(std::move(cells)); }

void for_each_canonical(int n, const std::function<void(const Permutation&)>& fn) {
    fn(Permutation::identity());
    for (int m = 2; m <= n; ++m)
        for_each_in_sn(m, 1, [&](int, const Permutation& w) {
            if (w.size() == m) fn(w);
        });
}

std::vector<const JPNode*> leaves_of(const JPNode& node) {
    std::vector<const JPNode*> out;
    if (node.leaf()) {
        out.push_back(&node);
        return out;
    }
    for (const JPNode& child : node.children)
        for (const JPNode* leaf : leaves_of(child)) out.push_back(leaf);
    return out;
}

int count_edges(const RJPNode& node) {
    int total = 0;
    for (const RJPNode& child : node.children) total += 1 + count_edges(child);
    return total;
}

int count_leaves(const RJPNode& node) {
    if (node.leaf()) return 1;
    int total = 0;
    for (const RJPNode& child : node.children) total += count_leaves(child);
    return total;
}

}  // namespace

TEST_CASE("staircase children") {
    const Diagram d = rothe(P("4261735"));
    const auto children = staircase_children(d, {1, 2, 5}, {1, 2, 5});
    REQUIRE(children.size() == 3);
    // C_{5->1}D, R_{5->2}C_{5->2}D, R_{5->1}D in that order
    CHECK(children[0] == D({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {3, 3},
                            {3, 5}, {5, 1}, {5, 3}}));
    CHECK(children[1] == D({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3},
                            {3, 1}, {3, 2}, {3, 3}}));
    CHECK(children[2] == D({{1, 1}, {1, 2}, {1, 3}, {1, 5}, {2, 1}, {3, 1},
                            {3, 3}, {3, 5}, {5, 3}}));

    CHECK_THROWS_AS(staircase_children(d, {1, 2}, {1, 2}), invalid_input);

    // degenerate box: the single child is the diagram itself
    const Diagram single = rothe(P("21"));
    CHECK(staircase_children(single, {1}, {1}) == std::vector<Diagram>({single}));
}

TEST_CASE("staircase split of a shape-with-box diagram") {
    // (3,1,1) with two extra cells in a detached row
    const Diagram d = D({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {4, 4}, {4, 5}});
    const auto children = staircase_children(d, {1, 2, 4}, {1, 2, 5});
    REQUIRE(children.size() == 3);
    CHECK(children[0] ==
          D({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 1}, {4, 1}, {4, 4}}));
    CHECK(children[1] ==
          D({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 4}, {3, 1}}));
    CHECK(children[2] ==
          D({{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {3, 1}}));
}

TEST_CASE("transition moves") {
    const auto [rm, cm] = transition_moves(P("321546"), P("341256"));
    const Diagram d = rothe(P("321546"));
    CHECK(apply_move(rm, apply_move(cm, d)) == rothe(P("341256")));
    CHECK(apply_move(cm, apply_move(rm, d)) == rothe(P("341256")));

    CHECK_THROWS_AS(transition_moves(P("321546"), P("2143")), invalid_input);
    CHECK_THROWS_AS(transition_moves(P("3412"), P("34125")), invalid_input);

    for_each_canonical(7, [&](const Permutation& w) {
        if (w.is_identity()) return;
        const Transitions t = transitions(w);
        if (t.shifts != 0) return;
        for (const Permutation& v : t.children) {
            const auto [row, col] = transition_moves(w, v);
            const Diagram dw = rothe(w);
            CHECK(apply_move(row, apply_move(col, dw)) == rothe(v));
            CHECK(apply_move(col, apply_move(row, dw)) == rothe(v));
        }
    });
}

TEST_CASE("diagram trees for small permutations") {
    const JPTree single = jp_tree(P("3412"));
    CHECK(single.root.leaf());
    CHECK(single.shifts == 0);

    const JPTree t = jp_tree(P("2143"));
    const auto leaves = leaves_of(t.root);
    REQUIRE(leaves.size() == 2);
    std::multiset<Partition> shapes;
    for (const JPNode* leaf : leaves) {
        const auto lambda = equivalent_partition(leaf->diagram);
        REQUIRE(lambda.has_value());
        shapes.insert(*lambda);
    }
    CHECK(shapes == std::multiset<Partition>({Partition({2}), Partition({1, 1})}));
}

TEST_CASE("induced trees replay a subdiagram tree inside the parent") {
    // the split of D(31524) induces the same split of D(316524)
    const Diagram parent = rothe(P("316524"));
    const Subdiagram sub = subdiagram(parent, {1, 2, 3}, {1, 2, 3, 4});
    CHECK(sub.reindexed == rothe(P("31524")));

    const JPTree sub_tree = jp_tree(P("31524"));
    REQUIRE(sub_tree.shifts == 0);

    std::map<int, int> row_back, col_back;
    for (const auto& [parent_row, local_row] : sub.row_map) row_back[local_row] = parent_row;
    for (const auto& [parent_col, local_col] : sub.col_map) col_back[local_col] = parent_col;
    const JPNode induced = induced_tree(sub_tree.root, parent, row_back, col_back);

    // the two children are the single-move images of the parent diagram
    REQUIRE(induced.children.size() == 2);
    std::map<std::string, Diagram> by_move;
    for (const JPNode& child : induced.children) {
        REQUIRE(child.moves.size() == 1);
        by_move[child.moves[0].str()] = child.diagram;
    }
    REQUIRE(by_move.count("C4->1") == 1);
    REQUIRE(by_move.count("R3->1") == 1);
    CHECK(by_move.at("R3->1") ==
          D({{1, 1}, {1, 2}, {1, 4}, {1, 5}, {3, 2}, {4, 2}, {4, 4}}));
    CHECK(by_move.at("C4->1") ==
          D({{1, 1}, {1, 2}, {3, 1}, {3, 2}, {3, 5}, {4, 1}, {4, 2}}));
}

TEST_CASE("complete trees match the transition expansion") {
    for_each_canonical(6, [&](const Permutation& w) {
        const TreeShapeReport report = completeness_report(jp_tree(w));
        CHECK(report.complete);
    });
}

TEST_CASE("reduced trees") {
    const ReducedJPTree single = reduced_jp_tree(P("3412"));
    CHECK(single.root.leaf());

    const ReducedJPTree t = reduced_jp_tree(P("2143"));
    REQUIRE(t.root.children.size() == 2);
    CHECK(count_edges(t.root) == 2);
    CHECK(t.root.children[0].kind == RJPNode::EdgeKind::C);
    CHECK(t.root.children[1].kind == RJPNode::EdgeKind::R);
    REQUIRE(t.root.children[0].moves.size() == 1);
    REQUIRE(t.root.children[1].moves.size() == 1);
    CHECK(t.root.children[0].moves[0].str() == "C3->1");
    CHECK(t.root.children[1].moves[0].str() == "R3->1");

    // reduction through the jp_tree entry point
    CHECK(count_edges(reduce_tree(jp_tree(P("321546"))).root) > 0);

    for_each_canonical(6, [&](const Permutation& w) {
        const ReducedJPTree r = reduced_jp_tree(w);
        CHECK(completeness_report(r).complete);
        const int leaves = count_leaves(r.root);
        CHECK(count_edges(r.root) <= std::max(0, 2 * leaves - 2));
        CHECK(leaves == eg_number(w));
    });
}

TEST_CASE("complete and reduced trees at the next size") {
    for_each_in_sn(7, 1, [&](int, const Permutation& w) {
        if (w.size() < 7) return;
        CHECK(completeness_report(jp_tree(w)).complete);
        const ReducedJPTree r = reduced_jp_tree(w);
        CHECK(completeness_report(r).complete);
        CHECK(count_edges(r.root) <= std::max(0, 2 * count_leaves(r.root) - 2));
    });
}

TEST_CASE("skeleton patterns") {
    CHECK(skeleton_pattern(P("3412")).is_identity());
    CHECK(skeleton_pattern(P("2143")) == P("2143"));
    CHECK(skeleton_pattern(P("316524")) == P("21543"));

    for_each_canonical(6, [&](const Permutation& w) {
        const Permutation sk = skeleton_pattern(w);
        const long long eg = eg_number(w);
        CHECK(eg_number(sk) == eg);
        CHECK(sk.size() <= std::max(0LL, 4 * eg - 4));
        CHECK(contains(w, sk));
    });
}

TEST_CASE("witness patterns") {
    CHECK(witness_pattern(P("2143"), 1) == P("2143"));
    CHECK(witness_pattern(P("21543"), 2) == P("21543"));
    CHECK(witness_pattern(P("3412"), 1) == std::nullopt);
    CHECK_THROWS_AS(witness_pattern(P("2143"), 0), invalid_input);

    for_each_canonical(6, [&](const Permutation& w) {
        const long long eg = eg_number(w);
        for (long long k = 1; k <= 3; ++k) {
            const auto wit = witness_pattern(w, k);
            if (eg <= k) {
                CHECK(wit == std::nullopt);
            } else {
                REQUIRE(wit.has_value());
                CHECK(wit->size() <= 4 * k);
                CHECK(eg_number(*wit) > k);
                CHECK(contains(w, *wit));
            }
        }
    });
}

TEST_CASE("shapes of diagrams") {
    CHECK(shapes_of_diagram(Diagram{}) == SchurExpansion::one());
    CHECK(shapes_of_diagram(rothe(P("316524"))) == stanley_via_ls(P("316524")));
    SchurExpansion one_box;
    one_box.add(Partition({1}));
    CHECK(shapes_of_diagram(D({{2, 3}})) == one_box);
    CHECK(shapes_of_diagram(D({{1, 1}, {2, 2}})) == std::nullopt);
}

TEST_CASE("block injections") {
    const auto iota = iota_shapes(rothe(P("316524")), {1, 2, 3}, {1, 2, 3, 4});
    REQUIRE(iota.size() == 2);
    CHECK(iota.at({Partition({3, 1}), Partition{}}) == Partition({4, 2, 1}));
    CHECK(iota.at({Partition({2, 2}), Partition{}}) == Partition({3, 2, 2}));

    // no off-diagonal cells at all: iota is the identity
    const auto plain = iota_shapes(rothe(P("321")), {1, 2, 3}, {1, 2});
    for (const auto& [pair, image] : plain) CHECK(pair.first == image);

    CHECK_THROWS_AS(iota_shapes(rothe(P("2143")), {}, {}), unsupported_subdiagram);

    // the single-sided map lands inside the full expansion with multiplicity
    for_each_canonical(5, [&](const Permutation& w) {
        const SchurExpansion fw = stanley_via_ls(w);
        const Diagram dw = rothe(w);
        const int n = w.size();
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> positions, values;
            for (int i = 1; i <= n; ++i)
                if (mask & (1u << (i - 1))) {
                    positions.push_back(i);
                    values.push_back(w(i));
                }
            const Permutation v = flatten(values);
            const auto map = iota_injection(dw, positions, values);
            const SchurExpansion fv = stanley_via_ls(v);
            std::set<Partition> images;
            for (const auto& [shape, mult] : fv.terms()) {
                REQUIRE(map.count(shape) == 1);
                const Partition& image = map.at(shape);
                CHECK(image.contains(shape));
                CHECK(fw.multiplicity(image) >= mult);
                CHECK(images.insert(image).second);
            }
        }
    });
}

TEST_CASE("tree serialization") {
    const JPTree t = jp_tree(P("2143"));
    const std::string dot = jptree_dot(t);
    CHECK(dot.find("digraph jptree") != std::string::npos);
    CHECK(dot.find("R3→1") != std::string::npos);

    const std::string json = jptree_json(t);
    CHECK(json.find("\"cells\":[[1,1],[3,3]]") != std::string::npos);
    CHECK(json.find("\"moves\":[\"C3->1\"]") != std::string::npos);

    // the JSON rebuilds the tree exactly: children are move images of parents
    const auto parsed = nlohmann::ordered_json::parse(json);
    CHECK(parsed.dump() == json);
    std::function<void(const nlohmann::ordered_json&)> walk =
        [&](const nlohmann::ordered_json& node) {
            std::vector<Cell> cells;
            for (const auto& rc : node["cells"]) cells.push_back({rc[0], rc[1]});
            const Diagram here(std::move(cells));
            for (const auto& edge : node["edges"]) {
                std::vector<Cell> child_cells;
                for (const auto& rc : edge["child"]["cells"])
                    child_cells.push_back({rc[0], rc[1]});
                Diagram moved = here;
                for (const auto& text : edge["moves"]) {
                    const std::string m = text.get<std::string>();
                    const auto arrow = m.find("->");
                    const JPMove move{m[0] == 'R' ? JPMove::Kind::Row : JPMove::Kind::Col,
                                      std::stoi(m.substr(1, arrow - 1)),
                                      std::stoi(m.substr(arrow + 2))};
                    moved = apply_move(move, moved);
                }
                CHECK(moved == Diagram(std::move(child_cells)));
                walk(edge["child"]);
            }
        };
    walk(parsed);

    const std::string rdot = reduced_jptree_dot(reduced_jp_tree(P("2143")));
    CHECK(rdot.find("digraph rjptree") != std::string::npos);
}
