// Command-line front end for the Stanley symmetric function engines.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget/resource.

#include <cstdlib>
#include <functional>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "stanley/diagram.hpp"
#include "stanley/edelman_greene.hpp"
#include "stanley/jp_tree.hpp"
#include "stanley/monomial_oracle.hpp"
#include "stanley/pattern_lab.hpp"
#include "stanley/transition_tree.hpp"
#include "stanley/verify.hpp"

using namespace stanley;

namespace {

TreeBudget budget_from(unsigned long long nodes) { return TreeBudget{nodes}; }

unsigned long long env_budget_default() {
    if (const char* env = std::getenv("STANLEY_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        std::cerr << "warning: ignoring malformed STANLEY_BUDGET\n";
    }
    return TreeBudget{}.max_nodes;
}

std::string partition_json(const Partition& p) {
    nlohmann::ordered_json j = p.parts();
    return j.dump();
}

std::string expansion_json(const SchurExpansion& f) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [shape, mult] : f.terms()) {
        nlohmann::ordered_json term;
        term["shape"] = shape.parts();
        term["mult"] = mult;
        arr.push_back(std::move(term));
    }
    return arr.dump();
}

std::string diagram_json(const Diagram& d) {
    auto arr = nlohmann::ordered_json::array();
    for (const Cell& c : d.cells()) arr.push_back({c.row, c.col});
    return arr.dump();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stanley symmetric functions, diagram decompositions, and "
                 "pattern classification"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow a subcommand

    unsigned long long budget_nodes = env_budget_default();
    app.add_option("--budget", budget_nodes, "node budget for tree construction");

    std::string perm_text, method = "ls", pred_text = "vexillary", suite = "all";
    std::string fixtures = STANLEY_DEFAULT_FIXTURES;
    bool as_json = false, as_dot = false, as_csv = false;
    bool count_only = false, reduced = false, minimal = false;
    bool show_essential = false, show_dmin = false, show_dmax = false;
    int max_n = 0, workers = 1;
    long long witness_k = 1;
    unsigned long long cap = kDefaultWordCap;

    auto* fw = app.add_subcommand("fw", "Schur expansion of F_w");
    fw->add_option("permutation", perm_text)->required();
    fw->add_option("--method", method)->check(CLI::IsMember({"ls", "eg", "oracle"}));
    fw->add_flag("--json", as_json);

    auto* egt = app.add_subcommand("eg-tableaux", "insertion tableaux of all reduced words");
    egt->add_option("permutation", perm_text)->required();
    egt->add_flag("--json", as_json);
    egt->add_option("--cap", cap, "reduced word cap");

    auto* red = app.add_subcommand("redwords", "reduced words");
    red->add_option("permutation", perm_text)->required();
    red->add_flag("--count", count_only, "print only the count");
    red->add_option("--cap", cap, "enumeration cap");

    auto* lst = app.add_subcommand("lstree", "transition recursion tree");
    lst->add_option("permutation", perm_text)->required();
    lst->add_flag("--dot", as_dot);
    lst->add_flag("--json", as_json);
    lst->add_option("--workers", workers)->check(CLI::PositiveNumber);

    auto* jpt = app.add_subcommand("jptree", "diagram move tree");
    jpt->add_option("permutation", perm_text)->required();
    jpt->add_flag("--reduced", reduced, "contract row/column-permuting edges");
    jpt->add_flag("--dot", as_dot);
    jpt->add_flag("--json", as_json);

    auto* dia = app.add_subcommand("diagram", "inversion diagram of a permutation");
    dia->add_option("permutation", perm_text)->required();
    dia->add_flag("--essential", show_essential);
    dia->add_flag("--dmin", show_dmin);
    dia->add_flag("--dmax", show_dmax);
    dia->add_flag("--json", as_json);

    auto* cls = app.add_subcommand("classify", "summary statistics of one permutation");
    cls->add_option("permutation", perm_text)->required();
    cls->add_flag("--json", as_json);

    auto* ske = app.add_subcommand("skeleton", "pattern with the same term count");
    ske->add_option("permutation", perm_text)->required();

    auto* wit = app.add_subcommand("witness", "small pattern exceeding k terms");
    wit->add_option("permutation", perm_text)->required();
    wit->add_option("--k", witness_k)->required();

    auto* scan = app.add_subcommand("scan", "classify all of S_1..S_n");
    scan->add_option("--pred", pred_text, "predicate")->required();
    scan->add_option("--max-n", max_n)->required()->check(CLI::PositiveNumber);
    scan->add_flag("--minimal", minimal, "mine minimal forbidden patterns");
    scan->add_option("--workers", workers)->check(CLI::PositiveNumber);
    scan->add_flag("--json", as_json);
    scan->add_flag("--csv", as_csv);

    auto* ver = app.add_subcommand("verify", "run a named verification suite");
    ver->add_option("--suite", suite)->required();
    ver->add_option("--max-n", max_n);
    ver->add_option("--workers", workers)->check(CLI::PositiveNumber);
    ver->add_option("--fixtures", fixtures, "pattern fixture directory");
    ver->add_option("--samples", cap, "samples per sampled check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const TreeBudget budget = budget_from(budget_nodes);

    try {
        if (fw->parsed()) {
            const Permutation w = Permutation::parse(perm_text);
            SchurExpansion f;
            if (method == "ls")
                f = stanley_via_ls(w, budget);
            else if (method == "eg")
                f = stanley_via_eg(w);
            else
                f = stanley_via_oracle(w);
            std::cout << (as_json ? expansion_json(f) : f.str()) << "\n";
        } else if (egt->parsed()) {
            const Permutation w = Permutation::parse(perm_text);
            const auto tabs = eg_tableaux(w, cap);
            if (as_json) {
                auto arr = nlohmann::ordered_json::array();
                for (const EGTableau& t : tabs) arr.push_back(t.rows);
                std::cout << arr.dump() << "\n";
            } else {
                for (std::size_t i = 0; i < tabs.size(); ++i)
                    std::cout << tabs[i].str() << (i + 1 < tabs.size() ? "\n\n" : "\n");
            }
        } else if (red->parsed()) {
            const Permutation w = Permutation::parse(perm_text);
            if (count_only) {
                std::cout << reduced_word_count(w, cap) << "\n";
            } else {
                for (const auto& word : reduced_words(w, cap)) {
                    for (std::size_t i = 0; i < word.size(); ++i)
                        std::cout << (i ? " " : "") << word[i];
                    std::cout << "\n";
                }
            }
        } else if (lst->parsed()) {
            const LSTree tree = ls_tree(Permutation::parse(perm_text), budget, workers);
            if (as_dot) {
                std::cout << lstree_dot(tree);
            } else if (as_json) {
                std::cout << lstree_json(tree) << "\n";
            } else {
                std::function<void(const LSNode&, int)> show = [&](const LSNode& n, int depth) {
                    std::cout << std::string(2 * depth, ' ') << n.perm.str();
                    if (n.shifts > 0) std::cout << " [shifted x" << n.shifts << "]";
                    if (n.leaf()) std::cout << "  " << vexillary_shape(n.perm).str();
                    std::cout << "\n";
                    for (const LSNode& c : n.children) show(c, depth + 1);
                };
                show(tree.root, 0);
            }
        } else if (jpt->parsed()) {
            const Permutation w = Permutation::parse(perm_text);
            if (reduced) {
                const ReducedJPTree tree = reduced_jp_tree(w, budget);
                std::cout << (as_dot ? reduced_jptree_dot(tree)
                                     : reduced_jptree_json(tree) + "\n");
            } else {
                const JPTree tree = jp_tree(w, budget);
                std::cout << (as_dot ? jptree_dot(tree) : jptree_json(tree) + "\n");
            }
        } else if (dia->parsed()) {
            const Diagram d = rothe(Permutation::parse(perm_text));
            if (show_essential) {
                std::string out;
                for (const Cell& c : essential_set(d)) {
                    if (!out.empty()) out += ' ';
                    out += "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
                }
                std::cout << out << "\n";
            } else if (show_dmin) {
                std::cout << (as_json ? partition_json(d_min(d)) : d_min(d).str()) << "\n";
            } else if (show_dmax) {
                std::cout << (as_json ? partition_json(d_max(d)) : d_max(d).str()) << "\n";
            } else {
                std::cout << (as_json ? diagram_json(d) : d.ascii()) << "\n";
            }
        } else if (cls->parsed()) {
            const Permutation w = Permutation::parse(perm_text);
            const SchurExpansion f = stanley_via_ls(w, budget);
            const long long eg = f.total();
            const long long bound = f.max_multiplicity() == 0 ? 1 : f.max_multiplicity();
            const bool vex = is_vexillary(w);
            const bool forest = graph_is_forest(rothe(w));
            if (as_json) {
                nlohmann::ordered_json j;
                j["perm"] = w.str();
                j["eg"] = eg;
                j["min_k"] = eg;
                j["mult_bound"] = bound;
                j["vexillary"] = vex;
                j["forest"] = forest;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "EG=" << eg << " min-k=" << eg << " mult-bound=" << bound
                          << " vexillary=" << (vex ? "yes" : "no")
                          << " forest=" << (forest ? "yes" : "no") << "\n";
            }
        } else if (ske->parsed()) {
            std::cout << skeleton_pattern(Permutation::parse(perm_text), budget).str() << "\n";
        } else if (wit->parsed()) {
            const auto v = witness_pattern(Permutation::parse(perm_text), witness_k, budget);
            std::cout << (v ? v->str() : std::string("none")) << "\n";
        } else if (scan->parsed()) {
            const PredicateSpec spec = PredicateSpec::parse(pred_text);
            const ScanReport report = minimal
                                          ? minimal_forbidden_patterns(spec, max_n, workers)
                                          : classify_all(max_n, spec, workers);
            if (as_json)
                std::cout << report.to_json() << "\n";
            else if (as_csv)
                std::cout << report.to_csv();
            else if (minimal)
                std::cout << report.pattern_lines();
            else
                std::cout << report.to_csv();
            std::cerr << "workers=" << report.workers << " seconds=" << report.seconds << "\n";
        } else if (ver->parsed()) {
            VerifyOptions opt;
            opt.workers = workers;
            opt.max_n = max_n;
            opt.fixture_dir = fixtures;
            if (ver->count("--samples")) opt.samples = cap;
            bool all_pass = true;
            for (const SuiteResult& r : run_verify_suite(suite, opt)) {
                std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
                          << " (" << r.seconds << "s)\n";
                all_pass = all_pass && r.pass;
            }
            if (!all_pass) return 1;
        }
    } catch (const budget_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
