#include "stanley/pattern_lab.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <numeric>
#include <thread>

#include "json.hpp"

#include "stanley/diagram.hpp"
#include "stanley/schur_expansion.hpp"

namespace stanley {

namespace {

bool essential_has_increasing_chain(const Permutation& w, std::size_t chain_len) {
    std::vector<Cell> ess = essential_set(rothe(w));
    std::sort(ess.begin(), ess.end());  // row-major
    // Longest strictly increasing chain in both coordinates: patience-style
    // DP on columns over the row-major order.
    std::vector<std::size_t> best(ess.size(), 1);
    std::size_t longest = ess.empty() ? 0 : 1;
    for (std::size_t i = 0; i < ess.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (ess[j].row < ess[i].row && ess[j].col < ess[i].col)
                best[i] = std::max(best[i], best[j] + 1);
        longest = std::max(longest, best[i]);
    }
    return longest >= chain_len;
}

// Brute-force triple scan; an intentionally different route from the DP.
bool essential_has_increasing_triple(const Permutation& w) {
    const std::vector<Cell> ess = essential_set(rothe(w));
    for (std::size_t a = 0; a < ess.size(); ++a)
        for (std::size_t b = 0; b < ess.size(); ++b)
            for (std::size_t c = 0; c < ess.size(); ++c)
                if (ess[a].row < ess[b].row && ess[b].row < ess[c].row &&
                    ess[a].col < ess[b].col && ess[b].col < ess[c].col)
                    return true;
    return false;
}

}  // namespace

std::string PredicateSpec::name() const {
    switch (kind) {
        case Kind::Vexillary: return "vexillary";
        case Kind::KVex: return "kvex(" + std::to_string(k) + ")";
        case Kind::MultFree: return "multfree";
        case Kind::MultBound: return "multbound(" + std::to_string(k) + ")";
        case Kind::Forest: return "forest";
        case Kind::Essential3: return "essential3";
        case Kind::EssPath2: return "esspath2";
    }
    return "?";
}

PredicateSpec PredicateSpec::parse(const std::string& text) {
    auto parse_k = [&](const std::string& prefix) -> long long {
        std::string rest = text.substr(prefix.size());
        if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
            rest = rest.substr(1, rest.size() - 2);
        if (rest.empty() ||
            !std::all_of(rest.begin(), rest.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw invalid_input("bad predicate parameter in \"" + text + "\"");
        return std::stoll(rest);
    };
    if (text == "vexillary") return {Kind::Vexillary, 0};
    if (text.rfind("kvex", 0) == 0) return {Kind::KVex, parse_k("kvex")};
    if (text == "multfree") return {Kind::MultFree, 0};
    if (text.rfind("multbound", 0) == 0) return {Kind::MultBound, parse_k("multbound")};
    if (text == "forest") return {Kind::Forest, 0};
    if (text == "essential3") return {Kind::Essential3, 0};
    if (text == "esspath2") return {Kind::EssPath2, 0};
    throw invalid_input("unknown predicate \"" + text + "\"");
}

bool PredicateSpec::evaluate(const Permutation& w) const {
    switch (kind) {
        case Kind::Vexillary: return is_vexillary(w);
        case Kind::KVex:
            if (k < 1) throw invalid_input("kvex needs k >= 1");
            return is_vexillary(w) || is_k_vexillary(w, k);
        case Kind::MultFree: return multiplicity_bounded_by(w, 1);
        case Kind::MultBound:
            if (k < 1) throw invalid_input("multbound needs k >= 1");
            return multiplicity_bounded_by(w, k);
        case Kind::Forest: return graph_is_forest(rothe(w));
        case Kind::Essential3: return !essential_has_increasing_triple(w);
        case Kind::EssPath2: return !essential_has_increasing_chain(w, 3);
    }
    return false;
}

namespace {

unsigned long long factorial(int n) {
    unsigned long long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned>(i);
    return f;
}

// Lexicographic unranking via the factorial number system.
std::vector<int> unrank(int n, unsigned long long rank) {
    std::vector<int> avail(n);
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> out;
    out.reserve(n);
    unsigned long long radix = factorial(n);
    for (int i = n; i >= 1; --i) {
        radix /= static_cast<unsigned>(i);
        const auto digit = static_cast<std::size_t>(rank / radix);
        rank %= radix;
        out.push_back(avail[digit]);
        avail.erase(avail.begin() + static_cast<long>(digit));
    }
    return out;
}

}  // namespace

void for_each_in_sn(int n, int workers,
                    const std::function<void(int, const Permutation&)>& fn) {
    if (n < 1) return;
    const unsigned long long total = factorial(n);
    const int blocks = std::max(1, std::min<int>(workers, static_cast<int>(
                                                              std::min<unsigned long long>(
                                                                  total, 1024))));
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(blocks);
    auto run_block = [&](int b) {
        try {
            const unsigned long long lo = total * b / blocks;
            const unsigned long long hi = total * (b + 1) / blocks;
            if (lo == hi) return;
            std::vector<int> oneline = unrank(n, lo);
            for (unsigned long long r = lo; r < hi; ++r) {
                fn(b, Permutation(std::vector<int>(oneline)));
                std::next_permutation(oneline.begin(), oneline.end());
            }
        } catch (...) {
            errors[b] = std::current_exception();
        }
    };
    if (blocks == 1) {
        run_block(0);
    } else {
        threads.reserve(blocks);
        for (int b = 0; b < blocks; ++b) threads.emplace_back(run_block, b);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::string ScanReport::to_json() const {
    nlohmann::ordered_json j;
    j["predicate"] = predicate;
    j["max_n"] = max_n;
    auto& c = j["counts"] = nlohmann::ordered_json::object();
    for (int n = 1; n <= max_n; ++n) c[std::to_string(n)] = counts[n - 1];
    if (mined) {
        auto& pats = j["minimal_patterns"] = nlohmann::ordered_json::array();
        for (const Permutation& p : minimal_patterns) pats.push_back(p.str());
    }
    return j.dump();
}

std::string ScanReport::to_csv() const {
    std::string out = "n,count\n";
    for (int n = 1; n <= max_n; ++n)
        out += std::to_string(n) + "," + std::to_string(counts[n - 1]) + "\n";
    return out;
}

std::string ScanReport::pattern_lines() const {
    std::string out;
    for (const Permutation& p : minimal_patterns) out += p.str() + "\n";
    return out;
}

ScanReport classify_all(int max_n, const PredicateSpec& spec, int workers, int hard_max) {
    if (max_n < 1) throw invalid_input("max_n must be >= 1");
    if (max_n > hard_max)
        throw resource_error("scan over S_" + std::to_string(max_n) + " refused: " +
                             std::to_string(factorial(max_n)) +
                             " permutations exceeds the configured maximum of S_" +
                             std::to_string(hard_max));
    const auto t0 = std::chrono::steady_clock::now();
    ScanReport report;
    report.predicate = spec.name();
    report.max_n = max_n;
    report.workers = workers;
    report.counts.assign(max_n, 0);
    for (int n = 1; n <= max_n; ++n) {
        std::vector<unsigned long long> per_block(1024, 0);
        for_each_in_sn(n, workers, [&](int block, const Permutation& w) {
            if (spec.evaluate(w)) ++per_block[block];
        });
        for (unsigned long long c : per_block) report.counts[n - 1] += c;
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

void closure_self_test(const PredicateSpec& spec, int n_max) {
    for (int n = 2; n <= n_max; ++n) {
        std::atomic<bool> closed{true};
        for_each_in_sn(n, 1, [&](int, const Permutation& w) {
            if (!closed.load() || w.size() < n) return;  // canonical forms only
            if (!spec.evaluate(w)) return;
            for (const Permutation& v : one_point_deletions(w))
                if (!spec.evaluate(v)) {
                    closed.store(false);
                    return;
                }
        });
        if (!closed.load())
            throw predicate_not_closed("predicate " + spec.name() +
                                       " is not closed under one-point deletion at n = " +
                                       std::to_string(n));
    }
}

ScanReport minimal_forbidden_patterns(const PredicateSpec& spec, int n_max, int workers,
                                      int closure_check_n) {
    closure_self_test(spec, std::min(n_max, closure_check_n));
    const auto t0 = std::chrono::steady_clock::now();
    ScanReport report;
    report.predicate = spec.name();
    report.max_n = n_max;
    report.counts.assign(n_max, 0);
    report.mined = true;
    report.workers = workers;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<std::vector<Permutation>> per_block(1024);
        std::vector<unsigned long long> fail_counts(1024, 0);
        for_each_in_sn(n, workers, [&](int block, const Permutation& w) {
            if (w.size() < n) return;  // already seen at its canonical size
            if (spec.evaluate(w)) return;
            ++fail_counts[block];
            for (const Permutation& v : one_point_deletions(w))
                if (!spec.evaluate(v)) return;
            per_block[block].push_back(w);
        });
        for (unsigned long long c : fail_counts) report.counts[n - 1] += c;
        for (auto& block : per_block)
            report.minimal_patterns.insert(report.minimal_patterns.end(), block.begin(),
                                           block.end());
    }
    std::sort(report.minimal_patterns.begin(), report.minimal_patterns.end(),
              [](const Permutation& a, const Permutation& b) {
                  return std::pair(a.size(), a.oneline()) < std::pair(b.size(), b.oneline());
              });
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

bool avoids_all(const Permutation& w, const std::vector<Permutation>& patterns) {
    for (const Permutation& p : patterns)
        if (contains(w, p)) return false;
    return true;
}

namespace {

// Avoidance of a non-k-vexillary pattern set can be settled early: every
// such pattern contains 2143, so vexillary permutations avoid them all.
bool avoidance_with_shortcut(const Permutation& w, const std::vector<Permutation>& patterns,
                             bool all_contain_2143) {
    if (all_contain_2143 && is_vexillary(w)) return true;
    return avoids_all(w, patterns);
}

}  // namespace

CharacterizationResult verify_avoidance_characterization(
    const PredicateSpec& spec, const std::vector<Permutation>& patterns, int n_check,
    int workers) {
    CharacterizationResult result;
    const bool shortcut = std::all_of(patterns.begin(), patterns.end(), [](const Permutation& p) {
        return contains_2143(p);
    });
    std::atomic<unsigned long long> checked{0};
    std::vector<std::vector<Permutation>> bad(1024);
    for (int n = 1; n <= n_check; ++n) {
        for_each_in_sn(n, workers, [&](int block, const Permutation& w) {
            if (w.size() < n && !(n == 1 && w.is_identity())) return;
            ++checked;
            if (spec.evaluate(w) != avoidance_with_shortcut(w, patterns, shortcut))
                bad[block].push_back(w);
        });
    }
    result.checked = checked.load();
    for (auto& block : bad)
        result.counterexamples.insert(result.counterexamples.end(), block.begin(), block.end());
    result.holds = result.counterexamples.empty();
    return result;
}

namespace {

unsigned long long splitmix64(unsigned long long x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

Permutation sampled_permutation(int n, unsigned long long index) {
    // Index-addressed Fisher-Yates with a fixed seed: sample i is the same
    // no matter how samples are split across workers.
    unsigned long long state = splitmix64(0x5A17ULL * 0x1000003ULL + index) ^
                               splitmix64(0xABCDEF12345ULL + n);
    std::vector<int> oneline(n);
    std::iota(oneline.begin(), oneline.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        state = splitmix64(state);
        std::swap(oneline[i], oneline[state % static_cast<unsigned long long>(i + 1)]);
    }
    return Permutation(std::move(oneline));
}

CharacterizationResult verify_characterization_sampled(const PredicateSpec& spec,
                                                       const std::vector<Permutation>& patterns,
                                                       int n, unsigned long long samples,
                                                       int workers) {
    CharacterizationResult result;
    const bool shortcut = std::all_of(patterns.begin(), patterns.end(), [](const Permutation& p) {
        return contains_2143(p);
    });
    const int blocks = std::max(1, workers);
    std::vector<std::vector<Permutation>> bad(blocks);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(blocks);
    auto run_block = [&](int b) {
        try {
            for (unsigned long long i = b; i < samples; i += blocks) {
                const Permutation w = sampled_permutation(n, i);
                if (spec.evaluate(w) != avoidance_with_shortcut(w, patterns, shortcut))
                    bad[b].push_back(w);
            }
        } catch (...) {
            errors[b] = std::current_exception();
        }
    };
    if (blocks == 1) {
        run_block(0);
    } else {
        for (int b = 0; b < blocks; ++b) threads.emplace_back(run_block, b);
        for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    result.checked = samples;
    for (auto& block : bad) {
        result.counterexamples.insert(result.counterexamples.end(), block.begin(), block.end());
    }
    std::sort(result.counterexamples.begin(), result.counterexamples.end());
    result.holds = result.counterexamples.empty();
    return result;
}

PositivityReport code_pattern_positivity_scan(int n, int workers) {
    PositivityReport report;
    std::atomic<unsigned long long> pairs{0};
    std::atomic<bool> positive{true}, inherited{true};
    std::vector<std::vector<std::pair<Permutation, Permutation>>> bad(1024);
    for_each_in_sn(n, workers, [&](int block, const Permutation& w) {
        const SchurExpansion fw = stanley_via_ls(w);
        const bool w_free = fw.max_multiplicity() <= 1;
        for (const Permutation& v : code_pattern_children(w)) {
            ++pairs;
            const SchurExpansion fv = stanley_via_ls(v);
            const bool pos = SchurExpansion::try_subtract(fw, fv).has_value();
            const bool inh = !w_free || fv.max_multiplicity() <= 1;
            if (!pos) positive.store(false);
            if (!inh) inherited.store(false);
            if (!pos || !inh) bad[block].push_back({w, v});
        }
    });
    report.pairs_checked = pairs.load();
    report.all_positive = positive.load();
    report.multiplicity_free_inherited = inherited.load();
    for (auto& block : bad)
        report.failures.insert(report.failures.end(), block.begin(), block.end());
    return report;
}

}  // namespace stanley
