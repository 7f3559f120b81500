#include "stanley/schur_expansion.hpp"

namespace stanley {

SchurExpansion SchurExpansion::one() {
    SchurExpansion e;
    e.add(Partition{});
    return e;
}

void SchurExpansion::add(const Partition& shape, long long mult) {
    if (mult == 0) return;
    if (mult < 0) throw invalid_input("multiplicities must be positive");
    if (degree_ < 0)
        degree_ = shape.size();
    else if (shape.size() != degree_)
        throw invalid_input("expansion must stay homogeneous: got |shape| = " +
                            std::to_string(shape.size()) + " in degree " +
                            std::to_string(degree_));
    terms_[shape] += mult;
}

void SchurExpansion::add(const SchurExpansion& other) {
    for (const auto& [shape, mult] : other.terms_) add(shape, mult);
}

long long SchurExpansion::total() const {
    long long t = 0;
    for (const auto& [shape, mult] : terms_) t += mult;
    return t;
}

long long SchurExpansion::max_multiplicity() const {
    long long m = 0;
    for (const auto& [shape, mult] : terms_) m = std::max(m, mult);
    return m;
}

long long SchurExpansion::multiplicity(const Partition& shape) const {
    auto it = terms_.find(shape);
    return it == terms_.end() ? 0 : it->second;
}

std::optional<SchurExpansion> SchurExpansion::try_subtract(const SchurExpansion& a,
                                                           const SchurExpansion& b) {
    for (const auto& [shape, mult] : b.terms_)
        if (a.multiplicity(shape) < mult) return std::nullopt;
    SchurExpansion out;
    for (const auto& [shape, mult] : a.terms_) {
        const long long rest = mult - b.multiplicity(shape);
        if (rest > 0) out.add(shape, rest);
    }
    return out;
}

std::string SchurExpansion::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [shape, mult] : terms_) {
        if (!out.empty()) out += " + ";
        if (mult != 1) out += std::to_string(mult) + " ";
        out += "s[";
        for (int i = 1; i <= shape.rows(); ++i) {
            if (i > 1) out += ',';
            out += std::to_string(shape.part(i));
        }
        out += ']';
    }
    return out;
}

}  // namespace stanley
