#include "stanley/partition.hpp"

#include <algorithm>
#include <numeric>

namespace stanley {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw invalid_input("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw invalid_input("partition parts must be weakly decreasing");
    }
}

Partition Partition::sorted(std::vector<int> values) {
    std::erase(values, 0);
    std::sort(values.rbegin(), values.rend());
    return Partition(std::move(values));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.rows() > rows()) return false;
    for (int i = 1; i <= mu.rows(); ++i)
        if (mu.part(i) > part(i)) return false;
    return true;
}

std::string Partition::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::string body = text;
    if (!body.empty() && body.front() == '(') {
        if (body.back() != ')') throw invalid_input("unbalanced parenthesis in partition");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<int> parts;
    std::size_t i = 0;
    while (i < body.size()) {
        while (i < body.size() && (body[i] == ',' || body[i] == ' ')) ++i;
        if (i == body.size()) break;
        std::size_t start = i;
        while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) ++i;
        if (i == start) throw invalid_input("bad partition literal: " + text);
        parts.push_back(std::stoi(body.substr(start, i - start)));
    }
    return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
    if (lambda.empty()) return {};
    std::vector<int> conj(lambda.part(1), 0);
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 0; j < lambda.part(i); ++j) ++conj[j];
    return Partition(std::move(conj));
}

Partition union_parts(const Partition& lambda, const Partition& mu) {
    std::vector<int> all = lambda.parts();
    all.insert(all.end(), mu.parts().begin(), mu.parts().end());
    return Partition::sorted(std::move(all));
}

Partition sum_parts(const Partition& lambda, const Partition& mu) {
    const int rows = std::max(lambda.rows(), mu.rows());
    std::vector<int> parts(rows);
    for (int i = 1; i <= rows; ++i) parts[i - 1] = lambda.part(i) + mu.part(i);
    std::erase(parts, 0);
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw invalid_input("dominance order compares partitions of equal size");
    int a = 0, b = 0;
    const int rows = std::max(lambda.rows(), mu.rows());
    for (int i = 1; i <= rows; ++i) {
        a += lambda.part(i);
        b += mu.part(i);
        if (a > b) return false;
    }
    return true;
}

std::vector<Partition> pieri_strips(const Partition& lambda, int k) {
    if (k < 0) throw invalid_input("strip size must be nonnegative");
    std::vector<Partition> out;
    const int rows = lambda.rows() + 1;
    std::vector<int> mu(rows);
    // Row i may grow up to lambda_{i-1}; distribute k extra cells.
    std::function<void(int, int)> place = [&](int i, int left) {
        if (i == rows + 1) {
            if (left == 0) {
                std::vector<int> parts(mu);
                std::erase(parts, 0);
                out.emplace_back(std::move(parts));
            }
            return;
        }
        const int lo = lambda.part(i);
        const int hi = i == 1 ? lambda.part(1) + left
                              : std::min(lambda.part(i - 1), lambda.part(i) + left);
        for (int v = lo; v <= hi; ++v) {
            mu[i - 1] = v;
            place(i + 1, left - (v - lo));
        }
        mu[i - 1] = 0;
    };
    place(1, k);
    std::sort(out.begin(), out.end());
    return out;
}

unsigned long long standard_tableaux_count(const Partition& lambda) {
    const int n = lambda.size();
    if (n == 0) return 1;
    const Partition conj = conjugate(lambda);
    unsigned __int128 numerator = 1;
    for (int i = 2; i <= n; ++i) numerator *= static_cast<unsigned>(i);
    for (int i = 1; i <= lambda.rows(); ++i)
        for (int j = 1; j <= lambda.part(i); ++j) {
            const unsigned hook =
                static_cast<unsigned>((lambda.part(i) - j) + (conj.part(j) - i) + 1);
            numerator /= hook;
        }
    return static_cast<unsigned long long>(numerator);
}

std::map<std::vector<int>, long long> schur_polynomial_coeffs(const Partition& lambda,
                                                              int num_vars) {
    if (num_vars <= 0) throw invalid_input("need at least one variable");
    std::map<std::vector<int>, long long> coeffs;
    if (lambda.empty()) {
        coeffs[std::vector<int>(num_vars, 0)] = 1;
        return coeffs;
    }
    if (lambda.rows() > num_vars) return coeffs;  // no semistandard fillings

    // Fill row-major; entries weakly increase along rows and strictly down columns.
    std::vector<std::vector<int>> filling(lambda.rows());
    for (int i = 0; i < lambda.rows(); ++i) filling[i].resize(lambda.part(i + 1));
    std::vector<int> content(num_vars, 0);

    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == lambda.rows()) {
            ++coeffs[content];
            return;
        }
        int nr = r, nc = c + 1;
        if (nc == lambda.part(r + 1)) {
            nr = r + 1;
            nc = 0;
        }
        const int lo = std::max(c > 0 ? filling[r][c - 1] : 1,
                                r > 0 && c < lambda.part(r) ? filling[r - 1][c] + 1 : 1);
        for (int v = lo; v <= num_vars; ++v) {
            filling[r][c] = v;
            ++content[v - 1];
            fill(nr, nc);
            --content[v - 1];
        }
    };
    fill(0, 0);
    return coeffs;
}

}  // namespace stanley
