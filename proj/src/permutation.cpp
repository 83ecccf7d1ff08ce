#include "vote/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace vote {

namespace {

void check_is_permutation(const std::vector<int>& v, const char* what) {
    std::vector<int> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != static_cast<int>(i) + 1)
            throw std::invalid_argument(std::string(what) + ": not a permutation of 1..n");
    if (v.empty()) throw std::invalid_argument(std::string(what) + ": empty");
}

} // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    check_is_permutation(images_, "Permutation");
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) im[static_cast<std::size_t>(j - 1)] = j;
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j)
        inv[static_cast<std::size_t>(images_[j] - 1)] = static_cast<int>(j) + 1;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
    if (n() != other.n()) throw std::invalid_argument("Permutation::compose: size mismatch");
    std::vector<int> im(images_.size());
    for (int j = 1; j <= n(); ++j) im[static_cast<std::size_t>(j - 1)] = (*this)(other(j));
    return Permutation(std::move(im));
}

FullRanking::FullRanking(std::vector<int> order_) : order(std::move(order_)) {
    check_is_permutation(order, "FullRanking");
}

FullRanking FullRanking::of_tabloid(const Tabloid& t) {
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(t.n()));
    for (const auto& row : t.rows()) {
        if (row.size() != 1) throw std::invalid_argument("FullRanking::of_tabloid: shape is not (1,...,1)");
        order.push_back(row[0]);
    }
    return FullRanking(std::move(order));
}

Tabloid FullRanking::as_tabloid() const {
    std::vector<std::vector<int>> rows;
    rows.reserve(order.size());
    for (int c : order) rows.push_back({c});
    return Tabloid(std::move(rows));
}

int FullRanking::position_of(int candidate) const {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == candidate) return static_cast<int>(i) + 1;
    throw std::invalid_argument("FullRanking::position_of: no such candidate");
}

Tabloid apply(const Permutation& sigma, const Tabloid& t) {
    if (sigma.n() != t.n()) throw std::invalid_argument("apply: size mismatch");
    std::vector<std::vector<int>> rows;
    rows.reserve(t.rows().size());
    for (const auto& row : t.rows()) {
        std::vector<int> mapped;
        mapped.reserve(row.size());
        for (int e : row) mapped.push_back(sigma(e));
        rows.push_back(std::move(mapped));
    }
    return Tabloid(std::move(rows)); // constructor re-canonicalizes
}

std::vector<FullRanking> rankings_of_tabloid(const Tabloid& t) {
    // Odometer over per-row permutations, earlier rows outermost, each row
    // cycling in lex order: the output is in canonical (flatten-lex) order.
    std::vector<std::vector<int>> rows = t.rows();
    std::vector<FullRanking> out;
    while (true) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(t.n()));
        for (const auto& row : rows) order.insert(order.end(), row.begin(), row.end());
        out.push_back(FullRanking(std::move(order)));

        std::size_t r = rows.size();
        while (r > 0 && !std::next_permutation(rows[r - 1].begin(), rows[r - 1].end())) --r;
        if (r == 0) break;
        // next_permutation already reset rows beyond r-1 to ascending order
    }
    return out;
}

Tabloid tabloid_of_ranking(const Shape& shape, const FullRanking& r) {
    if (shape.n() != r.n()) throw std::invalid_argument("tabloid_of_ranking: size mismatch");
    std::vector<std::vector<int>> rows;
    rows.reserve(shape.num_parts());
    std::size_t at = 0;
    for (int part : shape.parts()) {
        rows.emplace_back(r.order.begin() + static_cast<long>(at),
                          r.order.begin() + static_cast<long>(at + static_cast<std::size_t>(part)));
        at += static_cast<std::size_t>(part);
    }
    return Tabloid(std::move(rows));
}

} // namespace vote
