#include "vote/tabloid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vote {

Tabloid::Tabloid(std::vector<std::vector<int>> rows) : rows_(std::move(rows)), n_(0) {
    if (rows_.empty()) throw std::invalid_argument("Tabloid: no rows");
    std::vector<int> seen;
    for (auto& row : rows_) {
        if (row.empty()) throw std::invalid_argument("Tabloid: empty row");
        std::sort(row.begin(), row.end());
        for (int e : row) seen.push_back(e);
        n_ += static_cast<int>(row.size());
    }
    std::sort(seen.begin(), seen.end());
    for (int i = 0; i < n_; ++i)
        if (seen[i] != i + 1)
            throw std::invalid_argument("Tabloid: entries must be exactly 1..n without repetition");
}

Tabloid Tabloid::parse(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::stringstream ss(text);
    std::string rowtext;
    while (std::getline(ss, rowtext, '|')) {
        std::vector<int> row;
        std::stringstream rs(rowtext);
        int e;
        while (rs >> e) row.push_back(e);
        if (!rs.eof()) throw std::invalid_argument("Tabloid::parse: bad entry in '" + text + "'");
        rows.push_back(std::move(row));
    }
    return Tabloid(std::move(rows));
}

std::string Tabloid::str() const {
    std::string out;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) out += "|";
        for (std::size_t i = 0; i < rows_[r].size(); ++i) {
            if (i) out += " ";
            out += std::to_string(rows_[r][i]);
        }
    }
    return out;
}

Shape Tabloid::shape() const {
    std::vector<int> parts;
    parts.reserve(rows_.size());
    for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
    return Shape(std::move(parts));
}

int Tabloid::row_of(int candidate) const {
    for (std::size_t r = 0; r < rows_.size(); ++r)
        if (std::binary_search(rows_[r].begin(), rows_[r].end(), candidate))
            return static_cast<int>(r);
    throw std::invalid_argument("Tabloid::row_of: no such candidate");
}

std::vector<int> Tabloid::flatten() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_));
    for (const auto& row : rows_) out.insert(out.end(), row.begin(), row.end());
    return out;
}

namespace {

// Generates rows recursively, choosing each row's candidate set in
// lexicographic order; since rows have fixed sizes this emits the whole
// enumeration in flatten-lex order.
void enumerate_rec(const std::vector<int>& remaining, const std::vector<int>& parts,
                   std::size_t depth, std::vector<std::vector<int>>& acc,
                   std::vector<Tabloid>& out) {
    if (depth == parts.size()) {
        out.emplace_back(acc);
        return;
    }
    const std::size_t take = static_cast<std::size_t>(parts[depth]);
    std::vector<std::size_t> idx(take);
    for (std::size_t i = 0; i < take; ++i) idx[i] = i;
    while (true) {
        std::vector<int> row(take);
        std::vector<bool> used(remaining.size(), false);
        for (std::size_t i = 0; i < take; ++i) {
            row[i] = remaining[idx[i]];
            used[idx[i]] = true;
        }
        std::vector<int> rest;
        rest.reserve(remaining.size() - take);
        for (std::size_t i = 0; i < remaining.size(); ++i)
            if (!used[i]) rest.push_back(remaining[i]);
        acc.push_back(std::move(row));
        enumerate_rec(rest, parts, depth + 1, acc, out);
        acc.pop_back();

        // next combination in lex order
        std::size_t i = take;
        while (i > 0 && idx[i - 1] == remaining.size() - take + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
}

} // namespace

std::vector<Tabloid> enumerate_tabloids(const Shape& shape) {
    std::vector<int> remaining(static_cast<std::size_t>(shape.n()));
    for (int i = 0; i < shape.n(); ++i) remaining[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Tabloid> out;
    out.reserve(shape.space_size());
    std::vector<std::vector<int>> acc;
    enumerate_rec(remaining, shape.parts(), 0, acc, out);
    return out;
}

TabloidSpace::TabloidSpace(Shape shape) : shape_(std::move(shape)), tabloids_(enumerate_tabloids(shape_)) {}

std::size_t TabloidSpace::index(const Tabloid& t) const {
    if (!(t.shape() == shape_)) throw std::invalid_argument("TabloidSpace::index: shape mismatch");
    const auto it = std::lower_bound(tabloids_.begin(), tabloids_.end(), t);
    if (it == tabloids_.end() || !(*it == t))
        throw std::logic_error("TabloidSpace::index: tabloid not found");
    return static_cast<std::size_t>(it - tabloids_.begin());
}

} // namespace vote
