#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "vote/shape.hpp"

namespace vote {

/*
 * Ordered set partition of {1..n}: row j holds the candidates sharing rank
 * block j. Canonical storage keeps each row ascending, which makes the
 * representation unique per equivalence class.
 *
 * Text form: rows separated by '|', entries by spaces, e.g. "2 5|1 3|4".
 */
class Tabloid {
public:
    explicit Tabloid(std::vector<std::vector<int>> rows);

    static Tabloid parse(const std::string& text);
    std::string str() const;

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int n() const { return n_; }
    Shape shape() const;
    int row_of(int candidate) const;

    // Rows concatenated in order; tabloids compare lexicographically on this.
    std::vector<int> flatten() const;

    friend bool operator==(const Tabloid& a, const Tabloid& b) { return a.rows_ == b.rows_; }
    friend bool operator<(const Tabloid& a, const Tabloid& b) { return a.flatten() < b.flatten(); }

private:
    std::vector<std::vector<int>> rows_;
    int n_;
};

// X^lambda in canonical order, with index lookup.
class TabloidSpace {
public:
    explicit TabloidSpace(Shape shape);

    const Shape& shape() const { return shape_; }
    std::size_t size() const { return tabloids_.size(); }
    const Tabloid& operator[](std::size_t i) const { return tabloids_[i]; }
    const std::vector<Tabloid>& all() const { return tabloids_; }

    std::size_t index(const Tabloid& t) const; // throws on shape mismatch

private:
    Shape shape_;
    std::vector<Tabloid> tabloids_;
};

std::vector<Tabloid> enumerate_tabloids(const Shape& shape);

} // namespace vote
