#pragma once

#include <vector>

#include "vote/tabloid.hpp"

namespace vote {

// Bijection on {1..n}; images()[j-1] = sigma(j). Acts on candidate labels.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int j) const { return images_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;
    // (a.compose(b))(j) = a(b(j))
    Permutation compose(const Permutation& other) const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }

private:
    std::vector<int> images_;
};

// Full preference list, top to bottom. Identified with the shape-(1,...,1)
// tabloid of singleton rows and with the permutation sigma(j) = order[j-1].
struct FullRanking {
    std::vector<int> order;

    explicit FullRanking(std::vector<int> order_);
    static FullRanking of_tabloid(const Tabloid& t); // shape must be (1,...,1)

    int n() const { return static_cast<int>(order.size()); }
    Permutation as_permutation() const { return Permutation(order); }
    Tabloid as_tabloid() const;
    // Position of a candidate, 1-based: order[pos-1] = candidate.
    int position_of(int candidate) const;

    friend bool operator==(const FullRanking& a, const FullRanking& b) { return a.order == b.order; }
};

// Relabels every entry e of t as sigma(e) and re-canonicalizes; this is a
// left action: apply(a.compose(b), t) == apply(a, apply(b, t)).
Tabloid apply(const Permutation& sigma, const Tabloid& t);

// The prod(parts!) full rankings whose row blocks reproduce t, in canonical order.
std::vector<FullRanking> rankings_of_tabloid(const Tabloid& t);

// Groups consecutive blocks of the ranking into rows of the given shape.
Tabloid tabloid_of_ranking(const Shape& shape, const FullRanking& r);

} // namespace vote
