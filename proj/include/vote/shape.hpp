#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace vote {

// Composition of n: ordered list of positive parts. Row j of a tabloid of
// this shape holds parts()[j] candidates.
class Shape {
public:
    explicit Shape(std::vector<int> parts);

    static Shape full_ranking(int n);           // (1,...,1)
    static Shape top_k(int n, int k);           // (1^k, n-k), 1 <= k <= n-2
    static Shape pairs_codomain(int n);         // (1,1,n-2), n >= 3

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    std::size_t num_parts() const { return parts_.size(); }
    bool is_partition() const;
    bool is_full_ranking() const;
    // True for (1^k, n-k) with 1 <= k <= n-2; sets k.
    bool is_top_k(int& k) const;

    // |X^lambda| = n!/prod(parts!), exact.
    std::size_t space_size() const;

    std::string str() const;

    friend bool operator==(const Shape& a, const Shape& b) { return a.parts_ == b.parts_; }

private:
    std::vector<int> parts_;
    int n_;
};

} // namespace vote
