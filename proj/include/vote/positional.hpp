#pragma once

#include <string>
#include <vector>

#include "vote/linalg.hpp"
#include "vote/profile.hpp"

namespace vote {

// One weight per row of the shape; row j of every tabloid is worth weights[j]
// points to each candidate in it.
struct WeightingVector {
    Shape shape;
    Vec weights;

    WeightingVector(Shape shape_, Vec weights_);
};

// Repeats weights[j] exactly parts[j] times: the vector the procedure
// effectively applies to full rankings.
Vec lift_weights(const WeightingVector& w);

struct SumZeroSplit {
    Vec ones_part; // (mean) * all-ones
    Vec hat;       // sum-zero remainder
};
SumZeroSplit sum_zero_decompose(const Vec& v);
Vec sum_zero_part(const Vec& v);

// w ~ x iff x = alpha w + beta 1 with alpha > 0; equivalently the sum-zero
// parts are positive multiples of each other. Equivalent vectors produce the
// same ordinal outcome on every profile.
bool equivalent(const Vec& w, const Vec& x);
// Same with a negative multiple (w ~ -x).
bool reverse_equivalent(const Vec& w, const Vec& x);

// n x |X^lambda|; the column of tabloid x pays weights[j] to every candidate
// in row j of x.
Matrix positional_matrix(const WeightingVector& w);

// positional_matrix(w) * p. Equals act_on_weights(lift(p), lift_weights(w)).
Vec tally(const WeightingVector& w, const Profile& p);

// Tie groups by decreasing score; no tie is ever broken.
struct OrdinalRanking {
    std::vector<std::vector<int>> groups;

    std::string str() const;
    OrdinalRanking reversed() const;
    friend bool operator==(const OrdinalRanking& a, const OrdinalRanking& b) { return a.groups == b.groups; }
};
OrdinalRanking ordinal(const Vec& results);

// Row space of the positional matrix = orthogonal complement of ker T_w:
// the profile information that can influence the outcome.
Subspace effective_space(const WeightingVector& w);

// For nontrivial sum-zero w, x over full rankings: the row spaces of T_w and
// T_x are orthogonal iff w . x = 0. Both routes are computed and must agree.
bool effective_spaces_orthogonal(const Vec& w, const Vec& x);

} // namespace vote
