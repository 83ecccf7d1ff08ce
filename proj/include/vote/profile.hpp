#pragma once

#include "vote/matrix.hpp"
#include "vote/permutation.hpp"
#include "vote/tabloid.hpp"

namespace vote {

/*
 * Rational vector indexed by the canonical tabloid order of X^lambda.
 * Any rational entries are permitted; a voter-count profile additionally
 * has nonnegative integer entries (checked on demand, not by construction).
 */
class Profile {
public:
    Profile(Shape shape, Vec coeffs);
    static Profile zero(const Shape& shape);

    const Shape& shape() const { return shape_; }
    const Vec& coeffs() const { return coeffs_; }
    Rational& operator[](std::size_t i) { return coeffs_[i]; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
    std::size_t size() const { return coeffs_.size(); }

    bool is_voter_counts() const; // all entries nonnegative integers

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.shape_ == b.shape_ && a.coeffs_ == b.coeffs_;
    }

private:
    Shape shape_;
    Vec coeffs_;
};

// iota: spreads each tabloid's coefficient equally (weight 1/f, f = prod parts!)
// over its f full rankings. project(lift(p), shape) == p exactly.
Profile lift(const Profile& p);

// pi: coefficient of a tabloid is the sum over the full rankings it contains.
Profile project(const Profile& full_profile, const Shape& shape);

// Full-ranking profile acting on a weighting vector in Q^n: candidate i
// receives w[sigma^{-1}(i)] from each ranking sigma, weighted by p(sigma).
Vec act_on_weights(const Profile& full_profile, const Vec& w);

// (sigma p)(x) = p(sigma^{-1} x).
Profile permute(const Permutation& sigma, const Profile& p);

// (sigma r)_i = r_{sigma^{-1}(i)} for results vectors in Q^n.
Vec permute_results(const Permutation& sigma, const Vec& results);

} // namespace vote
