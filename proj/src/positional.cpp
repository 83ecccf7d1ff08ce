#include "vote/positional.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace vote {

WeightingVector::WeightingVector(Shape shape_, Vec weights_)
    : shape(std::move(shape_)), weights(std::move(weights_)) {
    if (weights.size() != shape.num_parts())
        throw std::invalid_argument("WeightingVector: one weight per shape part required");
}

Vec lift_weights(const WeightingVector& w) {
    Vec out;
    out.reserve(static_cast<std::size_t>(w.shape.n()));
    for (std::size_t j = 0; j < w.shape.num_parts(); ++j)
        out.insert(out.end(), static_cast<std::size_t>(w.shape.parts()[j]), w.weights[j]);
    return out;
}

SumZeroSplit sum_zero_decompose(const Vec& v) {
    if (v.empty()) return {Vec{}, Vec{}};
    const Rational mean = vec_sum(v) / Rational(static_cast<long>(v.size()));
    SumZeroSplit out{Vec(v.size(), mean), Vec(v.size())};
    for (std::size_t i = 0; i < v.size(); ++i) out.hat[i] = v[i] - mean;
    return out;
}

Vec sum_zero_part(const Vec& v) { return sum_zero_decompose(v).hat; }

namespace {

// hat(w) = gamma * hat(x) for some gamma of the required sign.
bool hats_proportional(const Vec& w, const Vec& x, bool positive) {
    if (w.size() != x.size()) throw std::invalid_argument("equivalent: length mismatch");
    const Vec hw = sum_zero_part(w);
    const Vec hx = sum_zero_part(x);
    const bool wz = is_zero_vec(hw), xz = is_zero_vec(hx);
    if (wz || xz) return wz && xz;
    std::size_t i = 0;
    while (hx[i].is_zero()) ++i;
    const Rational gamma = hw[i] / hx[i];
    if (positive ? gamma.sign() <= 0 : gamma.sign() >= 0) return false;
    for (std::size_t j = 0; j < hw.size(); ++j)
        if (!(hw[j] == gamma * hx[j])) return false;
    return true;
}

} // namespace

bool equivalent(const Vec& w, const Vec& x) { return hats_proportional(w, x, true); }
bool reverse_equivalent(const Vec& w, const Vec& x) { return hats_proportional(w, x, false); }

Matrix positional_matrix(const WeightingVector& w) {
    const TabloidSpace space(w.shape);
    const int n = w.shape.n();
    Matrix out(static_cast<std::size_t>(n), space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
        const Tabloid& t = space[x];
        for (std::size_t j = 0; j < t.rows().size(); ++j)
            for (int candidate : t.rows()[j])
                out(static_cast<std::size_t>(candidate - 1), x) = w.weights[j];
    }
    return out;
}

Vec tally(const WeightingVector& w, const Profile& p) {
    if (!(w.shape == p.shape())) throw std::invalid_argument("tally: shape mismatch");
    Vec results = multiply(positional_matrix(w), p.coeffs());
    if (is_sum_zero(lift_weights(w)) && !is_sum_zero(results))
        throw std::logic_error("tally: sum-zero weighting produced non-sum-zero results");
    return results;
}

OrdinalRanking ordinal(const Vec& results) {
    std::vector<int> by_score(results.size());
    std::iota(by_score.begin(), by_score.end(), 1);
    std::stable_sort(by_score.begin(), by_score.end(), [&](int a, int b) {
        return results[static_cast<std::size_t>(a - 1)] > results[static_cast<std::size_t>(b - 1)];
    });
    OrdinalRanking out;
    for (int c : by_score) {
        if (out.groups.empty() ||
            !(results[static_cast<std::size_t>(c - 1)] ==
              results[static_cast<std::size_t>(out.groups.back().front() - 1)]))
            out.groups.push_back({});
        out.groups.back().push_back(c);
    }
    return out;
}

std::string OrdinalRanking::str() const {
    std::string out;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (g) out += " > ";
        for (std::size_t i = 0; i < groups[g].size(); ++i) {
            if (i) out += " = ";
            out += "c" + std::to_string(groups[g][i]);
        }
    }
    return out;
}

OrdinalRanking OrdinalRanking::reversed() const {
    OrdinalRanking out;
    out.groups.assign(groups.rbegin(), groups.rend());
    return out;
}

Subspace effective_space(const WeightingVector& w) {
    return row_space(positional_matrix(w));
}

bool effective_spaces_orthogonal(const Vec& w, const Vec& x) {
    if (w.size() != x.size()) throw std::invalid_argument("effective_spaces_orthogonal: length mismatch");
    if (!is_sum_zero(w) || !is_sum_zero(x))
        throw std::invalid_argument("effective_spaces_orthogonal: sum-zero vectors required");
    const Shape full = Shape::full_ranking(static_cast<int>(w.size()));
    const Subspace ew = effective_space(WeightingVector(full, w));
    const Subspace ex = effective_space(WeightingVector(full, x));
    bool all_zero = true;
    for (std::size_t i = 0; i < ew.dim() && all_zero; ++i)
        for (std::size_t j = 0; j < ex.dim(); ++j)
            if (!dot(ew.basis_vector(i), ex.basis_vector(j)).is_zero()) { all_zero = false; break; }
    if (all_zero != dot(w, x).is_zero())
        throw std::logic_error("effective_spaces_orthogonal: row-space test disagrees with scalar test");
    return all_zero;
}

} // namespace vote
