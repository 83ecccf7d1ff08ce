#include "vote/profile.hpp"

#include <stdexcept>

namespace vote {

Profile::Profile(Shape shape, Vec coeffs) : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != shape_.space_size())
        throw std::invalid_argument("Profile: coefficient count does not match |X^lambda|");
}

Profile Profile::zero(const Shape& shape) {
    return Profile(shape, Vec(shape.space_size()));
}

bool Profile::is_voter_counts() const {
    for (const auto& c : coeffs_)
        if (!c.is_integer() || c.sign() < 0) return false;
    return true;
}

Profile lift(const Profile& p) {
    const Shape full = Shape::full_ranking(p.shape().n());
    if (p.shape().is_full_ranking()) return Profile(full, p.coeffs());

    Rational f(1);
    for (int part : p.shape().parts())
        for (int i = 2; i <= part; ++i) f *= i;
    const Rational inv_f = Rational(1) / f;

    const TabloidSpace domain(p.shape());
    const TabloidSpace target(full);
    Vec out(target.size());
    for (std::size_t x = 0; x < domain.size(); ++x) {
        if (p[x].is_zero()) continue;
        const Rational share = p[x] * inv_f;
        for (const FullRanking& r : rankings_of_tabloid(domain[x]))
            out[target.index(r.as_tabloid())] += share;
    }
    return Profile(full, std::move(out));
}

Profile project(const Profile& full_profile, const Shape& shape) {
    if (!full_profile.shape().is_full_ranking())
        throw std::invalid_argument("project: profile is not over full rankings");
    if (full_profile.shape().n() != shape.n())
        throw std::invalid_argument("project: size mismatch");
    const TabloidSpace domain(full_profile.shape());
    const TabloidSpace target(shape);
    Vec out(target.size());
    for (std::size_t i = 0; i < domain.size(); ++i) {
        if (full_profile[i].is_zero()) continue;
        const Tabloid t = tabloid_of_ranking(shape, FullRanking::of_tabloid(domain[i]));
        out[target.index(t)] += full_profile[i];
    }
    return Profile(shape, std::move(out));
}

Vec act_on_weights(const Profile& full_profile, const Vec& w) {
    if (!full_profile.shape().is_full_ranking())
        throw std::invalid_argument("act_on_weights: profile is not over full rankings");
    const int n = full_profile.shape().n();
    if (w.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("act_on_weights: weight length mismatch");
    const TabloidSpace space(full_profile.shape());
    Vec out(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (full_profile[i].is_zero()) continue;
        const FullRanking r = FullRanking::of_tabloid(space[i]);
        for (int j = 1; j <= n; ++j) {
            // candidate r.order[j-1] sits in position j and earns w[j-1]
            out[static_cast<std::size_t>(r.order[static_cast<std::size_t>(j - 1)] - 1)] +=
                full_profile[i] * w[static_cast<std::size_t>(j - 1)];
        }
    }
    return out;
}

Profile permute(const Permutation& sigma, const Profile& p) {
    if (sigma.n() != p.shape().n()) throw std::invalid_argument("permute: size mismatch");
    const TabloidSpace space(p.shape());
    Vec out(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (p[i].is_zero()) continue;
        out[space.index(apply(sigma, space[i]))] += p[i];
    }
    return Profile(p.shape(), std::move(out));
}

Vec permute_results(const Permutation& sigma, const Vec& results) {
    if (results.size() != static_cast<std::size_t>(sigma.n()))
        throw std::invalid_argument("permute_results: size mismatch");
    Vec out(results.size());
    const Permutation inv = sigma.inverse();
    for (int i = 1; i <= sigma.n(); ++i)
        out[static_cast<std::size_t>(i - 1)] = results[static_cast<std::size_t>(inv(i) - 1)];
    return out;
}

} // namespace vote
