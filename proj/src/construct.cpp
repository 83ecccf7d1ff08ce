#include "vote/construct.hpp"

#include <stdexcept>

namespace vote {

OutcomeTarget::OutcomeTarget(WeightingVector weighting_, Vec target_)
    : weighting(std::move(weighting_)), target(std::move(target_)) {
    if (target.size() != static_cast<std::size_t>(weighting.shape.n()))
        throw std::invalid_argument("OutcomeTarget: results vector must have one entry per candidate");
    if (!is_sum_zero(target))
        throw std::invalid_argument("OutcomeTarget: results vector must be sum-zero");
    if (!is_sum_zero(lift_weights(weighting)))
        throw std::invalid_argument("OutcomeTarget: lifted weighting vector must be sum-zero");
}

std::optional<ConstructResult> construct_profile(const Shape& shape,
                                                 const std::vector<OutcomeTarget>& targets) {
    if (targets.empty()) throw std::invalid_argument("construct_profile: no targets");
    const std::size_t d = shape.space_size();
    const std::size_t n = static_cast<std::size_t>(shape.n());
    Matrix system(targets.size() * n, d);
    Vec rhs(targets.size() * n);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        if (!(targets[t].weighting.shape == shape))
            throw std::invalid_argument("construct_profile: target shape mismatch");
        const Matrix tw = positional_matrix(targets[t].weighting);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < d; ++j) system(t * n + i, j) = tw(i, j);
            rhs[t * n + i] = targets[t].target[i];
        }
    }
    auto sol = solve_affine(system, rhs);
    if (!sol) return std::nullopt;
    return ConstructResult{Profile(shape, std::move(sol->particular)), std::move(sol->kernel)};
}

CountsResult normalize_to_counts(const Profile& p) {
    mpz_class lcm = 1;
    for (const auto& c : p.coeffs())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    const Rational scale{mpq_class(lcm)};

    Vec scaled(p.size());
    Rational min_entry;
    for (std::size_t i = 0; i < p.size(); ++i) {
        scaled[i] = scale * p[i];
        if (i == 0 || scaled[i] < min_entry) min_entry = scaled[i];
    }
    const Rational shift = min_entry.sign() < 0 ? -min_entry : Rational(0);
    for (auto& c : scaled) c += shift;
    return CountsResult{Profile(p.shape(), std::move(scaled)), scale, shift};
}

RapCountsResult normalize_to_counts(const RankedApprovalProfile& rap) {
    mpz_class lcm = 1;
    for (const Profile& b : rap.blocks)
        for (const auto& c : b.coeffs())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.denominator().get_mpz_t());
    const Rational scale{mpq_class(lcm)};

    RapCountsResult out{{}, scale, {}};
    for (const Profile& b : rap.blocks) {
        Vec scaled(b.size());
        Rational min_entry;
        for (std::size_t i = 0; i < b.size(); ++i) {
            scaled[i] = scale * b[i];
            if (i == 0 || scaled[i] < min_entry) min_entry = scaled[i];
        }
        const Rational shift = min_entry.sign() < 0 ? -min_entry : Rational(0);
        for (auto& c : scaled) c += shift;
        out.blocks.emplace_back(b.shape(), std::move(scaled));
        out.shifts.push_back(shift);
    }
    return out;
}

RankedApprovalProfile::RankedApprovalProfile(std::vector<Profile> blocks_) : blocks(std::move(blocks_)) {
    if (blocks.empty()) throw std::invalid_argument("RankedApprovalProfile: no blocks");
    const int n_ = blocks.front().shape().n();
    if (blocks.size() != static_cast<std::size_t>(n_) - 1)
        throw std::invalid_argument("RankedApprovalProfile: exactly n-1 blocks required");
    for (const Profile& b : blocks)
        if (!b.shape().is_full_ranking() || b.shape().n() != n_)
            throw std::invalid_argument("RankedApprovalProfile: blocks must all be full-ranking profiles on n candidates");
}

Vec approval_weights(int n, int i) {
    if (n < 2 || i < 1 || i > n - 1) throw std::invalid_argument("approval_weights: need 1 <= i <= n-1");
    Vec a(static_cast<std::size_t>(n));
    for (int j = 0; j < i; ++j) a[static_cast<std::size_t>(j)] = 1;
    return a;
}

Vec approval_weights_hat(int n, int i) {
    return sum_zero_part(approval_weights(n, i));
}

ApprovalTally approval_tally(const RankedApprovalProfile& rap) {
    const int n = rap.n();
    Vec full(static_cast<std::size_t>(n));
    for (std::size_t b = 0; b < rap.blocks.size(); ++b)
        full = vec_add(full, act_on_weights(rap.blocks[b], approval_weights(n, static_cast<int>(b) + 1)));
    Vec hat = sum_zero_part(full);
    return ApprovalTally{std::move(full), std::move(hat)};
}

ParadoxResult approval_positional_paradox(int n, const Vec& r_app, const Vec& r_pos, const Vec& w) {
    if (n < 3) throw std::invalid_argument("approval_positional_paradox: need n >= 3");
    if (r_app.size() != static_cast<std::size_t>(n) || r_pos.size() != static_cast<std::size_t>(n) ||
        w.size() != static_cast<std::size_t>(n))
        throw std::invalid_argument("approval_positional_paradox: vectors must have length n");
    if (!is_sum_zero(r_app) || !is_sum_zero(r_pos))
        throw std::invalid_argument("approval_positional_paradox: results vectors must be sum-zero");
    if (!is_sum_zero(w) || is_zero_vec(w))
        throw std::invalid_argument("approval_positional_paradox: weighting vector must be nontrivial sum-zero");

    const Shape full = Shape::full_ranking(n);
    const auto independent = [&](const Vec& a) {
        // w and a independent iff neither is a rational multiple of the other
        return !equivalent(w, a) && !reverse_equivalent(w, a);
    };

    // The block whose hat(a_i) is independent of w carries the two-target
    // system; the other block delivers the approval outcome alone.
    const Vec a2hat = approval_weights_hat(n, 2);
    const int two_block = independent(a2hat) ? 2 : 1;
    const int app_block = two_block == 2 ? 1 : 2;
    const Vec two_hat = approval_weights_hat(n, two_block);
    const Vec app_hat = approval_weights_hat(n, app_block);

    const auto approv = construct_profile(full, {OutcomeTarget(WeightingVector(full, app_hat), r_app)});
    if (!approv) throw std::logic_error("approval_positional_paradox: approval block system infeasible");
    const Vec correction = vec_sub(r_pos, act_on_weights(approv->profile, w));
    const auto positional = construct_profile(
        full, {OutcomeTarget(WeightingVector(full, two_hat), Vec(static_cast<std::size_t>(n))),
               OutcomeTarget(WeightingVector(full, w), correction)});
    if (!positional) throw std::logic_error("approval_positional_paradox: positional block system infeasible");

    std::vector<Profile> blocks;
    for (int i = 1; i <= n - 1; ++i) {
        if (i == app_block) blocks.push_back(approv->profile);
        else if (i == two_block) blocks.push_back(positional->profile);
        else blocks.push_back(Profile::zero(full));
    }
    ParadoxResult out{RankedApprovalProfile(std::move(blocks)), two_block};

    const ApprovalTally at = approval_tally(out.profile);
    if (!(at.sum_zero_part == r_app))
        throw std::logic_error("approval_positional_paradox: approval verification failed");
    Vec pos(static_cast<std::size_t>(n));
    for (const Profile& b : out.profile.blocks) pos = vec_add(pos, act_on_weights(b, w));
    if (!(pos == r_pos))
        throw std::logic_error("approval_positional_paradox: positional verification failed");
    return out;
}

} // namespace vote
