#pragma once

#include <optional>
#include <vector>

#include "vote/pairs.hpp"

namespace vote {

// A prescription "the positional outcome under this weighting vector must be
// exactly this sum-zero results vector". The weighting's lift must be
// sum-zero too; that is what the existence guarantee is stated for.
struct OutcomeTarget {
    WeightingVector weighting;
    Vec target;

    OutcomeTarget(WeightingVector weighting_, Vec target_);
};

struct ConstructResult {
    Profile profile;  // T_{w_i}(profile) = r_i exactly, for every target
    Subspace kernel;  // adding any kernel vector preserves every target
};

// Stacks the positional matrices of all targets into one exact linear system
// and solves it. Consistency is guaranteed whenever the lifted weighting
// vectors are linearly independent; otherwise the system may be infeasible,
// reported as std::nullopt.
std::optional<ConstructResult> construct_profile(const Shape& shape,
                                                 const std::vector<OutcomeTarget>& targets);

struct CountsResult {
    Profile counts;  // nonnegative integer entries
    Rational scale;  // minimal positive integer clearing all denominators
    Rational shift;  // minimal nonnegative uniform shift applied after scaling
};

// counts = scale * p + shift * (all-ones profile). Ordinal outcomes under
// every weighting vector are preserved; raw scores are not.
CountsResult normalize_to_counts(const Profile& p);

// Block i holds the full-ranking profile of voters approving their top i
// candidates, i = 1..n-1.
struct RankedApprovalProfile {
    std::vector<Profile> blocks;

    explicit RankedApprovalProfile(std::vector<Profile> blocks_);
    int n() const { return blocks.front().shape().n(); }
};

struct RapCountsResult {
    std::vector<Profile> blocks;
    Rational scale; // shared across blocks so relative block weights survive
    Vec shifts;     // per-block uniform shifts
};

// Same guarantee for ranked approval profiles: approval and positional
// ordinal outcomes are preserved.
RapCountsResult normalize_to_counts(const RankedApprovalProfile& rap);

// a_i = (1 x i, 0 x (n-i)) and its sum-zero part a_i - (i/n) * ones.
Vec approval_weights(int n, int i);
Vec approval_weights_hat(int n, int i);

struct ApprovalTally {
    Vec full_scores;   // sum_i p_i acting on a_i
    Vec sum_zero_part; // equals sum_i p_i acting on hat(a_i)
};
ApprovalTally approval_tally(const RankedApprovalProfile& rap);

struct ParadoxResult {
    RankedApprovalProfile profile;
    int two_target_block; // 2 when {w, hat(a_2)} was independent, else 1
};

// Builds a ranked approval profile whose approval outcome (sum-zero part) is
// exactly r_app while the positional outcome under the nontrivial sum-zero
// weighting vector w is exactly r_pos. Both outcomes are re-verified before
// returning; n >= 3.
ParadoxResult approval_positional_paradox(int n, const Vec& r_app, const Vec& r_pos, const Vec& w);

} // namespace vote
