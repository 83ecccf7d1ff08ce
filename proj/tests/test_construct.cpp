#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace vote;
namespace vt = vote::testing;

namespace {

Vec qvec(std::initializer_list<long> xs) {
    Vec out;
    for (long x : xs) out.push_back(Rational(x));
    return out;
}

} // namespace

TEST_CASE("outcome targets validate their invariants") {
    const Shape full3 = Shape::full_ranking(3);
    CHECK_THROWS_AS(OutcomeTarget(WeightingVector(full3, qvec({1, 0, -1})), qvec({1, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(OutcomeTarget(WeightingVector(full3, qvec({2, 1, 0})), qvec({1, 0, -1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(OutcomeTarget(WeightingVector(full3, qvec({1, 0, -1})), qvec({1, -1})),
                    std::invalid_argument);
}

TEST_CASE("a single sum-zero target is always achievable exactly") {
    const Shape full3 = Shape::full_ranking(3);
    const WeightingVector w(full3, qvec({1, 0, -1}));
    const Vec r = qvec({2, -1, -1});
    const auto result = construct_profile(full3, {OutcomeTarget(w, r)});
    REQUIRE(result.has_value());
    CHECK(tally(w, result->profile) == r);
    CHECK(result->kernel.dim() == 4);

    // the kernel realizes "infinitely many": offsets stay exact solutions
    for (const Rational& c : {Rational(1), Rational(2), Rational(-1, 3)}) {
        Vec offset = result->profile.coeffs();
        offset = vec_add(offset, vec_scale(c, result->kernel.basis_vector(0)));
        CHECK(tally(w, Profile(full3, offset)) == r);
    }
}

TEST_CASE("three distinct exact solutions exist whenever the kernel is nontrivial") {
    const Shape full3 = Shape::full_ranking(3);
    const WeightingVector w(full3, qvec({1, 0, -1}));
    const Vec r = qvec({1, 1, -2});
    const auto result = construct_profile(full3, {OutcomeTarget(w, r)});
    REQUIRE(result.has_value());
    REQUIRE(result->kernel.dim() >= 1);
    const Vec k0 = result->kernel.basis_vector(0);
    std::vector<Vec> solutions{result->profile.coeffs(),
                               vec_add(result->profile.coeffs(), k0),
                               vec_add(result->profile.coeffs(), vec_scale(Rational(2), k0))};
    for (const Vec& s : solutions) CHECK(tally(w, Profile(full3, s)) == r);
    CHECK(solutions[0] != solutions[1]);
    CHECK(solutions[1] != solutions[2]);
    CHECK(solutions[0] != solutions[2]);
}

TEST_CASE("all-zero targets admit the zero profile with the full joint kernel") {
    const Shape full3 = Shape::full_ranking(3);
    const WeightingVector w(full3, qvec({1, 0, -1}));
    const auto result = construct_profile(full3, {OutcomeTarget(w, qvec({0, 0, 0}))});
    REQUIRE(result.has_value());
    CHECK(result->profile == Profile::zero(full3));
    CHECK(result->kernel == kernel_basis(positional_matrix(w)));
}

TEST_CASE("two independent targets on (1,1,2) are solved simultaneously") {
    const Shape shape({1, 1, 2});
    const WeightingVector w1(shape, qvec({2, 0, -1}));  // lift [2,0,-1,-1]
    const WeightingVector w2(shape, qvec({0, 2, -1}));  // lift [0,2,-1,-1]
    const Vec r1 = qvec({1, 0, 0, -1});
    const Vec r2 = qvec({0, 1, -1, 0});
    const auto result = construct_profile(shape, {OutcomeTarget(w1, r1), OutcomeTarget(w2, r2)});
    REQUIRE(result.has_value());
    CHECK(tally(w1, result->profile) == r1);
    CHECK(tally(w2, result->profile) == r2);
}

TEST_CASE("shape (1,2) carries a one-dimensional sum-zero weight space") {
    // Non-proportional targets over (1,2) cannot be met simultaneously: every
    // sum-zero-lift weighting vector is a multiple of [2,-1].
    const Shape shape({1, 2});
    const WeightingVector wa(shape, qvec({2, -1}));
    const WeightingVector wb(shape, qvec({4, -2}));
    CHECK_FALSE(construct_profile(shape, {OutcomeTarget(wa, qvec({1, 0, -1})),
                                          OutcomeTarget(wb, qvec({0, 1, -1}))})
                    .has_value());

    const auto single = construct_profile(shape, {OutcomeTarget(wa, qvec({1, 0, -1}))});
    REQUIRE(single.has_value());
    CHECK(tally(wa, single->profile) == qvec({1, 0, -1}));
}

TEST_CASE("contradictory duplicate targets are infeasible") {
    const Shape full3 = Shape::full_ranking(3);
    const WeightingVector w(full3, qvec({1, 0, -1}));
    CHECK_FALSE(construct_profile(full3, {OutcomeTarget(w, qvec({2, -1, -1})),
                                          OutcomeTarget(w, qvec({1, 0, -1}))})
                    .has_value());
}

TEST_CASE("construct_profile validates its inputs") {
    const Shape full3 = Shape::full_ranking(3);
    CHECK_THROWS_AS(construct_profile(full3, {}), std::invalid_argument);
    CHECK_THROWS_AS(construct_profile(Shape({1, 2}),
                                      {OutcomeTarget(WeightingVector(full3, qvec({1, 0, -1})),
                                                     qvec({0, 0, 0}))}),
                    std::invalid_argument);
}

TEST_CASE("inequivalent weighting vectors can be forced to opposite outcomes") {
    const Shape full3 = Shape::full_ranking(3);
    const Vec w = qvec({1, 0, -1});
    const Vec x = qvec({1, -2, 1});
    const Vec r = qvec({1, 0, -1});
    const auto result = construct_profile(
        full3, {OutcomeTarget(WeightingVector(full3, w), r),
                OutcomeTarget(WeightingVector(full3, x), vec_scale(Rational(-1), r))});
    REQUIRE(result.has_value());
    const OrdinalRanking under_w = ordinal(tally(WeightingVector(full3, w), result->profile));
    const OrdinalRanking under_x = ordinal(tally(WeightingVector(full3, x), result->profile));
    CHECK(under_w == under_x.reversed());
}

TEST_CASE("normalization to voter counts") {
    const Shape full3 = Shape::full_ranking(3);
    const Profile counts(full3, qvec({3, 2, 0, 2, 0, 4}));
    const CountsResult same = normalize_to_counts(counts);
    CHECK(same.counts == counts);
    CHECK(same.scale == Rational(1));
    CHECK(same.shift == Rational(0));

    const Profile fractional(Shape::full_ranking(2), Vec{Rational(1, 2), Rational(-1, 2)});
    const CountsResult fixed = normalize_to_counts(fractional);
    CHECK(fixed.scale == Rational(2));
    CHECK(fixed.shift == Rational(1));
    CHECK(fixed.counts.coeffs() == qvec({2, 0}));
    CHECK(fixed.counts.is_voter_counts());
}

TEST_CASE("normalization preserves every ordinal outcome") {
    std::mt19937 rng(113);
    const Shape full3 = Shape::full_ranking(3);
    for (int trial = 0; trial < 20; ++trial) {
        const Profile p = vt::random_rational_profile(rng, full3);
        const CountsResult norm = normalize_to_counts(p);
        CHECK(norm.counts.is_voter_counts());
        Vec w(3);
        for (auto& v : w) v = vt::random_rational(rng);
        const WeightingVector wv(full3, w);
        CHECK(ordinal(tally(wv, norm.counts)) == ordinal(tally(wv, p)));
    }
}

TEST_CASE("approval weighting vectors") {
    CHECK(approval_weights(4, 2) == qvec({1, 1, 0, 0}));
    CHECK(approval_weights_hat(4, 1) ==
          Vec{Rational(3, 4), Rational(-1, 4), Rational(-1, 4), Rational(-1, 4)});
    CHECK(is_sum_zero(approval_weights_hat(5, 3)));
    CHECK_THROWS_AS(approval_weights(4, 0), std::invalid_argument);
    CHECK_THROWS_AS(approval_weights(4, 4), std::invalid_argument);
}

TEST_CASE("approval tallies") {
    const Shape full3 = Shape::full_ranking(3);
    const TabloidSpace space(full3);

    Vec b1(6);
    b1[space.index(FullRanking({1, 2, 3}).as_tabloid())] = 1;
    const RankedApprovalProfile one_voter({Profile(full3, b1), Profile::zero(full3)});
    const ApprovalTally t1 = approval_tally(one_voter);
    CHECK(t1.full_scores == qvec({1, 0, 0}));
    CHECK(t1.sum_zero_part == Vec{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});

    const RankedApprovalProfile empty({Profile::zero(full3), Profile::zero(full3)});
    CHECK(is_zero_vec(approval_tally(empty).full_scores));

    Vec b2(6);
    b2[space.index(FullRanking({3, 1, 2}).as_tabloid())] = 1;
    const RankedApprovalProfile second_block({Profile::zero(full3), Profile(full3, b2)});
    CHECK(approval_tally(second_block).full_scores == qvec({1, 0, 1}));

    CHECK_THROWS_AS(RankedApprovalProfile({Profile::zero(full3)}), std::invalid_argument);
    CHECK_THROWS_AS(RankedApprovalProfile({Profile::zero(full3), Profile::zero(Shape({1, 2}))}),
                    std::invalid_argument);
}

TEST_CASE("approval tally sum-zero part equals the blockwise hat action") {
    std::mt19937 rng(127);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 2);
        const Shape full = Shape::full_ranking(n);
        std::vector<Profile> blocks;
        for (int i = 1; i <= n - 1; ++i) blocks.push_back(vt::random_rational_profile(rng, full));
        const RankedApprovalProfile rap(blocks);
        const ApprovalTally t = approval_tally(rap);
        Vec expected(static_cast<std::size_t>(n));
        for (int i = 1; i <= n - 1; ++i)
            expected = vec_add(expected, act_on_weights(blocks[static_cast<std::size_t>(i - 1)],
                                                        approval_weights_hat(n, i)));
        CHECK(t.sum_zero_part == expected);
        CHECK(t.sum_zero_part == sum_zero_part(t.full_scores));
    }
}

TEST_CASE("opposite approval and borda outcomes coexist on one profile") {
    const Vec r_app = qvec({1, 0, -1});
    const Vec r_pos = qvec({-1, 0, 1});
    const Vec w = qvec({1, 0, -1});
    const ParadoxResult result = approval_positional_paradox(3, r_app, r_pos, w);

    CHECK(approval_tally(result.profile).sum_zero_part == r_app);
    Vec pos(3);
    for (const Profile& b : result.profile.blocks)
        pos = vec_add(pos, act_on_weights(b, w));
    CHECK(pos == r_pos);
    CHECK(ordinal(pos) == ordinal(approval_tally(result.profile).sum_zero_part).reversed());
}

TEST_CASE("zero paradox targets admit the zero profile") {
    const ParadoxResult result =
        approval_positional_paradox(3, qvec({0, 0, 0}), qvec({0, 0, 0}), qvec({1, 0, -1}));
    for (const Profile& b : result.profile.blocks) CHECK(is_zero_vec(b.coeffs()));
}

TEST_CASE("plurality-style paradox at n = 4") {
    const Vec r_app = qvec({3, -1, -1, -1});
    const Vec r_pos = qvec({-3, 1, 1, 1});
    const Vec w = approval_weights_hat(4, 1); // plurality's sum-zero part
    const ParadoxResult result = approval_positional_paradox(4, r_app, r_pos, w);
    CHECK(approval_tally(result.profile).sum_zero_part == r_app);
    Vec pos(4);
    for (const Profile& b : result.profile.blocks) pos = vec_add(pos, act_on_weights(b, w));
    CHECK(pos == r_pos);
}

TEST_CASE("the two-target block follows the independence branch") {
    // w parallel to hat(a_2) forces the fallback through block 1
    const Vec a2h = approval_weights_hat(4, 2);
    const ParadoxResult fallback =
        approval_positional_paradox(4, qvec({1, 1, -1, -1}), qvec({0, 0, 0, 0}), a2h);
    CHECK(fallback.two_target_block == 1);

    const ParadoxResult normal =
        approval_positional_paradox(4, qvec({1, 1, -1, -1}), qvec({2, 0, -1, -1}),
                                    qvec({3, -1, -1, -1}));
    CHECK(normal.two_target_block == 2);
}

TEST_CASE("paradox construction validates its inputs") {
    CHECK_THROWS_AS(approval_positional_paradox(2, Vec{Rational(1), Rational(-1)},
                                                Vec{Rational(0), Rational(0)},
                                                Vec{Rational(1), Rational(-1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(approval_positional_paradox(3, qvec({1, 0, 0}), qvec({0, 0, 0}), qvec({1, 0, -1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(approval_positional_paradox(3, qvec({0, 0, 0}), qvec({0, 0, 0}), qvec({0, 0, 0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(approval_positional_paradox(3, qvec({0, 0, 0}), qvec({0, 0, 0}), qvec({1, 1, 0})),
                    std::invalid_argument);
}

TEST_CASE("ranked approval profiles normalize with a shared scale") {
    std::mt19937 rng(131);
    const Shape full3 = Shape::full_ranking(3);
    std::vector<Profile> blocks{vt::random_rational_profile(rng, full3),
                                vt::random_rational_profile(rng, full3)};
    const RankedApprovalProfile rap(blocks);
    const RapCountsResult norm = normalize_to_counts(rap);
    for (const Profile& b : norm.blocks) CHECK(b.is_voter_counts());
    CHECK(ordinal(approval_tally(RankedApprovalProfile(norm.blocks)).full_scores) ==
          ordinal(approval_tally(rap).full_scores));
    const Vec w = qvec({2, 1, 0});
    Vec before(3), after(3);
    for (const Profile& b : rap.blocks) before = vec_add(before, act_on_weights(b, w));
    for (const Profile& b : norm.blocks) after = vec_add(after, act_on_weights(b, w));
    CHECK(ordinal(before) == ordinal(after));
}
