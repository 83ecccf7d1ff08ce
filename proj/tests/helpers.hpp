#pragma once

// Test-only oracles and generators. Everything here recomputes expectations
// from first principles, independent of the library code paths under test.

#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "vote/construct.hpp"

namespace vote::testing {

inline unsigned long factorial(int n) {
    unsigned long f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
    return f;
}

// Count oracle for |X^lambda|.
inline unsigned long multinomial(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) n += p;
    unsigned long result = factorial(n);
    for (int p : parts) result /= factorial(p);
    return result;
}

// dim S^mu by the hook length formula.
inline unsigned long hook_length_dim(const std::vector<int>& mu) {
    int n = 0;
    for (int p : mu) n += p;
    unsigned long hooks = 1;
    for (std::size_t r = 0; r < mu.size(); ++r) {
        for (int c = 0; c < mu[r]; ++c) {
            int arm = mu[r] - c - 1;
            int leg = 0;
            for (std::size_t rr = r + 1; rr < mu.size(); ++rr)
                if (mu[rr] > c) ++leg;
            hooks *= static_cast<unsigned long>(arm + leg + 1);
        }
    }
    return factorial(n) / hooks;
}

// All compositions of n, in no particular order.
inline std::vector<std::vector<int>> compositions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int rest) -> void {
        if (rest == 0) {
            out.push_back(acc);
            return;
        }
        for (int first = 1; first <= rest; ++first) {
            acc.push_back(first);
            self(self, rest - first);
            acc.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

inline Rational random_rational(std::mt19937& rng, long max_num = 6, long max_den = 3) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline Vec random_sum_zero(std::mt19937& rng, int n) {
    Vec v;
    Rational total;
    for (int i = 0; i + 1 < n; ++i) {
        v.push_back(random_rational(rng));
        total += v.back();
    }
    v.push_back(-total);
    return v;
}

inline Profile random_count_profile(std::mt19937& rng, const Shape& shape, long max_count = 8) {
    std::uniform_int_distribution<long> count(0, max_count);
    Vec coeffs(shape.space_size());
    for (auto& c : coeffs) c = Rational(count(rng));
    return Profile(shape, std::move(coeffs));
}

inline Profile random_rational_profile(std::mt19937& rng, const Shape& shape) {
    Vec coeffs(shape.space_size());
    for (auto& c : coeffs) c = random_rational(rng);
    return Profile(shape, std::move(coeffs));
}

// Weight vector over the shape whose lift sums to zero.
inline Vec random_sum_zero_lift_weights(std::mt19937& rng, const Shape& shape) {
    const auto& parts = shape.parts();
    Vec w;
    Rational lifted_total;
    for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
        w.push_back(random_rational(rng));
        lifted_total += Rational(parts[j]) * w.back();
    }
    w.push_back(-lifted_total / Rational(parts.back()));
    return w;
}

inline Permutation random_permutation(std::mt19937& rng, int n) {
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
}

// Every ballot reversed, bottom choice first.
inline Profile reverse_ballots(const Profile& p) {
    const TabloidSpace space(p.shape());
    Vec out(space.size());
    for (std::size_t i = 0; i < space.size(); ++i) {
        if (p[i].is_zero()) continue;
        std::vector<int> order = FullRanking::of_tabloid(space[i]).order;
        std::reverse(order.begin(), order.end());
        out[space.index(FullRanking(order).as_tabloid())] += p[i];
    }
    return Profile(p.shape(), std::move(out));
}

// Head-to-head counting straight off the ballots, no pairs matrix involved.
inline Rational preference_weight(const Profile& p, int i, int j) {
    const TabloidSpace space(p.shape());
    Rational total;
    for (std::size_t x = 0; x < space.size(); ++x) {
        if (p[x].is_zero()) continue;
        if (space[x].row_of(i) < space[x].row_of(j)) total += p[x];
    }
    return total;
}

inline std::vector<long> brute_force_copeland(const Profile& p) {
    const int n = p.shape().n();
    std::vector<long> scores(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const auto c = preference_weight(p, i, j) <=> preference_weight(p, j, i);
            if (c > 0) ++scores[static_cast<std::size_t>(i - 1)];
            if (c < 0) --scores[static_cast<std::size_t>(i - 1)];
        }
    return scores;
}

inline std::optional<int> brute_force_condorcet(const Profile& p) {
    const int n = p.shape().n();
    for (int i = 1; i <= n; ++i) {
        bool wins = true;
        for (int j = 1; j <= n && wins; ++j)
            if (i != j && !(preference_weight(p, i, j) > preference_weight(p, j, i))) wins = false;
        if (wins) return i;
    }
    return std::nullopt;
}

} // namespace vote::testing
