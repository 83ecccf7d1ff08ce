#include "vote/pairs.hpp"

#include <stdexcept>

namespace vote {

std::vector<std::pair<int, int>> pair_list(int n) {
    if (n < 2) throw std::invalid_argument("pair_list: need n >= 2");
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.emplace_back(i, j);
    return out;
}

std::size_t pair_index(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j) throw std::invalid_argument("pair_index: bad pair");
    return static_cast<std::size_t>((i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0));
}

Matrix pairs_matrix(int n) {
    if (n < 2) throw std::invalid_argument("pairs_matrix: need n >= 2");
    const TabloidSpace space(Shape::full_ranking(n));
    Matrix out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1), space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
        const FullRanking r = FullRanking::of_tabloid(space[x]);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j && r.position_of(i) < r.position_of(j))
                    out(pair_index(n, i, j), x) = 1;
    }
    return out;
}

namespace {

void check_partial_args(int n, int k, const Rational& tau) {
    if (n < 3 || k < 1 || k > n - 2)
        throw std::invalid_argument("partial pairs: need n >= 3 and 1 <= k <= n-2");
    if (tau < Rational(0) || tau > Rational(1))
        throw std::invalid_argument("partial pairs: tau must lie in [0,1]");
}

} // namespace

Matrix partial_pairs_matrix(int n, int k, const Rational& tau) {
    check_partial_args(n, k, tau);
    const TabloidSpace space(Shape::top_k(n, k));
    Matrix out(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1), space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
        const Tabloid& t = space[x];
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                const int ri = t.row_of(i), rj = t.row_of(j);
                if (ri < rj) out(pair_index(n, i, j), x) = 1;
                else if (ri == rj) out(pair_index(n, i, j), x) = tau; // shared bottom row
            }
        }
    }
    return out;
}

Rational pairs_entry_sum(int n, int k, const Rational& tau) {
    check_partial_args(n, k, tau);
    Rational e;
    for (int i = 1; i <= k; ++i) e += Rational(n - i);
    const long m = n - k;
    return e + Rational(2) * tau * Rational(m * (m - 1) / 2);
}

Vec pairs_of_profile(const Profile& p) {
    if (!p.shape().is_full_ranking())
        throw std::invalid_argument("pairs_of_profile: profile is not over full rankings");
    return multiply(pairs_matrix(p.shape().n()), p.coeffs());
}

Vec pairs_of_partial_profile(const Profile& p, const Rational& tau) {
    int k = 0;
    if (!p.shape().is_top_k(k))
        throw std::invalid_argument("pairs_of_partial_profile: profile shape is not (1^k, n-k)");
    return multiply(partial_pairs_matrix(p.shape().n(), k, tau), p.coeffs());
}

std::vector<long> copeland_scores(const Vec& pairs, int n) {
    if (pairs.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("copeland_scores: pairs vector has wrong length");
    std::vector<long> out(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const auto c = pairs[pair_index(n, i, j)] <=> pairs[pair_index(n, j, i)];
            if (c > 0) ++out[static_cast<std::size_t>(i - 1)];
            else if (c < 0) --out[static_cast<std::size_t>(i - 1)];
        }
    }
    return out;
}

std::optional<int> condorcet_winner(const Vec& pairs, int n) {
    if (pairs.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1))
        throw std::invalid_argument("condorcet_winner: pairs vector has wrong length");
    for (int i = 1; i <= n; ++i) {
        bool beats_all = true;
        for (int j = 1; j <= n && beats_all; ++j)
            if (i != j && !(pairs[pair_index(n, i, j)] > pairs[pair_index(n, j, i)])) beats_all = false;
        if (beats_all) return i;
    }
    return std::nullopt;
}

bool recoverable(const WeightingVector& w, const Matrix& m) {
    if (m.cols() != w.shape.space_size())
        throw std::invalid_argument("recoverable: matrix does not act on M^shape");
    const Matrix tw = positional_matrix(w);
    for (const Vec& u : kernel_vectors(m))
        if (!is_zero_vec(multiply(tw, u))) return false;
    return true;
}

bool recoverable_via_row_space(const WeightingVector& w, const Matrix& m) {
    if (m.cols() != w.shape.space_size())
        throw std::invalid_argument("recoverable: matrix does not act on M^shape");
    return row_space(m).contains(effective_space(w));
}

Subspace recoverable_weight_space(const Shape& shape, const Matrix& m) {
    if (m.cols() != shape.space_size())
        throw std::invalid_argument("recoverable_weight_space: matrix does not act on M^shape");
    const TabloidSpace space(shape);
    const int n = shape.n();
    const std::size_t parts = shape.num_parts();
    const std::vector<Vec> kernel = kernel_vectors(m);
    if (kernel.empty()) return Subspace::full(parts);

    // Row (u, i): coefficient of w_j is the u-mass of tabloids carrying
    // candidate i in row j; T_w u = 0 for all kernel u iff C w = 0.
    Matrix constraints(kernel.size() * static_cast<std::size_t>(n), parts);
    for (std::size_t ku = 0; ku < kernel.size(); ++ku) {
        for (std::size_t x = 0; x < space.size(); ++x) {
            if (kernel[ku][x].is_zero()) continue;
            const Tabloid& t = space[x];
            for (std::size_t j = 0; j < parts; ++j)
                for (int candidate : t.rows()[j])
                    constraints(ku * static_cast<std::size_t>(n) + static_cast<std::size_t>(candidate - 1), j) +=
                        kernel[ku][x];
        }
    }
    return kernel_basis(constraints);
}

WeightingVector borda_vector(int n) {
    if (n < 2) throw std::invalid_argument("borda_vector: need n >= 2");
    Vec w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = n - 1 - i;
    return WeightingVector(Shape::full_ranking(n), std::move(w));
}

namespace {

WeightingVector borda_like(int n, int k, const Rational& bottom) {
    Vec w;
    w.reserve(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) w.push_back(Rational(n - i));
    w.push_back(bottom);
    return WeightingVector(Shape::top_k(n, k), std::move(w));
}

} // namespace

WeightingVector borda_analogue(int n, int k) {
    if (n < 3 || k < 1 || k > n - 2) throw std::invalid_argument("borda_analogue: need 1 <= k <= n-2");
    return borda_like(n, k, Rational(n - k - 1, 2));
}

WeightingVector borda_analogue_tau(int n, int k, const Rational& tau) {
    check_partial_args(n, k, tau);
    return borda_like(n, k, tau * Rational(n - k - 1));
}

Matrix psi_matrix(int n) {
    if (n < 3) throw std::invalid_argument("psi_matrix: need n >= 3");
    const auto pairs = pair_list(n);
    Matrix out(static_cast<std::size_t>(n), pairs.size());
    for (std::size_t idx = 0; idx < pairs.size(); ++idx)
        out(static_cast<std::size_t>(pairs[idx].first - 1), idx) = 1;
    return out;
}

Matrix phi_matrix(int n, int k, const Rational& tau) {
    check_partial_args(n, k, tau);
    const Rational e = pairs_entry_sum(n, k, tau);
    if (e.is_zero()) throw std::logic_error("phi_matrix: entry sum E is zero");
    const Rational half(1, 2);
    const Rational total_term = Rational(n - 1) / e;
    const auto pairs = pair_list(n);
    Matrix out(static_cast<std::size_t>(n), pairs.size());
    for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
        const auto [i, j] = pairs[idx];
        for (int c = 1; c <= n; ++c) {
            Rational v = total_term;
            if (c == i) v += 1;
            if (c == j) v -= 1;
            out(static_cast<std::size_t>(c - 1), idx) = half * v;
        }
    }
    return out;
}

bool reversal_symmetric(const Vec& w) {
    if (w.empty()) return true;
    const std::size_t n = w.size();
    const Rational c = w[0] + w[n - 1];
    for (std::size_t i = 0; i < n; ++i)
        if (!(w[i] + w[n - 1 - i] == c)) return false;
    return true;
}

} // namespace vote
