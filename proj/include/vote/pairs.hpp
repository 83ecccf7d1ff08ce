#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "vote/positional.hpp"

namespace vote {

/*
 * Head-to-head data lives in Q^{n(n-1)}, indexed by ordered pairs (i,j),
 * i != j, in lexicographic order. Entry (i,j) is the weight of "i beats j";
 * for n >= 3 the pair (i,j) is the (1,1,n-2) tabloid with i alone in row 1
 * and j alone in row 2.
 */
std::vector<std::pair<int, int>> pair_list(int n);
std::size_t pair_index(int n, int i, int j);

// Pairs map on full rankings: the column of a ranking has a 1 at every pair
// ranked in that order, so each column holds exactly C(n,2) ones.
Matrix pairs_matrix(int n); // n >= 2

// Top-k pairs map with tie weight tau: strict comparisons score 1, candidates
// sharing the bottom row score tau in both directions. Every column sums to
// E = (n-1)+...+(n-k) + 2 tau C(n-k,2).
Matrix partial_pairs_matrix(int n, int k, const Rational& tau);
Rational pairs_entry_sum(int n, int k, const Rational& tau); // E

// Pairs vector of a profile; the partial overload requires shape (1^k, n-k).
Vec pairs_of_profile(const Profile& p);
Vec pairs_of_partial_profile(const Profile& p, const Rational& tau);

// Head-to-head wins minus losses; exactly tied pairs count for neither.
std::vector<long> copeland_scores(const Vec& pairs, int n);

// The unique candidate beating every other head-to-head, if one exists.
std::optional<int> condorcet_winner(const Vec& pairs, int n);

// T_w is recoverable from m (i.e. T_w = R compose m for some R) iff
// ker(m) is contained in ker(T_w). m must map out of M^{shape of w}.
bool recoverable(const WeightingVector& w, const Matrix& m);
// Same predicate through the other route: E(T_w) inside row_space(m).
bool recoverable_via_row_space(const WeightingVector& w, const Matrix& m);

// All weighting vectors recoverable from m, as a subspace of Q^{#parts}:
// each kernel vector u of m imposes the linear constraint T_w u = 0 on w.
Subspace recoverable_weight_space(const Shape& shape, const Matrix& m);

WeightingVector borda_vector(int n);                                   // [n-1,...,1,0]
WeightingVector borda_analogue(int n, int k);                          // b, bottom weight (n-k-1)/2
WeightingVector borda_analogue_tau(int n, int k, const Rational& tau); // b^tau, bottom weight tau(n-k-1)

// psi(v)_i = sum_{j != i} v^{ij}; psi compose P^k_tau sends the identity
// tabloid's indicator to the lift of b^tau.
Matrix psi_matrix(int n);

// phi(v)_i = ( sum_{j != i} (v^{ij} - v^{ji}) + (n-1)/E sum v ) / 2;
// phi compose P^k_tau sends the identity tabloid's indicator to the lift of b.
Matrix phi_matrix(int n, int k, const Rational& tau);

// w + reverse(w) constant: reversing every ballot exactly reverses the
// ordinal outcome.
bool reversal_symmetric(const Vec& w);

} // namespace vote
