#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vote/matrix.hpp"

namespace vote {

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots; // pivot column per pivot row, ascending
};

// Reduced row echelon form: leading 1s, zeros above and below every pivot,
// leftmost-nonzero pivoting (exact arithmetic needs nothing fancier).
// Row elimination runs under OpenMP for large matrices; output is identical
// to reference::rref on every input.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

namespace reference {
// Serial RREF, kept as the oracle the parallel kernel is tested against.
RrefResult rref(Matrix m);
} // namespace reference

/*
 * Subspace of Q^d held as an RREF basis. The representation is canonical:
 * two subspaces are equal iff their stored bases are identical matrices.
 */
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vec>& vectors);
    static Subspace full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(std::size_t i) const { return basis_.row(i); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Matrix basis_; // RREF, no zero rows
};

// Raw spanning set of {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel_vectors(const Matrix& m);

Subspace kernel_basis(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace intersect(const Subspace& a, const Subspace& b);

struct AffineSolution {
    Vec particular;   // one exact solution of m x = rhs
    Subspace kernel;  // full solution set is particular + kernel
};

// std::nullopt means the system is inconsistent (not an error).
std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& rhs);

} // namespace vote
