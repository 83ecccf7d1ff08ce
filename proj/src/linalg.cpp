#include "vote/linalg.hpp"

#include <stdexcept>

namespace vote {

RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    const bool parallel = rows * cols >= (1u << 12);
    std::size_t pr = 0; // next pivot row
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t hit = rows;
        for (std::size_t i = pr; i < rows; ++i) {
            if (!m(i, pc).is_zero()) { hit = i; break; }
        }
        if (hit == rows) continue;
        m.swap_rows(pr, hit);
        const Rational inv = Rational(1) / m(pr, pc);
        if (!(inv == Rational(1))) {
            for (std::size_t c = pc; c < cols; ++c)
                if (!m(pr, c).is_zero()) m(pr, c) *= inv;
        }
        const long nrows = static_cast<long>(rows);
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (long i = 0; i < nrows; ++i) {
            if (static_cast<std::size_t>(i) == pr) continue;
            const Rational factor = m(i, pc);
            if (factor.is_zero()) continue;
            m(i, pc) = 0;
            for (std::size_t c = pc + 1; c < cols; ++c) {
                if (!m(pr, c).is_zero()) m(i, c) -= factor * m(pr, c);
            }
        }
        pivots.push_back(pc);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

namespace reference {

RrefResult rref(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t hit = rows;
        for (std::size_t i = pr; i < rows; ++i) {
            if (!m(i, pc).is_zero()) { hit = i; break; }
        }
        if (hit == rows) continue;
        m.swap_rows(pr, hit);
        const Rational pivot = m(pr, pc);
        for (std::size_t c = pc; c < cols; ++c) m(pr, c) /= pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const Rational factor = m(i, pc);
            if (factor.is_zero()) continue;
            for (std::size_t c = pc; c < cols; ++c) m(i, c) -= factor * m(pr, c);
        }
        pivots.push_back(pc);
        ++pr;
    }
    return {std::move(m), std::move(pivots)};
}

} // namespace reference

std::size_t rank(const Matrix& m) {
    return rref(m).pivots.size();
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != ambient) throw std::invalid_argument("Subspace::span: wrong vector length");
    Subspace s(ambient);
    if (vectors.empty()) return s;
    RrefResult r = rref(Matrix::from_rows(vectors));
    Matrix basis(r.pivots.size(), ambient);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t c = 0; c < ambient; ++c) basis(i, c) = r.mat(i, c);
    s.basis_ = std::move(basis);
    return s;
}

Subspace Subspace::full(std::size_t ambient) {
    Subspace s(ambient);
    s.basis_ = Matrix::identity(ambient);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    // Reduce v against the RREF basis; membership iff the residue is zero.
    Vec residue = v;
    for (std::size_t i = 0; i < basis_.rows(); ++i) {
        std::size_t p = 0;
        while (p < ambient_ && basis_(i, p).is_zero()) ++p;
        if (p == ambient_) continue;
        const Rational factor = residue[p];
        if (factor.is_zero()) continue;
        for (std::size_t c = p; c < ambient_; ++c) residue[c] -= factor * basis_(i, c);
    }
    return is_zero_vec(residue);
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::contains: dimension mismatch");
    for (std::size_t i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::vector<Vec> kernel_vectors(const Matrix& m) {
    const std::size_t cols = m.cols();
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            v[r.pivots[i]] = -r.mat(i, f);
        out.push_back(std::move(v));
    }
    return out;
}

Subspace kernel_basis(const Matrix& m) {
    return Subspace::span(m.cols(), kernel_vectors(m));
}

Subspace row_space(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return Subspace::span(m.cols(), rows);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("intersect: dimension mismatch");
    const std::size_t d = a.ambient();
    if (a.dim() == 0 || b.dim() == 0) return Subspace(d);
    // x in A∩B iff x = y^t A = z^t B; solve [A^t | -B^t] [y;z] = 0.
    Matrix sys(d, a.dim() + b.dim());
    for (std::size_t c = 0; c < d; ++c) {
        for (std::size_t i = 0; i < a.dim(); ++i) sys(c, i) = a.basis()(i, c);
        for (std::size_t j = 0; j < b.dim(); ++j) sys(c, a.dim() + j) = -b.basis()(j, c);
    }
    std::vector<Vec> gens;
    for (const Vec& yz : kernel_vectors(sys)) {
        Vec x(d);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t c = 0; c < d; ++c) x[c] += yz[i] * a.basis()(i, c);
        gens.push_back(std::move(x));
    }
    return Subspace::span(d, gens);
}

std::optional<AffineSolution> solve_affine(const Matrix& m, const Vec& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
    const std::size_t cols = m.cols();
    Matrix aug(m.rows(), cols + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols) = rhs[i];
    }
    RrefResult r = rref(std::move(aug));
    if (!r.pivots.empty() && r.pivots.back() == cols) return std::nullopt;

    Vec particular(cols);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) particular[r.pivots[i]] = r.mat(i, cols);

    // Coefficient columns of the consistent augmented RREF are the RREF of m.
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> kernel;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat(i, f);
        kernel.push_back(std::move(v));
    }
    return AffineSolution{std::move(particular), Subspace::span(cols, kernel)};
}

} // namespace vote
