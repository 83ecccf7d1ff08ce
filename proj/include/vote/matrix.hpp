#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "vote/rational.hpp"

namespace vote {

using Vec = std::vector<Rational>;

// Dense rational matrix, row-major. Zero rows/cols are allowed.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    void swap_rows(std::size_t a, std::size_t b);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

// OpenMP-parallel kernels. Results are bit-identical to the reference
// implementations below (exact arithmetic, disjoint row writes).
Matrix multiply(const Matrix& a, const Matrix& b);
Vec multiply(const Matrix& a, const Vec& x);
Matrix transpose(const Matrix& m);
Matrix stack(const Matrix& top, const Matrix& bottom);

namespace reference {
// Serial implementations kept as the test oracle for the parallel kernels.
Matrix multiply(const Matrix& a, const Matrix& b);
} // namespace reference

Rational dot(const Vec& a, const Vec& b);
Rational vec_sum(const Vec& v);
bool is_sum_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Rational& c, const Vec& v);
bool is_zero_vec(const Vec& v);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

} // namespace vote
