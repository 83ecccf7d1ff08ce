#include "vote/shape.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace vote {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)), n_(0) {
    if (parts_.empty()) throw std::invalid_argument("Shape: no parts");
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("Shape: parts must be positive");
        n_ += p;
    }
}

Shape Shape::full_ranking(int n) {
    if (n < 1) throw std::invalid_argument("Shape: n must be positive");
    return Shape(std::vector<int>(n, 1));
}

Shape Shape::top_k(int n, int k) {
    if (n < 3 || k < 1 || k > n - 2) throw std::invalid_argument("Shape::top_k: need 1 <= k <= n-2");
    std::vector<int> parts(k, 1);
    parts.push_back(n - k);
    return Shape(std::move(parts));
}

Shape Shape::pairs_codomain(int n) {
    if (n < 3) throw std::invalid_argument("Shape::pairs_codomain: need n >= 3");
    return Shape({1, 1, n - 2});
}

bool Shape::is_partition() const {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] > parts_[i - 1]) return false;
    return true;
}

bool Shape::is_full_ranking() const {
    for (int p : parts_)
        if (p != 1) return false;
    return true;
}

bool Shape::is_top_k(int& k) const {
    if (parts_.size() < 2 || parts_.back() < 2) return false;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    k = static_cast<int>(parts_.size()) - 1;
    return true;
}

std::size_t Shape::space_size() const {
    mpz_class num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(n_));
    for (int p : parts_) {
        mpz_class f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(p));
        num /= f;
    }
    if (!num.fits_ulong_p()) throw std::overflow_error("Shape::space_size: too large");
    return static_cast<std::size_t>(num.get_ui());
}

std::string Shape::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

} // namespace vote
