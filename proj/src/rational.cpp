#include "vote/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace vote {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational Rational::from_string(const std::string& s) {
    const auto slash = s.find('/');
    const std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    size_t start = 0;
    if (!num.empty() && (num[0] == '-' || num[0] == '+')) start = 1;
    if (!all_digits(num, start, num.size()))
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (slash != std::string::npos) {
        if (!all_digits(s, slash + 1, s.size()))
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        mpq_class q(mpz_class(num), den);
        q.canonicalize();
        return Rational(q);
    }
    return Rational(mpq_class(mpz_class(num)));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

} // namespace vote
