#include "resgaps/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "resgaps/error.hpp"

namespace resgaps {

namespace {

bool is_decimal_integer(std::string_view text) {
    if (text.empty()) return false;
    std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (start == text.size()) return false;
    for (std::size_t i = start; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return false;
    }
    return true;
}

Integer parse_integer(std::string_view text) {
    if (!is_decimal_integer(text)) {
        throw ParseError(0, "not an integer: '" + std::string(text) + "'");
    }
    if (text.front() == '+') text.remove_prefix(1);
    return Integer(std::string(text), 10);
}

}  // namespace

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    const Integer num = parse_integer(text.substr(0, slash));
    const std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
        throw ParseError(0, "denominator must be positive: '" + std::string(text) + "'");
    }
    const Integer den = parse_integer(den_text);
    if (den == 0) throw ParseError(0, "zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

Integer Rational::floor() const {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Integer Rational::ceil() const {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& other) {
    value_ += other.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& other) {
    value_ -= other.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& other) {
    value_ *= other.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& other) {
    if (other.sign() == 0) throw std::domain_error("rational division by zero");
    value_ /= other.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Integer isqrt(const Integer& n) {
    if (n < 0) throw std::domain_error("isqrt of a negative integer");
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(const Integer& n) {
    return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

std::int64_t to_int64(const Integer& n) {
    if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + n.get_str());
    return static_cast<std::int64_t>(n.get_si());
}

Integer to_integer(std::int64_t n) {
    Integer z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(n));
    return z;
}

}  // namespace resgaps
