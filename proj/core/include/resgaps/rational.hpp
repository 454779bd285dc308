#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace resgaps {

using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class: every constructor and every
/// arithmetic result is canonicalized, so equality is structural and
/// `str()` is a canonical rendering ("p/q", or "p" when q = 1).
class Rational {
public:
    Rational() = default;
    Rational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long long value) : value_(Integer(std::to_string(value))) {}  // NOLINT
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    /// Unevaluated GMP integer expressions such as `a * b`.
    template <typename U>
    Rational(const __gmp_expr<mpz_t, U>& expr) : value_(Integer(expr)) {}  // NOLINT

    /// Throws std::domain_error for a zero denominator.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Accepts "p", "-p", "p/q"; whitespace is not allowed. Throws ParseError.
    static Rational parse(std::string_view text);

    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    Integer floor() const;
    Integer ceil() const;
    Rational abs() const;

    std::string str() const;

    /// Underlying GMP value, for code that needs raw mpq arithmetic.
    const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& other);
    Rational& operator-=(const Rational& other);
    Rational& operator*=(const Rational& other);
    Rational& operator/=(const Rational& other);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class value);

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);

/// True when n >= 0 is the square of an integer.
bool is_perfect_square(const Integer& n);

/// Narrowing with a range check; throws std::overflow_error.
std::int64_t to_int64(const Integer& n);

Integer to_integer(std::int64_t n);

}  // namespace resgaps

template <>
struct std::hash<resgaps::Rational> {
    std::size_t operator()(const resgaps::Rational& q) const noexcept {
        return std::hash<std::string>{}(q.str());
    }
};
