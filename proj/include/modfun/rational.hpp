#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace modfun {

/// Exact rational scalar backed by GMP. Always kept in lowest terms with a
/// positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& q);

    /// Accepts `p`, `-p`, `p/q`, `-p/q`. Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const;
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] std::string numerator_str() const;
    [[nodiscard]] std::string denominator_str() const;
    /// Narrowing conversion for integer-valued rationals. Throws if not integral
    /// or out of range.
    [[nodiscard]] std::int64_t to_int64() const;
    [[nodiscard]] std::string str() const;
    [[nodiscard]] const mpq_class& raw() const { return value_; }

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a);

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class value_{0};
};

[[nodiscard]] Rational abs(const Rational& r);

}  // namespace modfun
