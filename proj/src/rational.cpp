#include "modfun/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace modfun {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational::Rational(std::int64_t n) : value_(mpz_class(std::to_string(n))) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!is_digits(num) || !is_digits(den))
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    mpz_class d(std::string{den});
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    mpz_class n(std::string{num});
    if (negative) n = -n;
    return Rational(mpq_class(n, d));
}

bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }

std::int64_t Rational::to_int64() const
{
    if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
    const mpz_class& n = value_.get_num();
    if (!n.fits_slong_p()) throw std::overflow_error("rational " + str() + " exceeds int64");
    return static_cast<std::int64_t>(n.get_si());
}

std::string Rational::str() const
{
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& o)
{
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

Rational operator-(const Rational& a)
{
    Rational r;
    r.value_ = -a.value_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
    int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace modfun
