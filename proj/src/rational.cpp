#include "wk/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace wk {

namespace {

Integer integer_from(std::int64_t v)
{
    // mpz_class has no portable int64 constructor; go through the string form.
    return Integer(std::to_string(v));
}

bool is_integer_literal(std::string_view s)
{
    if (s.empty())
        return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size())
        return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9')
            return false;
    return true;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(integer_from(value)) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(integer_from(numerator), integer_from(denominator))
{
}

Rational::Rational(const Integer& numerator, const Integer& denominator)
{
    if (sgn(denominator) == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {}

Rational Rational::parse(std::string_view text)
{
    auto slash = text.find('/');
    auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("Rational: malformed numerator in '" + std::string(text) + "'");
    std::string num_str(num[0] == '+' ? num.substr(1) : num);
    if (slash == std::string_view::npos)
        return Rational(Integer(num_str));
    auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("Rational: malformed denominator in '" + std::string(text) + "'");
    return Rational(Integer(num_str), Integer(std::string(den)));
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(value_)));
}

Rational Rational::pow(int exponent) const
{
    if (exponent < 0) {
        if (is_zero())
            throw std::domain_error("Rational: zero to a negative power");
        return Rational(1) / pow(-exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(mpq_class(num, den));
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

}  // namespace wk
