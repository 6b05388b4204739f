#include "nestquad/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace nestquad {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    if (value_.get_den() == 0)
        throw std::domain_error("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
        text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
        text.remove_suffix(1);

    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num))
        throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
    if (slash == std::string_view::npos)
        return Rational(parse_integer(num), 1);

    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("not a rational: \"" + std::string(text) + "\"");
    const mpz_class d = parse_integer(den);
    if (d == 0)
        throw std::invalid_argument("zero denominator in \"" + std::string(text) + "\"");
    return Rational(parse_integer(num), d);
}

std::string Rational::to_string() const
{
    if (value_.get_den() == 1)
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
}

Rational abs(const Rational& x)
{
    return x.sign() < 0 ? -x : x;
}

Rational pow(const Rational& base, unsigned exponent)
{
    mpz_class num;
    mpz_class den;
    mpz_pow_ui(num.get_mpz_t(), base.get().get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get().get_den_mpz_t(), exponent);
    return Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& x)
{
    return os << x.to_string();
}

} // namespace nestquad
