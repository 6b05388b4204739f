#include "nestquad/real.hpp"

#include <cctype>
#include <stdexcept>

#include <mpfr.h>

namespace nestquad {

Real to_real(const Rational& q, unsigned digits10)
{
    Real r;
    r.precision(digits10);
    mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Rational to_rational(const Real& x)
{
    if (!mpfr_number_p(x.backend().data()))
        throw std::domain_error("non-finite value has no rational form");
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), x.backend().data());
    return Rational(q);
}

Real round_to(const Real& x, unsigned digits10)
{
    return Real(x, digits10);
}

Real parse_real(std::string_view text, unsigned digits10)
{
    std::string s(text);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
    const auto first = s.find_first_not_of(" \t\n");
    s = first == std::string::npos ? std::string{} : s.substr(first);
    if (s.empty())
        throw std::invalid_argument("empty number");

    if (s.find('/') != std::string::npos)
        return to_real(Rational::parse(s), digits10);

    Real r;
    r.precision(digits10);
    char* end = nullptr;
    mpfr_strtofr(r.backend().data(), s.c_str(), &end, 10, MPFR_RNDN);
    if (end == s.c_str() || *end != '\0' || !mpfr_number_p(r.backend().data()))
        throw std::invalid_argument("not a decimal number: \"" + s + "\"");
    return r;
}

std::string format_real(const Real& x, unsigned digits10)
{
    const mpfr_srcptr v = x.backend().data();
    if (mpfr_nan_p(v))
        return "nan";
    if (mpfr_inf_p(v))
        return mpfr_sgn(v) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v))
        return "0";

    mpfr_exp_t exponent = 0;
    char* raw = mpfr_get_str(nullptr, &exponent, 10, digits10, v, MPFR_RNDN);
    std::string digits(raw);
    mpfr_free_str(raw);

    std::string sign;
    if (digits.front() == '-') {
        sign = "-";
        digits.erase(0, 1);
    }
    while (digits.size() > 1 && digits.back() == '0')
        digits.pop_back();

    // value = 0.<digits> * 10^exponent
    const long e = static_cast<long>(exponent);
    std::string out;
    if (e > 0 && e <= 30) {
        if (static_cast<long>(digits.size()) <= e) {
            out = digits + std::string(static_cast<std::size_t>(e) - digits.size(), '0');
        } else {
            out = digits.substr(0, static_cast<std::size_t>(e)) + "." + digits.substr(static_cast<std::size_t>(e));
        }
    } else if (e <= 0 && e > -6) {
        out = "0." + std::string(static_cast<std::size_t>(-e), '0') + digits;
    } else {
        out = digits.substr(0, 1);
        if (digits.size() > 1)
            out += "." + digits.substr(1);
        out += "e" + std::to_string(e - 1);
    }
    return sign + out;
}

} // namespace nestquad
