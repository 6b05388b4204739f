#include "nestquad/polynomial.hpp"

#include <sstream>

namespace nestquad {

DivisionResult divide(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Polynomial{}, a};

    std::vector<Rational> rem = a.coefficients();
    const auto& den = b.coefficients();
    const int db = b.degree();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational inv_lead = Rational(1) / b.leading();

    for (int k = a.degree() - db; k >= 0; --k) {
        const Rational c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = c;
        if (c.is_zero())
            continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * den[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial monic(const Polynomial& p)
{
    if (p.is_zero())
        return p;
    return p * (Rational(1) / p.leading());
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    Polynomial x = a;
    Polynomial y = b;
    while (!y.is_zero()) {
        Polynomial r = divide(x, y).remainder;
        x = std::move(y);
        // keeping the remainders monic bounds coefficient growth
        y = monic(r);
    }
    return monic(x);
}

Polynomial squarefree_part(const Polynomial& p)
{
    if (p.degree() <= 0)
        return p;
    const Polynomial g = gcd(p, p.derivative());
    return divide(p, g).quotient;
}

bool divides(const Polynomial& b, const Polynomial& a)
{
    return divide(a, b).remainder.is_zero();
}

RealPolynomial to_real(const Polynomial& p, unsigned digits10)
{
    std::vector<Real> c;
    c.reserve(p.coefficients().size());
    for (const auto& q : p.coefficients())
        c.push_back(to_real(q, digits10));
    return RealPolynomial(std::move(c));
}

std::string to_string(const Polynomial& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coefficients()[static_cast<std::size_t>(k)];
        if (c.is_zero())
            continue;
        const Rational mag = abs(c);
        if (first)
            os << (c.sign() < 0 ? "-" : "");
        else
            os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != Rational(1))
            os << mag << (k >= 1 ? "*" : "");
        if (k >= 1)
            os << var;
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

std::vector<std::string> to_strings(const Polynomial& p)
{
    std::vector<std::string> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients())
        out.push_back(c.to_string());
    return out;
}

Polynomial polynomial_from_strings(const std::vector<std::string>& coefficients)
{
    std::vector<Rational> c;
    c.reserve(coefficients.size());
    for (const auto& s : coefficients)
        c.push_back(Rational::parse(s));
    return Polynomial(std::move(c));
}

} // namespace nestquad
