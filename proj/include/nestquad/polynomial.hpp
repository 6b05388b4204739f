#ifndef NESTQUAD_POLYNOMIAL_HPP
#define NESTQUAD_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nestquad/rational.hpp"
#include "nestquad/real.hpp"

namespace nestquad {

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector is kept trimmed: the last stored coefficient is
/// nonzero, and the zero polynomial stores nothing (degree -1).
template <class Scalar>
class BasicPolynomial {
public:
    BasicPolynomial() = default;
    BasicPolynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }
    BasicPolynomial(std::initializer_list<Scalar> coefficients) : coeffs_(coefficients) { trim(); }

    static BasicPolynomial constant(Scalar c) { return BasicPolynomial(std::vector<Scalar>{std::move(c)}); }

    /// c * t^k
    static BasicPolynomial monomial(std::size_t k, Scalar c = Scalar(1))
    {
        std::vector<Scalar> v(k + 1, Scalar(0));
        v[k] = std::move(c);
        return BasicPolynomial(std::move(v));
    }

    /// Monic polynomial with the given roots.
    static BasicPolynomial from_roots(const std::vector<Scalar>& roots)
    {
        BasicPolynomial p = constant(Scalar(1));
        for (const auto& r : roots)
            p *= BasicPolynomial({-r, Scalar(1)});
        return p;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    /// Coefficient of t^k (zero beyond the degree).
    Scalar operator[](std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

    const Scalar& leading() const
    {
        if (coeffs_.empty())
            throw std::domain_error("zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    /// Horner evaluation; X may differ from Scalar when Scalar converts to it.
    template <class X>
    X evaluate(const X& x) const
    {
        X acc = X(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + X(*it);
        return acc;
    }
    Scalar operator()(const Scalar& x) const { return evaluate<Scalar>(x); }

    BasicPolynomial derivative() const
    {
        if (coeffs_.size() <= 1)
            return {};
        std::vector<Scalar> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = coeffs_[k] * Scalar(static_cast<long>(k));
        return BasicPolynomial(std::move(d));
    }

    BasicPolynomial& operator+=(const BasicPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] += o.coeffs_[k];
        trim();
        return *this;
    }
    BasicPolynomial& operator-=(const BasicPolynomial& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size(), Scalar(0));
        for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
            coeffs_[k] -= o.coeffs_[k];
        trim();
        return *this;
    }
    BasicPolynomial& operator*=(const BasicPolynomial& o)
    {
        if (is_zero() || o.is_zero()) {
            coeffs_.clear();
            return *this;
        }
        std::vector<Scalar> out(coeffs_.size() + o.coeffs_.size() - 1, Scalar(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                out[i + j] += coeffs_[i] * o.coeffs_[j];
        coeffs_ = std::move(out);
        trim();
        return *this;
    }
    BasicPolynomial& operator*=(const Scalar& c)
    {
        for (auto& x : coeffs_)
            x *= c;
        trim();
        return *this;
    }

    friend BasicPolynomial operator+(BasicPolynomial a, const BasicPolynomial& b) { return a += b; }
    friend BasicPolynomial operator-(BasicPolynomial a, const BasicPolynomial& b) { return a -= b; }
    friend BasicPolynomial operator*(BasicPolynomial a, const BasicPolynomial& b) { return a *= b; }
    friend BasicPolynomial operator*(BasicPolynomial a, const Scalar& c) { return a *= c; }
    friend BasicPolynomial operator*(const Scalar& c, BasicPolynomial a) { return a *= c; }
    friend BasicPolynomial operator-(BasicPolynomial a)
    {
        for (auto& x : a.coeffs_)
            x = -x;
        return a;
    }
    friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == Scalar(0))
            coeffs_.pop_back();
    }

    std::vector<Scalar> coeffs_;
};

using Polynomial = BasicPolynomial<Rational>;
using RealPolynomial = BasicPolynomial<Real>;

struct DivisionResult {
    Polynomial quotient;
    Polynomial remainder;
};

/// Exact Euclidean division a = q*b + r with deg r < deg b.
/// Throws std::domain_error when b is the zero polynomial.
DivisionResult divide(const Polynomial& a, const Polynomial& b);

/// Scales to leading coefficient 1 (zero stays zero).
Polynomial monic(const Polynomial& p);

/// Monic greatest common divisor; gcd(0, 0) is the zero polynomial.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p / gcd(p, p'): same distinct roots, all simple.
Polynomial squarefree_part(const Polynomial& p);

/// True when b divides a exactly.
bool divides(const Polynomial& b, const Polynomial& a);

/// Rounds every coefficient to `digits10` decimal digits.
RealPolynomial to_real(const Polynomial& p, unsigned digits10);

/// Human-readable form, e.g. "t^2 - t + 1/16".
std::string to_string(const Polynomial& p, const std::string& var = "t");

/// Coefficients as "p/q" strings, ascending.
std::vector<std::string> to_strings(const Polynomial& p);
Polynomial polynomial_from_strings(const std::vector<std::string>& coefficients);

} // namespace nestquad

#endif
