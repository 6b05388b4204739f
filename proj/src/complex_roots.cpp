#include "nestquad/complex_roots.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/math/constants/constants.hpp>

namespace nestquad {

namespace {

struct Complex {
    Real re;
    Real im;
};

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator/(const Complex& a, const Complex& b)
{
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real magnitude(const Complex& a) { return sqrt(a.re * a.re + a.im * a.im); }
bool is_zero(const Complex& a) { return a.re == 0 && a.im == 0; }

/// p(z) and p'(z) by a joint Horner pass.
void evaluate(const std::vector<Real>& c, const Complex& z, Complex& value, Complex& slope)
{
    value = {Real(0), Real(0)};
    slope = {Real(0), Real(0)};
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        slope = slope * z + value;
        value = value * z + Complex{*it, Real(0)};
    }
}

} // namespace

std::vector<ComplexRoot> polynomial_roots(const RealPolynomial& p, unsigned digits10)
{
    if (p.degree() < 1)
        throw std::invalid_argument("root finding needs degree >= 1");

    const unsigned working = digits10 + 10;
    PrecisionScope scope(working);

    const int n = p.degree();
    std::vector<Real> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    const Real lead = Real(p.leading(), working);
    for (const auto& a : p.coefficients())
        c.push_back(Real(a, working) / lead);

    // Fujiwara bound on the root moduli.
    Real radius = 0;
    for (int k = 1; k <= n; ++k) {
        const Real a = abs(c[static_cast<std::size_t>(n - k)]);
        if (a == 0)
            continue;
        Real r = pow(a, Real(1) / Real(k));
        if (k == n)
            r = pow(a / 2, Real(1) / Real(k));
        radius = std::max(radius, r);
    }
    radius = 2 * radius;
    if (radius == 0) {
        // p = t^n
        return std::vector<ComplexRoot>(static_cast<std::size_t>(n), ComplexRoot{Real(0), Real(0)});
    }

    const Real center = -c[static_cast<std::size_t>(n - 1)] / Real(n);
    const Real two_pi = 2 * boost::math::constants::pi<Real>();
    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const Real theta = two_pi * Real(k) / Real(n) + Real(0.7);
        z.push_back({center + radius * cos(theta), radius * sin(theta)});
    }

    const Real eps = pow(Real(10), -static_cast<int>(digits10) - 2);
    const int max_iterations = 5000;
    for (int iter = 0; iter < max_iterations; ++iter) {
        bool converged = true;
        for (int i = 0; i < n; ++i) {
            auto& zi = z[static_cast<std::size_t>(i)];
            Complex value;
            Complex slope;
            evaluate(c, zi, value, slope);
            if (is_zero(value))
                continue;
            if (is_zero(slope)) {
                // Nudge off a critical point.
                zi = zi + Complex{eps * (1 + magnitude(zi)), eps};
                converged = false;
                continue;
            }
            const Complex ratio = value / slope;
            Complex sum{Real(0), Real(0)};
            for (int j = 0; j < n; ++j) {
                if (j == i)
                    continue;
                const Complex diff = zi - z[static_cast<std::size_t>(j)];
                if (!is_zero(diff))
                    sum = sum + Complex{Real(1), Real(0)} / diff;
            }
            const Complex denom = Complex{Real(1), Real(0)} - ratio * sum;
            const Complex step = is_zero(denom) ? ratio : ratio / denom;
            zi = zi - step;
            if (magnitude(step) > eps * (1 + magnitude(zi)))
                converged = false;
        }
        if (converged)
            break;
    }

    std::vector<ComplexRoot> roots;
    roots.reserve(z.size());
    for (auto& r : z)
        roots.push_back({Real(r.re, digits10), Real(r.im, digits10)});
    std::sort(roots.begin(), roots.end(), [](const ComplexRoot& a, const ComplexRoot& b) {
        return a.re < b.re || (a.re == b.re && a.im < b.im);
    });
    return roots;
}

} // namespace nestquad
