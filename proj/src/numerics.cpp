#include "nestquad/numerics.hpp"

#include <algorithm>
#include <stdexcept>

#include "nestquad/complex_roots.hpp"
#include "nestquad/sturm.hpp"

namespace nestquad {

namespace {

struct Bracket {
    Rational lower;
    Rational upper;
    std::optional<Rational> exact;
};

/// Splits (a, b] until every piece holds one root with a strict sign change
/// at its ends, or the root sits exactly on a rational split point.
void isolate(const SturmChain& chain, const Rational& a, const Rational& b, std::vector<Bracket>& out)
{
    const int n = chain.count_half_open(a, b);
    if (n == 0)
        return;
    const Polynomial& p = chain.base();
    if (n == 1) {
        if (p(b).is_zero()) {
            out.push_back({b, b, b});
            return;
        }
        if (!p(a).is_zero()) {
            out.push_back({a, b, std::nullopt});
            return;
        }
    }
    const Rational mid = (a + b) / Rational(2);
    isolate(chain, a, mid, out);
    isolate(chain, mid, b, out);
}

int exact_sign_at(const Polynomial& p, const Real& x)
{
    return p(to_rational(x)).sign();
}

/// Newton iteration kept inside [lo, hi] by bisection, at `working` digits.
Real newton_in_bracket(const Polynomial& p, const Bracket& br, unsigned working)
{
    PrecisionScope scope(working);
    const RealPolynomial f = to_real(p, working);
    const RealPolynomial df = f.derivative();
    Real lo = to_real(br.lower, working);
    Real hi = to_real(br.upper, working);
    const int sign_lo = p(br.lower).sign();
    const Real eps = pow(Real(10), -static_cast<int>(working) + 2);

    Real x = (lo + hi) / 2;
    for (int iter = 0; iter < 10 * static_cast<int>(working); ++iter) {
        const Real fx = f.evaluate(x);
        if (fx == 0)
            break;
        if ((fx > 0 ? 1 : -1) == sign_lo)
            lo = x;
        else
            hi = x;
        const Real dfx = df.evaluate(x);
        Real next = dfx != 0 ? x - fx / dfx : (lo + hi) / 2;
        if (!(next > lo && next < hi))
            next = (lo + hi) / 2;
        const bool done = abs(next - x) <= eps * abs(next) || hi - lo <= eps * abs(next);
        x = next;
        if (done)
            break;
    }
    return x;
}

bool certified(const Polynomial& p, const Real& x, unsigned digits10)
{
    const unsigned w = static_cast<unsigned>(x.precision());
    PrecisionScope scope(std::max(w, digits10 + 5));
    const Real delta = abs(x) * pow(Real(10), -static_cast<int>(digits10));
    if (delta == 0)
        return false;
    const int s_lo = exact_sign_at(p, x - delta);
    const int s_hi = exact_sign_at(p, x + delta);
    return s_lo != 0 && s_hi != 0 && s_lo != s_hi;
}

Real refine(const Polynomial& p, const Bracket& br, unsigned digits10)
{
    for (unsigned working = digits10 + 20; working <= 16 * (digits10 + 20); working *= 2) {
        Real x = newton_in_bracket(p, br, working);
        if (certified(p, x, digits10))
            return Real(x, digits10);
    }
    // Exact bisection as the last resort.
    Rational lo = br.lower;
    Rational hi = br.upper;
    const int sign_lo = p(lo).sign();
    const Rational target = pow(Rational(mpz_class(1), mpz_class(10)), digits10 + 2);
    while (hi - lo > target * std::min(abs(lo), abs(hi)) || (lo.sign() <= 0 && hi.sign() >= 0)) {
        const Rational mid = (lo + hi) / Rational(2);
        const int s = p(mid).sign();
        if (s == 0)
            return to_real(mid, digits10);
        (s == sign_lo ? lo : hi) = mid;
    }
    return to_real((lo + hi) / Rational(2), digits10);
}

template <class T>
void check_distinct(std::vector<T> nodes)
{
    std::sort(nodes.begin(), nodes.end());
    if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
        throw std::invalid_argument("weight system is singular: repeated node");
}

/// Solves sum_j x_j^k z_j = b_k, k = 0..n, in place (Golub & Van Loan,
/// algorithm 4.6.2).
template <class T>
void bjorck_pereyra(const std::vector<T>& x, std::vector<T>& b)
{
    const std::size_t n = x.size();
    if (n == 0)
        return;
    for (std::size_t k = 0; k + 1 < n; ++k)
        for (std::size_t i = n - 1; i > k; --i)
            b[i] -= x[k] * b[i - 1];
    for (std::size_t k = n - 1; k-- > 0;) {
        for (std::size_t i = k + 1; i < n; ++i)
            b[i] /= x[i] - x[i - k - 1];
        for (std::size_t i = k; i + 1 < n; ++i)
            b[i] -= b[i + 1];
    }
}

void check_moment_count(std::size_t nodes, const MomentSequence& mu)
{
    if (static_cast<int>(nodes) - 1 > mu.max_index())
        throw std::invalid_argument("weight system for " + std::to_string(nodes) + " nodes needs mu_"
                                    + std::to_string(nodes - 1));
}

Rational floor_of(const Rational& x)
{
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), x.numerator().get_mpz_t(), x.denominator().get_mpz_t());
    return Rational(f, mpz_class(1));
}

/// Smallest-denominator rational in [lo, hi].
Rational simplest_between(const Rational& lo, const Rational& hi)
{
    if (lo.sign() <= 0 && hi.sign() >= 0)
        return Rational(0);
    if (hi.sign() < 0)
        return -simplest_between(-hi, -lo);
    const Rational fl = floor_of(lo);
    if (fl == lo)
        return fl;
    if (fl + Rational(1) <= hi)
        return fl + Rational(1);
    return fl + Rational(1) / simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

/// A refined root that is secretly rational is recognised by its simplest
/// rational neighbour.
std::optional<Rational> rational_root_near(const Polynomial& p, const Bracket& br, const Real& x, unsigned digits10)
{
    PrecisionScope scope(digits10 + 10);
    const Real eps = pow(Real(10), -static_cast<int>(digits10 > 10 ? digits10 - 5 : digits10)) * (1 + abs(x));
    const Rational lo = std::max(br.lower, to_rational(Real(x - eps)));
    const Rational hi = std::min(br.upper, to_rational(Real(x + eps)));
    if (!(lo < hi))
        return std::nullopt;
    const Rational r = simplest_between(lo, hi);
    if (p(r).is_zero())
        return r;
    return std::nullopt;
}

} // namespace

std::vector<RealRoot> real_roots(const Polynomial& p, const Interval& domain, unsigned digits10)
{
    if (p.is_zero())
        throw std::invalid_argument("roots of the zero polynomial");
    if (p.degree() == 0)
        return {};

    const SturmChain chain(p);
    const Polynomial& base = chain.base();
    const Rational bound = root_bound(base);
    Rational lo = domain.lower() ? std::max(*domain.lower(), -bound) : -bound;
    Rational hi = domain.upper() ? std::min(*domain.upper(), bound) : bound;

    std::vector<Bracket> brackets;
    if (domain.lower() && base(*domain.lower()).is_zero())
        brackets.push_back({*domain.lower(), *domain.lower(), *domain.lower()});
    if (lo < hi)
        isolate(chain, lo, hi, brackets);

    if (static_cast<int>(brackets.size()) != p.degree())
        throw std::domain_error("polynomial of degree " + std::to_string(p.degree()) + " has "
                                + std::to_string(brackets.size()) + " distinct roots in " + domain.to_string());

    std::vector<RealRoot> roots;
    roots.reserve(brackets.size());
    for (const auto& br : brackets) {
        if (br.exact)
            roots.push_back({to_real(*br.exact, digits10), br.exact});
        else {
            Real x = refine(base, br, digits10);
            auto r = rational_root_near(base, br, x, digits10);
            if (r)
                x = to_real(*r, digits10);
            roots.push_back({std::move(x), std::move(r)});
        }
    }
    return roots;
}

std::vector<Real> real_roots(const RealPolynomial& p, const Interval& domain, unsigned digits10)
{
    if (p.is_zero())
        throw std::invalid_argument("roots of the zero polynomial");
    if (p.degree() == 0)
        return {};
    PrecisionScope scope(digits10);
    const Real tol = pow(Real(10), -static_cast<int>(digits10 / 4));
    std::vector<Real> out;
    for (const auto& r : polynomial_roots(p, digits10)) {
        if (abs(r.im) > tol * (1 + abs(r.re)))
            throw std::domain_error("polynomial has a complex root");
        const Real slack = tol * (1 + abs(r.re));
        if ((domain.lower() && r.re < to_real(*domain.lower(), digits10) - slack)
            || (domain.upper() && r.re > to_real(*domain.upper(), digits10) + slack))
            throw std::domain_error("polynomial has a root outside " + domain.to_string());
        out.push_back(r.re);
    }
    std::sort(out.begin(), out.end());
    for (std::size_t i = 1; i < out.size(); ++i)
        if (abs(out[i] - out[i - 1]) <= tol * (1 + abs(out[i])))
            throw std::domain_error("polynomial has a repeated root");
    return out;
}

std::vector<Real> solve_weights(const std::vector<Real>& nodes, const MomentSequence& mu, unsigned digits10)
{
    check_moment_count(nodes.size(), mu);
    PrecisionScope scope(digits10);
    std::vector<Real> x;
    x.reserve(nodes.size());
    for (const auto& t : nodes)
        x.push_back(Real(t, digits10));
    check_distinct(x);
    std::vector<Real> b = mu.real_moments(static_cast<int>(nodes.size()), digits10);
    bjorck_pereyra(x, b);
    return b;
}

std::vector<Rational> solve_weights(const std::vector<Rational>& nodes, const MomentSequence& mu)
{
    check_moment_count(nodes.size(), mu);
    check_distinct(nodes);
    std::vector<Rational> b;
    b.reserve(nodes.size());
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
        b.push_back(mu.exact_moment(k));
    bjorck_pereyra(nodes, b);
    return b;
}

int degree_of_exactness(const QuadratureFormula& formula, const MomentSequence& mu, int max_check)
{
    if (max_check > mu.max_index())
        throw std::out_of_range("degree check up to " + std::to_string(max_check) + " needs more moments");
    const unsigned working = formula.precision + 20;
    PrecisionScope scope(working);
    const int exponent = std::max(static_cast<int>(formula.precision) - 10, 5);
    const Real tol = pow(Real(10), -exponent);

    std::vector<Real> power(formula.nodes.size(), Real(1));
    for (int j = 0; j <= max_check; ++j) {
        Real sum = 0;
        for (std::size_t k = 0; k < formula.nodes.size(); ++k)
            sum += formula.weights[k] * power[k];
        const Real m = mu.real_moment(j, working);
        if (abs(sum - m) > tol * std::max<Real>(Real(1), abs(m)))
            return j - 1;
        for (std::size_t k = 0; k < formula.nodes.size(); ++k)
            power[k] *= formula.nodes[k];
    }
    return max_check;
}

QuadratureFormula build_formula(const Polynomial& f, const MomentSequence& mu, const Interval& domain,
                                unsigned digits10)
{
    const unsigned working = 2 * digits10 + 10;
    const auto roots = real_roots(f, domain, working);

    QuadratureFormula formula;
    formula.node_polynomial = f;
    formula.precision = mu.is_exact() ? digits10 : std::min(digits10, mu.precision());

    std::vector<Real> nodes;
    nodes.reserve(roots.size());
    for (const auto& r : roots)
        nodes.push_back(r.value);

    const bool all_exact = std::all_of(roots.begin(), roots.end(), [](const RealRoot& r) { return r.exact.has_value(); });
    std::vector<Real> weights;
    if (all_exact && mu.is_exact()) {
        std::vector<Rational> exact_nodes;
        for (const auto& r : roots)
            exact_nodes.push_back(*r.exact);
        auto w = solve_weights(exact_nodes, mu);
        for (const auto& q : w)
            weights.push_back(to_real(q, working));
        formula.exact_weights = std::move(w);
    } else {
        weights = solve_weights(nodes, mu, working);
    }

    for (std::size_t k = 0; k < nodes.size(); ++k) {
        formula.nodes.push_back(round_to(nodes[k], formula.precision));
        formula.weights.push_back(round_to(weights[k], formula.precision));
    }
    formula.verified_degree = degree_of_exactness(formula, mu, mu.max_index());
    return formula;
}

QuadratureFormula build_formula(const RealPolynomial& f, const MomentSequence& mu, const Interval& domain,
                                unsigned digits10)
{
    QuadratureFormula formula;
    formula.node_polynomial = f;
    formula.precision = mu.is_exact() ? digits10 : std::min(digits10, mu.precision());
    const unsigned working = 2 * formula.precision + 10;

    const auto nodes = real_roots(f, domain, working);
    const auto weights = solve_weights(nodes, mu, working);
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        formula.nodes.push_back(round_to(nodes[k], formula.precision));
        formula.weights.push_back(round_to(weights[k], formula.precision));
    }
    formula.verified_degree = degree_of_exactness(formula, mu, mu.max_index());
    return formula;
}

NestedRule assemble_nested_rule(std::vector<QuadratureFormula> formulas, int first_index)
{
    NestedRule rule;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        const auto& f = formulas[i];
        std::vector<int> tags(f.size(), first_index + static_cast<int>(i));
        if (i > 0) {
            const auto& prev = formulas[i - 1];
            const auto& prev_tags = rule.first_level.back();
            PrecisionScope scope(f.precision);
            const Real tol = pow(Real(10), -static_cast<int>(std::min(f.precision, prev.precision) / 2));
            std::size_t matched = 0;
            for (std::size_t k = 0; k < f.size(); ++k) {
                for (std::size_t j = 0; j < prev.size(); ++j) {
                    if (abs(f.nodes[k] - prev.nodes[j]) <= tol * (1 + abs(f.nodes[k]))) {
                        tags[k] = prev_tags[j];
                        ++matched;
                        break;
                    }
                }
            }
            if (matched != prev.size())
                throw std::invalid_argument("level " + std::to_string(first_index + static_cast<int>(i))
                                            + " does not contain all nodes of the previous level");
        }
        rule.first_level.push_back(std::move(tags));
    }
    rule.formulas = std::move(formulas);
    return rule;
}

bool polynomials_nested(const std::vector<Polynomial>& node_polynomials)
{
    for (std::size_t i = 1; i < node_polynomials.size(); ++i)
        if (!divides(node_polynomials[i - 1], node_polynomials[i]))
            return false;
    return true;
}

} // namespace nestquad
