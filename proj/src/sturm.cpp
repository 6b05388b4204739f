#include "nestquad/sturm.hpp"

#include <stdexcept>

namespace nestquad {

namespace {

Polynomial normalize_positive(const Polynomial& p)
{
    if (p.is_zero())
        return p;
    return p * (Rational(1) / abs(p.leading()));
}

int count_variations(const std::vector<int>& signs)
{
    int variations = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++variations;
        last = s;
    }
    return variations;
}

} // namespace

SturmChain::SturmChain(const Polynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("Sturm chain of the zero polynomial");
    chain_.push_back(normalize_positive(squarefree_part(p)));
    if (chain_.front().degree() == 0)
        return;
    chain_.push_back(normalize_positive(chain_.front().derivative()));
    while (true) {
        const auto& prev = chain_[chain_.size() - 2];
        const auto& last = chain_.back();
        Polynomial r = divide(prev, last).remainder;
        if (r.is_zero())
            break;
        chain_.push_back(normalize_positive(-r));
    }
}

int SturmChain::variations_at(const Rational& x) const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_)
        signs.push_back(p(x).sign());
    return count_variations(signs);
}

int SturmChain::variations_at_minus_infinity() const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_) {
        const int s = p.leading().sign();
        signs.push_back(p.degree() % 2 == 0 ? s : -s);
    }
    return count_variations(signs);
}

int SturmChain::variations_at_plus_infinity() const
{
    std::vector<int> signs;
    signs.reserve(chain_.size());
    for (const auto& p : chain_)
        signs.push_back(p.leading().sign());
    return count_variations(signs);
}

int SturmChain::count(const Interval& interval) const
{
    const auto& lo = interval.lower();
    const auto& hi = interval.upper();
    const int v_lo = lo ? variations_at(*lo) : variations_at_minus_infinity();
    const int v_hi = hi ? variations_at(*hi) : variations_at_plus_infinity();
    // V(a) - V(b) counts (a, b]; the closed interval also owns a.
    const int at_lower = lo && base()(*lo).is_zero() ? 1 : 0;
    return v_lo - v_hi + at_lower;
}

int count_real_roots(const Polynomial& p, const Interval& interval)
{
    return SturmChain(p).count(interval);
}

int count_real_roots_with_multiplicity(const Polynomial& p, const Interval& interval)
{
    if (p.is_zero())
        throw std::invalid_argument("root count of the zero polynomial");
    // A root of multiplicity m survives in exactly m of the iterated gcds
    // p, gcd(p, p'), gcd(gcd(p, p'), ...'), ...
    int total = 0;
    Polynomial q = p;
    while (q.degree() >= 1) {
        total += count_real_roots(q, interval);
        q = gcd(q, q.derivative());
    }
    return total;
}

Rational root_bound(const Polynomial& p)
{
    if (p.is_zero())
        throw std::invalid_argument("root bound of the zero polynomial");
    Rational m(0);
    const Rational lead = abs(p.leading());
    for (int k = 0; k < p.degree(); ++k) {
        const Rational r = abs(p.coefficients()[static_cast<std::size_t>(k)]) / lead;
        if (r > m)
            m = r;
    }
    return Rational(1) + m;
}

} // namespace nestquad
