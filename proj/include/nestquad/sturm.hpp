#ifndef NESTQUAD_STURM_HPP
#define NESTQUAD_STURM_HPP

#include <vector>

#include "nestquad/interval.hpp"
#include "nestquad/polynomial.hpp"

namespace nestquad {

/// Sturm sequence of the squarefree part of a polynomial, in exact arithmetic.
///
/// Each member is rescaled by a positive rational to keep coefficients small;
/// positive scaling leaves every sign variation count unchanged.
class SturmChain {
public:
    /// Throws std::invalid_argument for the zero polynomial.
    explicit SturmChain(const Polynomial& p);

    /// The squarefree polynomial the chain is built on (same distinct roots).
    const Polynomial& base() const { return chain_.front(); }
    const std::vector<Polynomial>& members() const { return chain_; }

    int variations_at(const Rational& x) const;
    int variations_at_minus_infinity() const;
    int variations_at_plus_infinity() const;

    /// Distinct roots in the half-open interval (a, b].
    int count_half_open(const Rational& a, const Rational& b) const { return variations_at(a) - variations_at(b); }

    /// Distinct roots in the closed interval (infinite bounds allowed).
    int count(const Interval& interval) const;

private:
    std::vector<Polynomial> chain_;
};

/// Number of distinct real roots of p in the closed interval.
int count_real_roots(const Polynomial& p, const Interval& interval);

/// Number of real roots in the closed interval counted with multiplicity.
int count_real_roots_with_multiplicity(const Polynomial& p, const Interval& interval);

/// Rational bound B with every complex root z satisfying |z| < B.
Rational root_bound(const Polynomial& p);

} // namespace nestquad

#endif
