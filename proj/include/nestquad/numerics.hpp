#ifndef NESTQUAD_NUMERICS_HPP
#define NESTQUAD_NUMERICS_HPP

#include <optional>
#include <variant>
#include <vector>

#include "nestquad/interval.hpp"
#include "nestquad/moments.hpp"
#include "nestquad/polynomial.hpp"
#include "nestquad/real.hpp"

namespace nestquad {

/// A refined real root. `exact` is set when the root was hit exactly by
/// rational arithmetic during isolation (domain endpoints, dyadic points).
struct RealRoot {
    Real value;
    std::optional<Rational> exact;
};

/// All roots of p in the closed domain, ascending, to `digits10` significant
/// digits. Roots are isolated by Sturm bisection on rational intervals and
/// refined by safeguarded Newton; each result is certified by an exact sign
/// change of p across value * (1 -+ 10^-digits10).
///
/// Throws std::domain_error unless p has deg p distinct roots in the domain.
std::vector<RealRoot> real_roots(const Polynomial& p, const Interval& domain, unsigned digits10);

/// Roots of a floating-point polynomial whose roots are expected to be
/// simple, real and in the domain. Throws std::domain_error otherwise.
std::vector<Real> real_roots(const RealPolynomial& p, const Interval& domain, unsigned digits10);

/// Weights with sum_i w_i t_i^k = mu_k for k < K (0^0 = 1), by the
/// Bjorck-Pereyra algorithm at `digits10` digits.
/// Throws std::invalid_argument for repeated nodes or too few moments.
std::vector<Real> solve_weights(const std::vector<Real>& nodes, const MomentSequence& mu, unsigned digits10);

/// Exact weights for rational nodes and exact moments.
std::vector<Rational> solve_weights(const std::vector<Rational>& nodes, const MomentSequence& mu);

using NodePolynomial = std::variant<Polynomial, RealPolynomial>;

struct QuadratureFormula {
    std::vector<Real> nodes;    ///< strictly increasing
    std::vector<Real> weights;
    NodePolynomial node_polynomial;
    unsigned precision = 0;     ///< decimal digits carried by nodes and weights
    std::optional<int> verified_degree;
    /// Set when every node is rational and the moments are exact.
    std::optional<std::vector<Rational>> exact_weights;

    std::size_t size() const { return nodes.size(); }
};

/// Largest d <= max_check with |sum_k w_k t_k^j - mu_j| <= tol max(1, |mu_j|)
/// for all j <= d, where tol = 10^-(precision - 10). Returns -1 when even
/// mu_0 is missed (the empty formula). Throws std::out_of_range when
/// max_check exceeds the available moments.
int degree_of_exactness(const QuadratureFormula& formula, const MomentSequence& mu, int max_check);

/// Nodes and weights of the formula supported on the roots of f. Roots and
/// weights are computed at twice the requested digits and then rounded;
/// verified_degree is measured up to mu.max_index().
QuadratureFormula build_formula(const Polynomial& f, const MomentSequence& mu, const Interval& domain,
                                unsigned digits10);
QuadratureFormula build_formula(const RealPolynomial& f, const MomentSequence& mu, const Interval& domain,
                                unsigned digits10);

/// A sequence of formulas with nested node sets.
struct NestedRule {
    std::vector<QuadratureFormula> formulas;
    /// first_level[i][k]: level index at which node k of formula i first
    /// appears. Levels are numbered from `first_index`.
    std::vector<std::vector<int>> first_level;
};

/// Tags every node with the first level containing it, matching nodes across
/// levels to within 10^-(precision/2). Throws std::invalid_argument if a
/// node of one level is missing from the next.
NestedRule assemble_nested_rule(std::vector<QuadratureFormula> formulas, int first_index = 1);

/// Exact nestedness: each polynomial divides the next.
bool polynomials_nested(const std::vector<Polynomial>& node_polynomials);

} // namespace nestquad

#endif
