#ifndef NESTQUAD_EXACT_LINEAR_HPP
#define NESTQUAD_EXACT_LINEAR_HPP

#include <optional>
#include <vector>

#include "nestquad/polynomial.hpp"
#include "nestquad/rational.hpp"

namespace nestquad {

/// Row-major dense matrix of rationals.
using RationalMatrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) elimination. Rows are first scaled to integers, so
// every intermediate entry is an integer minor of the scaled matrix.

Rational determinant(const RationalMatrix& m);

/// Unique solution of the square system a x = b, or nullopt when singular.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Determinants of the k x k leading principal submatrices, k = 1..n.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

/// Sylvester-matrix resultant: lead(a)^deg(b) * prod over roots x of a of b(x).
/// Throws std::invalid_argument when either operand is zero.
Rational resultant(const Polynomial& a, const Polynomial& b);

/// (-1)^(n(n-1)/2) / lead(p) * resultant(p, p'). Zero iff p has a repeated root.
/// Throws std::invalid_argument when deg p < 1.
Rational discriminant(const Polynomial& p);

} // namespace nestquad

#endif
