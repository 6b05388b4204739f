#ifndef NESTQUAD_COMPLEX_ROOTS_HPP
#define NESTQUAD_COMPLEX_ROOTS_HPP

#include <vector>

#include "nestquad/polynomial.hpp"
#include "nestquad/real.hpp"

namespace nestquad {

struct ComplexRoot {
    Real re;
    Real im;
};

/// All complex roots of p (with multiplicity) by Aberth-Ehrlich iteration at
/// `digits10` digits. Simple roots come out accurate to roughly the working
/// precision; an m-fold root to about 1/m of it. Sorted by real part.
/// Throws std::invalid_argument for constant or zero polynomials.
std::vector<ComplexRoot> polynomial_roots(const RealPolynomial& p, unsigned digits10);

} // namespace nestquad

#endif
