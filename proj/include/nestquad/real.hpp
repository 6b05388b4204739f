#ifndef NESTQUAD_REAL_HPP
#define NESTQUAD_REAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/mpfr.hpp>

#include "nestquad/rational.hpp"

namespace nestquad {

/// Variable-precision binary floating point (MPFR). Results of arithmetic
/// carry the larger precision of their operands and the current default.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Sets the default Real precision (decimal digits) for the lifetime of the
/// guard and restores the previous value on exit.
class PrecisionScope {
public:
    explicit PrecisionScope(unsigned digits10) : saved_(Real::default_precision())
    {
        Real::default_precision(digits10);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    unsigned saved_;
};

/// Correctly rounded conversion at the given number of decimal digits.
Real to_real(const Rational& q, unsigned digits10);

/// Exact value of a finite Real.
Rational to_rational(const Real& x);

/// Rounds x to digits10 significant digits (and that precision).
Real round_to(const Real& x, unsigned digits10);

/// Parses a decimal (or "p/q") string at the given precision.
/// Throws std::invalid_argument on malformed input.
Real parse_real(std::string_view text, unsigned digits10);

/// Decimal text with `digits10` significant digits. Plain positional notation
/// for moderate magnitudes, scientific otherwise; trailing zeros trimmed.
std::string format_real(const Real& x, unsigned digits10);

} // namespace nestquad

#endif
