#ifndef NESTQUAD_INTERVAL_HPP
#define NESTQUAD_INTERVAL_HPP

#include <optional>
#include <string>

#include "nestquad/rational.hpp"

namespace nestquad {

/// Closed real interval; a missing bound is infinite on that side.
class Interval {
public:
    /// Whole real line.
    Interval() = default;
    /// Throws std::invalid_argument unless lower < upper.
    Interval(std::optional<Rational> lower, std::optional<Rational> upper);

    static Interval closed(Rational lower, Rational upper) { return Interval(std::move(lower), std::move(upper)); }
    static Interval real_line() { return {}; }

    const std::optional<Rational>& lower() const { return lower_; }
    const std::optional<Rational>& upper() const { return upper_; }
    bool is_bounded() const { return lower_ && upper_; }

    bool contains(const Rational& x) const
    {
        return (!lower_ || *lower_ <= x) && (!upper_ || x <= *upper_);
    }

    /// Midpoint of a bounded interval; 0 for the real line; the finite
    /// endpoint for a half-line.
    Rational center() const;

    /// "[a, b]" with "-inf"/"inf" for missing bounds.
    std::string to_string() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    std::optional<Rational> lower_;
    std::optional<Rational> upper_;
};

/// Parses an interval bound: "p/q", "-inf" or "inf".
std::optional<Rational> parse_bound(const std::string& text);
std::string bound_to_string(const std::optional<Rational>& bound, bool is_upper);

} // namespace nestquad

#endif
