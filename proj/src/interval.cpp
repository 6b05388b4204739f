#include "nestquad/interval.hpp"

#include <stdexcept>

namespace nestquad {

Interval::Interval(std::optional<Rational> lower, std::optional<Rational> upper)
    : lower_(std::move(lower)), upper_(std::move(upper))
{
    if (lower_ && upper_ && !(*lower_ < *upper_))
        throw std::invalid_argument("interval requires lower < upper, got " + to_string());
}

Rational Interval::center() const
{
    if (lower_ && upper_)
        return (*lower_ + *upper_) / Rational(2);
    if (lower_)
        return *lower_;
    if (upper_)
        return *upper_;
    return Rational(0);
}

std::string Interval::to_string() const
{
    return "[" + bound_to_string(lower_, false) + ", " + bound_to_string(upper_, true) + "]";
}

std::optional<Rational> parse_bound(const std::string& text)
{
    if (text == "-inf" || text == "inf" || text == "+inf")
        return std::nullopt;
    return Rational::parse(text);
}

std::string bound_to_string(const std::optional<Rational>& bound, bool is_upper)
{
    if (bound)
        return bound->to_string();
    return is_upper ? "inf" : "-inf";
}

} // namespace nestquad
