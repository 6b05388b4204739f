#ifndef NESTQUAD_MOMENTS_HPP
#define NESTQUAD_MOMENTS_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "nestquad/interval.hpp"
#include "nestquad/rational.hpp"
#include "nestquad/real.hpp"

namespace nestquad {

/// A built-in probability distribution with rational moments.
struct DistributionSpec {
    enum class Family { uniform, beta, gaussian };

    Family family = Family::uniform;
    /// uniform: endpoints a < b. beta: shape parameters alpha, beta > 0.
    /// gaussian: unused (standard normal).
    Rational first;
    Rational second;

    static DistributionSpec uniform(Rational a, Rational b);
    static DistributionSpec beta(Rational alpha, Rational beta);
    static DistributionSpec gaussian();

    /// "uniform:a,b", "beta:alpha,beta", "gauss" (or "gaussian", "normal").
    /// Throws std::invalid_argument on unknown families or invalid parameters.
    static DistributionSpec parse(std::string_view text);
    std::string to_string() const;

    /// Support of the density.
    Interval domain() const;

    friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;
};

/// Exact k-th raw moment. Throws std::invalid_argument for k < 0.
Rational moment(const DistributionSpec& spec, int k);

/// Moments mu_0..mu_max_index of a distribution on a domain; the only
/// representation of the weight function anywhere in the library.
///
/// Exact sequences hold rationals. Approximate sequences hold the decimal
/// text they were read from, so they convert losslessly at any precision.
class MomentSequence {
public:
    enum class Kind { exact, approximate };

    /// Throws std::invalid_argument if empty or mu_0 != 1.
    static MomentSequence exact(Interval domain, std::vector<Rational> moments);
    static MomentSequence approximate(Interval domain, std::vector<std::string> moments, unsigned precision);
    static MomentSequence from_distribution(const DistributionSpec& spec, int max_index);

    const Interval& domain() const { return domain_; }
    Kind kind() const { return kind_; }
    bool is_exact() const { return kind_ == Kind::exact; }
    int max_index() const;
    /// Decimal digits of the approximate data (0 for exact sequences).
    unsigned precision() const { return precision_; }

    /// Exact moment; throws std::logic_error on approximate sequences and
    /// std::out_of_range beyond max_index.
    const Rational& exact_moment(int k) const;
    /// Moment rounded to `digits10` digits; valid for both kinds.
    Real real_moment(int k, unsigned digits10) const;
    std::vector<Real> real_moments(int count, unsigned digits10) const;

    /// Moment as text: "p/q" for exact, the stored decimal otherwise.
    std::string moment_text(int k) const;

    /// Sequence restricted to mu_0..mu_max_index (or a different domain).
    MomentSequence truncated(int max_index) const;
    MomentSequence with_domain(Interval domain) const;

    /// Hankel matrix [mu_{i+j}] has positive leading principal minors for all
    /// sizes m+1 with 2m <= max_index. Exact sequences only.
    bool hankel_positive() const;

private:
    MomentSequence() = default;

    Interval domain_;
    Kind kind_ = Kind::exact;
    std::vector<Rational> exact_;
    std::vector<std::string> text_;
    unsigned precision_ = 0;
};

/// Reads a moments document:
///   {"domain": ["0", "1"], "precision": 50, "moments": ["1", "1/2", ...]}
/// Exact when every entry is "p/q"; otherwise approximate at the declared
/// precision (or the longest mantissa in the file). Throws std::runtime_error.
MomentSequence load_moments(const std::filesystem::path& path);
MomentSequence parse_moments(std::string_view json_text);

/// Serializes in the format load_moments reads.
std::string moments_to_json(const MomentSequence& moments);

} // namespace nestquad

#endif
