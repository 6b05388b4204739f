#ifndef NESTQUAD_EXTENSION_HPP
#define NESTQUAD_EXTENSION_HPP

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "nestquad/interval.hpp"
#include "nestquad/moments.hpp"
#include "nestquad/polynomial.hpp"

namespace nestquad {

/// Why a candidate extension was rejected.
enum class ExtensionFailure {
    no_solution,              ///< the monic Hankel system is singular
    complex_or_outside_roots, ///< fewer than p roots (with multiplicity) in the domain
    shared_roots,             ///< G and F have a common root
    repeated_roots,           ///< G has a multiple root
    insufficient_moments,     ///< max_index < deg F + 2p
};

/// "NoSolution", "ComplexOrOutsideRoots", "SharedRoots", "RepeatedRoots",
/// "InsufficientMoments".
std::string_view to_string(ExtensionFailure reason);
std::optional<ExtensionFailure> parse_failure(std::string_view text);

/// The three exact predicates checked on every candidate G.
struct ExtensionCertificate {
    int roots_in_domain = 0;  ///< counted with multiplicity
    Rational resultant;       ///< resultant(F, G)
    Rational discriminant;    ///< discriminant(G)
};

/// Result of one extension attempt in exact arithmetic.
class ExtensionOutcome {
public:
    static ExtensionOutcome success(Polynomial g, ExtensionCertificate certificate);
    static ExtensionOutcome failure(ExtensionFailure reason, std::optional<Polynomial> candidate = std::nullopt,
                                    std::optional<ExtensionCertificate> certificate = std::nullopt);

    bool succeeded() const { return !failure_; }
    /// The accepted monic G. Throws std::logic_error on failures.
    const Polynomial& extension() const;
    /// Throws std::logic_error on success.
    ExtensionFailure failure_reason() const;
    /// Solution of the Hankel system, also kept when a certificate rejected it.
    const std::optional<Polynomial>& candidate() const { return candidate_; }
    const std::optional<ExtensionCertificate>& certificate() const { return certificate_; }

private:
    ExtensionOutcome() = default;

    std::optional<Polynomial> candidate_;
    std::optional<ExtensionCertificate> certificate_;
    std::optional<ExtensionFailure> failure_;
};

/// nu_m = sum_k f_k mu_{k+m}, m = 0..count-1: the moments of F(t) rho(t).
/// Throws std::out_of_range when deg F + count - 1 exceeds max_index.
std::vector<Rational> modified_moments(const Polynomial& f, const MomentSequence& mu, int count);

/// Runs the certificates on a given G in the fixed order root count,
/// resultant, discriminant; the first violated one names the failure.
ExtensionOutcome classify_extension(const Polynomial& f, const Polynomial& g, const Interval& domain);

/// Finds the monic degree-p polynomial G with int F G t^i rho = 0 for
/// i < p and certifies that the roots of F G support a quadrature formula.
/// Requires p >= 1 and F nonzero (std::invalid_argument otherwise); too few
/// moments is reported as ExtensionFailure::insufficient_moments.
/// Exact moment sequences only (std::invalid_argument otherwise).
ExtensionOutcome extend(const Polynomial& f, int p, const MomentSequence& mu, const Interval& domain);

/// First candidate p (in list order) whose extension succeeds, else the last
/// failure. Throws std::invalid_argument on an empty list.
std::pair<int, ExtensionOutcome> auto_extend(const Polynomial& f, const MomentSequence& mu, const Interval& domain,
                                             const std::vector<int>& p_candidates);

/// Number of nodes added per iteration: a fixed list, or p = n + 1.
class ExtensionSchedule {
public:
    /// Throws std::invalid_argument if empty or any p < 1.
    static ExtensionSchedule fixed(std::vector<int> values);
    /// p = n + 1 for the given number of iterations (>= 1).
    static ExtensionSchedule successor(int iterations);

    std::size_t steps() const { return successor_ ? static_cast<std::size_t>(iterations_) : values_.size(); }
    int p_at(std::size_t step, int current_degree) const;
    bool is_successor_rule() const { return successor_; }
    const std::vector<int>& values() const { return values_; }

    /// Largest deg F + 2p needed by any step when starting from `start_degree`.
    int required_max_index(int start_degree) const;
    /// Node count after all steps succeed.
    int final_degree(int start_degree) const;

private:
    std::vector<int> values_;
    int iterations_ = 0;
    bool successor_ = false;
};

struct ChainStep {
    int p = 0;
    /// F after this step: F_prev * G on success, F_prev otherwise.
    Polynomial node_polynomial;
    ExtensionOutcome outcome;
};

/// Repeatedly extends `start`; stops after the first failed step (which is
/// included as the last entry).
std::vector<ChainStep> generate_chain(const Polynomial& start, const ExtensionSchedule& schedule,
                                      const MomentSequence& mu, const Interval& domain);

// ---------------------------------------------------------------------------
// Floating-point route. Used for approximate (decimal) moment data and as the
// comparison decision for exact data; roots are located numerically and the
// certificates become tolerance tests at a quarter of the working digits.

struct NumericExtensionOutcome {
    std::optional<RealPolynomial> extension;  ///< set on success
    std::optional<RealPolynomial> candidate;  ///< Hankel solution when one exists
    std::optional<ExtensionFailure> failure;  ///< set on failure

    bool succeeded() const { return !failure; }
};

NumericExtensionOutcome extend_numeric(const RealPolynomial& f, int p, const MomentSequence& mu,
                                       const Interval& domain, unsigned digits10);

std::pair<int, NumericExtensionOutcome> auto_extend_numeric(const RealPolynomial& f, const MomentSequence& mu,
                                                            const Interval& domain,
                                                            const std::vector<int>& p_candidates, unsigned digits10);

struct NumericChainStep {
    int p = 0;
    RealPolynomial node_polynomial;
    NumericExtensionOutcome outcome;
};

std::vector<NumericChainStep> generate_chain_numeric(const RealPolynomial& start, const ExtensionSchedule& schedule,
                                                     const MomentSequence& mu, const Interval& domain,
                                                     unsigned digits10);

} // namespace nestquad

#endif
