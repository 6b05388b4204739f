#include "nestquad/extension.hpp"

#include <algorithm>
#include <stdexcept>

#include "nestquad/complex_roots.hpp"
#include "nestquad/exact_linear.hpp"
#include "nestquad/sturm.hpp"

namespace nestquad {

std::string_view to_string(ExtensionFailure reason)
{
    switch (reason) {
    case ExtensionFailure::no_solution:
        return "NoSolution";
    case ExtensionFailure::complex_or_outside_roots:
        return "ComplexOrOutsideRoots";
    case ExtensionFailure::shared_roots:
        return "SharedRoots";
    case ExtensionFailure::repeated_roots:
        return "RepeatedRoots";
    case ExtensionFailure::insufficient_moments:
        return "InsufficientMoments";
    }
    return "Unknown";
}

std::optional<ExtensionFailure> parse_failure(std::string_view text)
{
    for (auto r : {ExtensionFailure::no_solution, ExtensionFailure::complex_or_outside_roots,
                   ExtensionFailure::shared_roots, ExtensionFailure::repeated_roots,
                   ExtensionFailure::insufficient_moments})
        if (to_string(r) == text)
            return r;
    return std::nullopt;
}

ExtensionOutcome ExtensionOutcome::success(Polynomial g, ExtensionCertificate certificate)
{
    ExtensionOutcome o;
    o.candidate_ = std::move(g);
    o.certificate_ = std::move(certificate);
    return o;
}

ExtensionOutcome ExtensionOutcome::failure(ExtensionFailure reason, std::optional<Polynomial> candidate,
                                           std::optional<ExtensionCertificate> certificate)
{
    ExtensionOutcome o;
    o.failure_ = reason;
    o.candidate_ = std::move(candidate);
    o.certificate_ = std::move(certificate);
    return o;
}

const Polynomial& ExtensionOutcome::extension() const
{
    if (failure_)
        throw std::logic_error("failed extension has no polynomial");
    return *candidate_;
}

ExtensionFailure ExtensionOutcome::failure_reason() const
{
    if (!failure_)
        throw std::logic_error("successful extension has no failure reason");
    return *failure_;
}

std::vector<Rational> modified_moments(const Polynomial& f, const MomentSequence& mu, int count)
{
    if (f.is_zero())
        throw std::invalid_argument("modified moments of the zero polynomial");
    const int needed = f.degree() + count - 1;
    if (needed > mu.max_index())
        throw std::out_of_range("modified moments need mu_" + std::to_string(needed) + ", have up to mu_"
                                + std::to_string(mu.max_index()));
    std::vector<Rational> nu;
    nu.reserve(static_cast<std::size_t>(std::max(count, 0)));
    for (int m = 0; m < count; ++m) {
        Rational acc(0);
        for (int k = 0; k <= f.degree(); ++k) {
            const Rational& fk = f.coefficients()[static_cast<std::size_t>(k)];
            if (!fk.is_zero())
                acc += fk * mu.exact_moment(k + m);
        }
        nu.push_back(std::move(acc));
    }
    return nu;
}

ExtensionOutcome classify_extension(const Polynomial& f, const Polynomial& g, const Interval& domain)
{
    if (g.degree() < 1)
        throw std::invalid_argument("extension polynomial must have degree >= 1");
    ExtensionCertificate cert;
    cert.roots_in_domain = count_real_roots_with_multiplicity(g, domain);
    if (cert.roots_in_domain != g.degree())
        return ExtensionOutcome::failure(ExtensionFailure::complex_or_outside_roots, g, cert);
    cert.resultant = resultant(f, g);
    if (cert.resultant.is_zero())
        return ExtensionOutcome::failure(ExtensionFailure::shared_roots, g, cert);
    cert.discriminant = discriminant(g);
    if (cert.discriminant.is_zero())
        return ExtensionOutcome::failure(ExtensionFailure::repeated_roots, g, cert);
    return ExtensionOutcome::success(g, std::move(cert));
}

ExtensionOutcome extend(const Polynomial& f, int p, const MomentSequence& mu, const Interval& domain)
{
    if (p < 1)
        throw std::invalid_argument("extension needs p >= 1, got " + std::to_string(p));
    if (f.is_zero())
        throw std::invalid_argument("cannot extend the zero polynomial");
    if (!mu.is_exact())
        throw std::invalid_argument("exact extension needs exact moments; use extend_numeric");
    if (mu.max_index() < f.degree() + 2 * p)
        return ExtensionOutcome::failure(ExtensionFailure::insufficient_moments);

    const auto nu = modified_moments(f, mu, 2 * p + 1);
    const auto size = static_cast<std::size_t>(p);
    RationalMatrix hankel(size, std::vector<Rational>(size));
    std::vector<Rational> rhs(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j)
            hankel[i][j] = nu[i + j];
        rhs[i] = -nu[i + size];
    }
    auto solution = solve(hankel, rhs);
    if (!solution)
        return ExtensionOutcome::failure(ExtensionFailure::no_solution);

    solution->push_back(Rational(1));
    return classify_extension(f, Polynomial(std::move(*solution)), domain);
}

std::pair<int, ExtensionOutcome> auto_extend(const Polynomial& f, const MomentSequence& mu, const Interval& domain,
                                             const std::vector<int>& p_candidates)
{
    if (p_candidates.empty())
        throw std::invalid_argument("auto_extend needs at least one candidate p");
    std::optional<std::pair<int, ExtensionOutcome>> last;
    for (int p : p_candidates) {
        auto outcome = extend(f, p, mu, domain);
        if (outcome.succeeded())
            return {p, std::move(outcome)};
        last.emplace(p, std::move(outcome));
    }
    return std::move(*last);
}

ExtensionSchedule ExtensionSchedule::fixed(std::vector<int> values)
{
    if (values.empty())
        throw std::invalid_argument("extension schedule is empty");
    for (int p : values)
        if (p < 1)
            throw std::invalid_argument("every p in the schedule must be >= 1, got " + std::to_string(p));
    ExtensionSchedule s;
    s.values_ = std::move(values);
    return s;
}

ExtensionSchedule ExtensionSchedule::successor(int iterations)
{
    if (iterations < 1)
        throw std::invalid_argument("successor schedule needs at least one iteration");
    ExtensionSchedule s;
    s.successor_ = true;
    s.iterations_ = iterations;
    return s;
}

int ExtensionSchedule::p_at(std::size_t step, int current_degree) const
{
    if (step >= steps())
        throw std::out_of_range("schedule step out of range");
    return successor_ ? current_degree + 1 : values_[step];
}

int ExtensionSchedule::required_max_index(int start_degree) const
{
    int n = start_degree;
    int needed = 0;
    for (std::size_t i = 0; i < steps(); ++i) {
        const int p = p_at(i, n);
        needed = std::max(needed, n + 2 * p);
        n += p;
    }
    return needed;
}

int ExtensionSchedule::final_degree(int start_degree) const
{
    int n = start_degree;
    for (std::size_t i = 0; i < steps(); ++i)
        n += p_at(i, n);
    return n;
}

std::vector<ChainStep> generate_chain(const Polynomial& start, const ExtensionSchedule& schedule,
                                      const MomentSequence& mu, const Interval& domain)
{
    std::vector<ChainStep> steps;
    Polynomial f = start;
    for (std::size_t i = 0; i < schedule.steps(); ++i) {
        const int p = schedule.p_at(i, f.degree());
        ExtensionOutcome outcome = extend(f, p, mu, domain);
        const bool ok = outcome.succeeded();
        if (ok)
            f = f * outcome.extension();
        steps.push_back({p, f, std::move(outcome)});
        if (!ok)
            break;
    }
    return steps;
}

// --- floating-point route --------------------------------------------------

namespace {

Real tolerance(unsigned digits10, unsigned divisor)
{
    return pow(Real(10), -static_cast<int>(digits10 / divisor));
}

bool within(const Real& a, const Real& b, const Real& tol)
{
    return abs(a - b) <= tol * (1 + abs(a));
}

std::optional<std::vector<Real>> solve_dense(std::vector<std::vector<Real>> a, std::vector<Real> b,
                                             const Real& singular_tol)
{
    const std::size_t n = a.size();
    Real scale = 0;
    for (const auto& row : a)
        for (const auto& x : row)
            scale = std::max<Real>(scale, abs(x));
    if (scale == 0)
        return std::nullopt;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t i = k + 1; i < n; ++i)
            if (abs(a[i][k]) > abs(a[piv][k]))
                piv = i;
        if (abs(a[piv][k]) <= singular_tol * scale)
            return std::nullopt;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (std::size_t i = k + 1; i < n; ++i) {
            const Real factor = a[i][k] / a[k][k];
            for (std::size_t j = k; j < n; ++j)
                a[i][j] -= factor * a[k][j];
            b[i] -= factor * b[k];
        }
    }
    std::vector<Real> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Real acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

bool in_domain(const Real& x, const Interval& domain, const Real& tol, unsigned digits10)
{
    const Real slack = tol * (1 + abs(x));
    if (domain.lower() && x < to_real(*domain.lower(), digits10) - slack)
        return false;
    if (domain.upper() && x > to_real(*domain.upper(), digits10) + slack)
        return false;
    return true;
}

} // namespace

NumericExtensionOutcome extend_numeric(const RealPolynomial& f, int p, const MomentSequence& mu,
                                       const Interval& domain, unsigned digits10)
{
    if (p < 1)
        throw std::invalid_argument("extension needs p >= 1, got " + std::to_string(p));
    if (f.is_zero())
        throw std::invalid_argument("cannot extend the zero polynomial");
    NumericExtensionOutcome out;
    if (mu.max_index() < f.degree() + 2 * p) {
        out.failure = ExtensionFailure::insufficient_moments;
        return out;
    }

    PrecisionScope scope(digits10);
    const int n = f.degree();
    const auto moments = mu.real_moments(n + 2 * p + 1, digits10);
    std::vector<Real> nu;
    for (int m = 0; m <= 2 * p; ++m) {
        Real acc = 0;
        for (int k = 0; k <= n; ++k)
            acc += f.coefficients()[static_cast<std::size_t>(k)] * moments[static_cast<std::size_t>(k + m)];
        nu.push_back(acc);
    }

    const auto size = static_cast<std::size_t>(p);
    std::vector<std::vector<Real>> hankel(size, std::vector<Real>(size));
    std::vector<Real> rhs(size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j)
            hankel[i][j] = nu[i + j];
        rhs[i] = -nu[i + size];
    }
    auto solution = solve_dense(std::move(hankel), std::move(rhs), tolerance(digits10, 2));
    if (!solution) {
        out.failure = ExtensionFailure::no_solution;
        return out;
    }
    solution->push_back(Real(1));
    RealPolynomial g(std::move(*solution));
    out.candidate = g;

    const Real tol = tolerance(digits10, 4);
    const auto g_roots = polynomial_roots(g, digits10);
    std::vector<Real> real_parts;
    for (const auto& r : g_roots)
        if (abs(r.im) <= tol * (1 + abs(r.re)) && in_domain(r.re, domain, tol, digits10))
            real_parts.push_back(r.re);
    if (static_cast<int>(real_parts.size()) != p) {
        out.failure = ExtensionFailure::complex_or_outside_roots;
        return out;
    }

    if (n >= 1) {
        for (const auto& fr : polynomial_roots(f, digits10)) {
            for (const auto& gr : real_parts) {
                if (abs(fr.im) <= tol * (1 + abs(fr.re)) && within(gr, fr.re, tol)) {
                    out.failure = ExtensionFailure::shared_roots;
                    return out;
                }
            }
        }
    }

    std::sort(real_parts.begin(), real_parts.end());
    for (std::size_t i = 1; i < real_parts.size(); ++i) {
        if (within(real_parts[i - 1], real_parts[i], tol)) {
            out.failure = ExtensionFailure::repeated_roots;
            return out;
        }
    }
    out.extension = std::move(g);
    return out;
}

std::pair<int, NumericExtensionOutcome> auto_extend_numeric(const RealPolynomial& f, const MomentSequence& mu,
                                                            const Interval& domain,
                                                            const std::vector<int>& p_candidates, unsigned digits10)
{
    if (p_candidates.empty())
        throw std::invalid_argument("auto_extend needs at least one candidate p");
    std::pair<int, NumericExtensionOutcome> last;
    for (int p : p_candidates) {
        auto outcome = extend_numeric(f, p, mu, domain, digits10);
        if (outcome.succeeded())
            return {p, std::move(outcome)};
        last = {p, std::move(outcome)};
    }
    return last;
}

std::vector<NumericChainStep> generate_chain_numeric(const RealPolynomial& start, const ExtensionSchedule& schedule,
                                                     const MomentSequence& mu, const Interval& domain,
                                                     unsigned digits10)
{
    std::vector<NumericChainStep> steps;
    RealPolynomial f = start;
    for (std::size_t i = 0; i < schedule.steps(); ++i) {
        const int p = schedule.p_at(i, f.degree());
        auto outcome = extend_numeric(f, p, mu, domain, digits10);
        const bool ok = outcome.succeeded();
        if (ok) {
            PrecisionScope scope(digits10);
            f = f * *outcome.extension;
        }
        steps.push_back({p, f, std::move(outcome)});
        if (!ok)
            break;
    }
    return steps;
}

} // namespace nestquad
