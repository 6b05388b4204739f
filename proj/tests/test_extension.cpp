#include "doctest.h"

#include <algorithm>
#include <random>

#include "nestquad/extension.hpp"
#include "nestquad/exact_linear.hpp"
#include "nestquad/sturm.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const Interval unit = Interval::closed(0, 1);
const Interval sym = Interval::closed(-1, 1);

// sum_k coeffs(F G t^i)_k mu_k
Rational residual(const Polynomial& fg, int i, const MomentSequence& mu)
{
    Rational s(0);
    for (int k = 0; k <= fg.degree(); ++k)
        s += fg[static_cast<std::size_t>(k)] * mu.exact_moment(k + i);
    return s;
}

} // namespace

TEST_CASE("modified moments")
{
    const auto mu = arcsine_moments(10);
    CHECK(modified_moments(Polynomial{Rational(1)}, mu, 3) == std::vector<Rational>{1, q("1/2"), q("3/8")});
    CHECK(modified_moments(poly({"-1/2", "1"}), mu, 1) == std::vector<Rational>{0});
    CHECK(modified_moments(poly({"0", "1"}), uniform_moments(4), 2) == std::vector<Rational>{0, q("1/3")});
    CHECK_THROWS(modified_moments(poly({"0", "1"}), uniform_moments(4), 5));
}

TEST_CASE("extend examples")
{
    const auto beta = arcsine_moments(20);
    auto a = extend(Polynomial{Rational(1)}, 1, beta, unit);
    REQUIRE(a.succeeded());
    CHECK(a.extension() == poly({"-1/2", "1"}));

    auto b = extend(poly({"-1/2", "1"}), 2, beta, unit);
    REQUIRE(b.succeeded());
    CHECK(b.extension() == poly({"1/16", "-1", "1"}));
    CHECK(b.certificate()->roots_in_domain == 2);
    CHECK(b.certificate()->resultant == q("-3/16"));
    CHECK(b.certificate()->discriminant == q("3/4"));

    auto c = extend(poly({"0", "1"}), 2, uniform_moments(10), sym);
    REQUIRE(c.succeeded());
    CHECK(c.extension() == poly({"-3/5", "0", "1"}));
}

TEST_CASE("extend from t with p = 1 on uniform(-1,1) has no monic solution")
{
    // nu_0 = mu_1 = 0 and nu_1 = mu_2 = 1/3: the system 0 * g0 = -1/3 is inconsistent
    const auto nu = modified_moments(poly({"0", "1"}), uniform_moments(4), 2);
    CHECK(nu[0] == Rational(0));
    CHECK(nu[1] == q("1/3"));
    const auto out = extend(poly({"0", "1"}), 1, uniform_moments(4), sym);
    REQUIRE_FALSE(out.succeeded());
    CHECK(out.failure_reason() == ExtensionFailure::no_solution);
}

TEST_CASE("auto_extend")
{
    auto [p, out] = auto_extend(poly({"0", "1"}), uniform_moments(10), sym, {1, 2, 3});
    CHECK(p == 2);
    REQUIRE(out.succeeded());
    CHECK(out.extension() == poly({"-3/5", "0", "1"}));

    auto [p1, out1] = auto_extend(Polynomial{Rational(1)}, arcsine_moments(4), unit, {1});
    CHECK(p1 == 1);
    CHECK(out1.extension() == poly({"-1/2", "1"}));

    CHECK_THROWS_AS(auto_extend(Polynomial{Rational(1)}, arcsine_moments(4), unit, {}), std::invalid_argument);
}

TEST_CASE("extend preconditions")
{
    CHECK_THROWS_AS(extend(Polynomial{Rational(1)}, 0, arcsine_moments(4), unit), std::invalid_argument);
    CHECK_THROWS_AS(extend(Polynomial{}, 1, arcsine_moments(4), unit), std::invalid_argument);
    auto short_mu = extend(poly({"-1/2", "1"}), 2, arcsine_moments(4), unit);
    REQUIRE_FALSE(short_mu.succeeded());
    CHECK(short_mu.failure_reason() == ExtensionFailure::insufficient_moments);
    CHECK(extend(poly({"-1/2", "1"}), 2, arcsine_moments(5), unit).succeeded());
}

TEST_CASE("failure classification")
{
    // shared root: G = t^2 - t against F = t
    auto shared = classify_extension(poly({"0", "1"}), poly({"0", "-1", "1"}), sym);
    CHECK(shared.failure_reason() == ExtensionFailure::shared_roots);
    // repeated root inside the domain
    auto rep = classify_extension(Polynomial{Rational(1)}, poly({"1/4", "-1", "1"}), unit);
    CHECK(rep.failure_reason() == ExtensionFailure::repeated_roots);
    // complex roots
    auto cx = classify_extension(Polynomial{Rational(1)}, poly({"1", "0", "1"}), sym);
    CHECK(cx.failure_reason() == ExtensionFailure::complex_or_outside_roots);
    // a root outside the domain
    auto out = classify_extension(Polynomial{Rational(1)}, x_minus(q("1/2")) * x_minus(Rational(2)), unit);
    CHECK(out.failure_reason() == ExtensionFailure::complex_or_outside_roots);
    // endpoints belong to the domain
    CHECK(classify_extension(Polynomial{Rational(1)}, poly({"0", "-1", "1"}), unit).succeeded());
    // the resultant is checked before the discriminant
    auto order = classify_extension(poly({"0", "1"}), poly({"0", "0", "1"}), sym);
    CHECK(order.failure_reason() == ExtensionFailure::shared_roots);

    // Hankel-singular moments: point masses 1/2 at 0 and 1
    std::vector<Rational> m{Rational(1)};
    for (int k = 1; k <= 8; ++k)
        m.push_back(q("1/2"));
    const auto two_point = MomentSequence::exact(unit, m);
    auto singular = extend(Polynomial{Rational(1)}, 3, two_point, unit);
    CHECK(singular.failure_reason() == ExtensionFailure::no_solution);
    CHECK(extend(Polynomial{Rational(1)}, 2, two_point, unit).extension() == poly({"0", "-1", "1"}));

    CHECK(parse_failure("SharedRoots") == ExtensionFailure::shared_roots);
    CHECK(to_string(ExtensionFailure::complex_or_outside_roots) == "ComplexOrOutsideRoots");
    CHECK_FALSE(parse_failure("bogus"));
}

TEST_CASE("property: classifier matches constructed root structure")
{
    std::mt19937 rng(314);
    const std::vector<Rational> pool{q("-3/2"), q("-1"), q("-1/3"), q("0"), q("1/4"), q("1/2"), q("1"), q("5/4")};
    const Polynomial f = x_minus(q("1/4")) * x_minus(q("-1/3"));
    std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1);
    std::uniform_int_distribution<int> size(1, 4);
    std::bernoulli_distribution complex_factor(0.2);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> roots;
        for (int i = size(rng); i > 0; --i)
            roots.push_back(pool[static_cast<std::size_t>(pick(rng))]);
        Polynomial g = Polynomial::from_roots(roots);
        const bool has_complex = complex_factor(rng);
        if (has_complex)
            g *= poly({"1", "0", "1"});

        const bool inside = !has_complex && std::all_of(roots.begin(), roots.end(), [](const Rational& r) {
            return sym.contains(r);
        });
        const bool shares = std::any_of(roots.begin(), roots.end(), [&](const Rational& r) { return f(r).is_zero(); });
        auto sorted = roots;
        std::sort(sorted.begin(), sorted.end());
        const bool repeats = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();

        const auto out = classify_extension(f, g, sym);
        const bool valid = inside && !shares && !repeats;
        CHECK(out.succeeded() == valid);
        if (!valid) {
            const auto expected = !inside ? ExtensionFailure::complex_or_outside_roots
                                : shares  ? ExtensionFailure::shared_roots
                                          : ExtensionFailure::repeated_roots;
            CHECK(out.failure_reason() == expected);
        }
        if (out.succeeded()) {
            CHECK(count_real_roots(g, sym) == g.degree());
            CHECK_FALSE(resultant(f, g).is_zero());
            CHECK_FALSE(discriminant(g).is_zero());
        }
    }
}

TEST_CASE("chain reproduces the displayed Beta(1/2,1/2) factors")
{
    const auto factors = arcsine_factors();
    const auto steps = generate_chain(Polynomial{Rational(1)}, ExtensionSchedule::fixed({1, 2, 4, 6, 12}),
                                      arcsine_moments(50), unit);
    REQUIRE(steps.size() == 5);
    Polynomial product{Rational(1)};
    for (std::size_t i = 0; i < 5; ++i) {
        REQUIRE(steps[i].outcome.succeeded());
        CHECK(steps[i].outcome.extension() == factors[i]);
        product *= factors[i];
        CHECK(steps[i].node_polynomial == product);
    }
    CHECK(product.degree() == 25);
    CHECK(factors[4][4] == q("19305/65536"));
    CHECK(factors[4][0] == q("1/8388608"));
}

TEST_CASE("chain from a mean node")
{
    const auto mu = MomentSequence::from_distribution(DistributionSpec::beta(2, 3), 4);
    const auto steps = generate_chain(Polynomial{Rational(1)}, ExtensionSchedule::fixed({1}), mu, unit);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].outcome.extension() == x_minus(q("2/5")));
}

TEST_CASE("GKP chain on uniform(-1,1)")
{
    const auto schedule = ExtensionSchedule::successor(4);
    CHECK(schedule.final_degree(1) == 31);
    CHECK(schedule.required_max_index(1) == 15 + 2 * 16);
    const auto steps = generate_chain(poly({"0", "1"}), schedule, uniform_moments(63), sym);
    REQUIRE(steps.size() == 4);
    std::vector<int> counts;
    for (const auto& s : steps) {
        REQUIRE(s.outcome.succeeded());
        counts.push_back(s.node_polynomial.degree());
    }
    CHECK(counts == std::vector<int>{3, 7, 15, 31});
    // 3-node level is the Gauss rule
    CHECK(steps[0].node_polynomial == poly({"0", "-3/5", "0", "1"}));
}

TEST_CASE("chain stops at the first failure")
{
    const auto steps = generate_chain(poly({"0", "1"}), ExtensionSchedule::fixed({1, 2}), uniform_moments(10), sym);
    REQUIRE(steps.size() == 1);
    CHECK_FALSE(steps[0].outcome.succeeded());
    CHECK_THROWS(ExtensionSchedule::fixed({1, 0}));
    CHECK_THROWS(ExtensionSchedule::fixed({}));
}

TEST_CASE("property: exact orthogonality residuals vanish")
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pp(1, 5);
    int successes = 0;
    for (const auto& spec : {DistributionSpec::uniform(-1, 1), DistributionSpec::beta(q("1/2"), q("1/2")),
                             DistributionSpec::beta(2, 3), DistributionSpec::gaussian()}) {
        const auto mu = MomentSequence::from_distribution(spec, 60);
        Polynomial f{Rational(1)};
        for (int step = 0; step < 5; ++step) {
            std::vector<int> candidates{pp(rng)};
            for (int p = 1; p <= 6; ++p)
                candidates.push_back(p);
            const auto [p, out] = auto_extend(f, mu, spec.domain(), candidates);
            if (!out.succeeded())
                break;
            ++successes;
            const Polynomial fg = f * out.extension();
            for (int i = 0; i < p; ++i)
                CHECK(residual(fg, i, mu).is_zero());
            f = fg;
        }
    }
    CHECK(successes >= 8);
}

TEST_CASE("float route agrees with the exact route")
{
    struct Case {
        Polynomial f;
        int p;
        MomentSequence mu;
        Interval domain;
    };
    std::vector<Case> cases{
        {Polynomial{Rational(1)}, 1, arcsine_moments(40), unit},
        {poly({"-1/2", "1"}), 2, arcsine_moments(40), unit},
        {poly({"0", "1"}), 1, uniform_moments(40), sym},
        {poly({"0", "1"}), 2, uniform_moments(40), sym},
        {poly({"0", "1"}), 1, gauss_moments(40), Interval::real_line()},
        {poly({"0", "1"}), 2, gauss_moments(40), Interval::real_line()},
        {poly({"0", "-3/5", "0", "1"}), 4, uniform_moments(40), sym},
        {poly({"0", "-3/5", "0", "1"}), 2, uniform_moments(40), sym},
    };
    for (const auto& c : cases) {
        const auto exact = extend(c.f, c.p, c.mu, c.domain);
        PrecisionScope scope(100);
        const auto numeric = extend_numeric(to_real(c.f, 100), c.p, c.mu, c.domain, 100);
        CHECK(exact.succeeded() == numeric.succeeded());
        if (exact.succeeded() && numeric.succeeded()) {
            const auto g = to_real(exact.extension(), 100);
            for (int k = 0; k <= c.p; ++k)
                CHECK(agree((*numeric.extension)[static_cast<std::size_t>(k)], g[static_cast<std::size_t>(k)], 60));
        } else if (!exact.succeeded() && !numeric.succeeded()) {
            CHECK(exact.failure_reason() == *numeric.failure);
        }
    }
}
