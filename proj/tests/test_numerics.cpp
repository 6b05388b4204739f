#include "doctest.h"

#include "nestquad/extension.hpp"
#include "nestquad/numerics.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const Interval unit = Interval::closed(0, 1);
const Interval sym = Interval::closed(-1, 1);

Polynomial arcsine_product(std::size_t levels)
{
    Polynomial f{Rational(1)};
    const auto factors = arcsine_factors();
    for (std::size_t i = 0; i < levels; ++i)
        f *= factors[i];
    return f;
}

} // namespace

TEST_CASE("real roots of rational polynomials")
{
    PrecisionScope scope(80);
    const auto lin = real_roots(poly({"-1/2", "1"}), unit, 30);
    REQUIRE(lin.size() == 1);
    CHECK(lin[0].exact == q("1/2"));
    CHECK(lin[0].value == Real(0.5));

    const auto two = real_roots(poly({"1/16", "-1", "1"}), unit, 50);
    REQUIRE(two.size() == 2);
    CHECK(agree(two[0].value, parse_real(arcsine_table()[4].node, 60), 49));
    CHECK(agree(two[1].value, parse_real(arcsine_table()[20].node, 60), 49));

    const auto pm = real_roots(poly({"-3/5", "0", "1"}), sym, 30);
    REQUIRE(pm.size() == 2);
    const Real s = sqrt(to_real(q("3/5"), 60));
    CHECK(agree(pm[0].value, -s, 30));
    CHECK(agree(pm[1].value, s, 30));
    CHECK(format_real(round_to(pm[1].value, 15), 15) == "0.774596669241483");

    CHECK_THROWS_AS(real_roots(poly({"1", "0", "1"}), sym, 30), std::domain_error);
    CHECK_THROWS_AS(real_roots(poly({"-4", "0", "1"}), sym, 30), std::domain_error);
}

TEST_CASE("property: refined roots are bracketed by an exact sign change")
{
    const Polynomial f = arcsine_product(5);
    for (unsigned digits : {20u, 50u, 80u}) {
        const auto roots = real_roots(f, unit, digits);
        REQUIRE(roots.size() == 25);
        for (const auto& r : roots) {
            if (r.exact) {
                CHECK(f(*r.exact).is_zero());
                continue;
            }
            // one unit in the last requested digit on either side
            PrecisionScope scope(digits + 20);
            const Real step = abs(r.value) * pow(Real(10), -static_cast<int>(digits));
            const Rational lo = to_rational(Real(r.value - step));
            const Rational hi = to_rational(Real(r.value + step));
            CHECK(f(lo).sign() * f(hi).sign() < 0);
        }
    }
}

TEST_CASE("weights")
{
    PrecisionScope scope(120);
    const auto one = solve_weights(std::vector<Rational>{q("1/2")}, arcsine_moments(2));
    CHECK(one == std::vector<Rational>{1});

    const Real s = sqrt(to_real(q("3/5"), 120));
    const auto gl = solve_weights(std::vector<Real>{-s, Real(0), s}, uniform_moments(4), 100);
    CHECK(agree(gl[0], to_real(q("5/18"), 120), 90));
    CHECK(agree(gl[1], to_real(q("4/9"), 120), 90));
    CHECK(agree(gl[2], to_real(q("5/18"), 120), 90));

    const Real d = sqrt(to_real(q("3/16"), 120));
    const auto cheb = solve_weights(std::vector<Real>{Real(0.5) - d, Real(0.5), Real(0.5) + d}, arcsine_moments(4), 100);
    for (const auto& w : cheb)
        CHECK(agree(w, to_real(q("1/3"), 120), 90));

    // exact weights on rational nodes against a hand-solved 3x3 system:
    // nodes 0, 1/2, 1 on uniform [0,1] give Simpson's 1/6, 2/3, 1/6
    const auto simpson = solve_weights(std::vector<Rational>{0, q("1/2"), 1},
                                       MomentSequence::from_distribution(DistributionSpec::uniform(0, 1), 4));
    CHECK(simpson == std::vector<Rational>{q("1/6"), q("2/3"), q("1/6")});
}

TEST_CASE("property: Björck-Pereyra matches exact Vandermonde solves")
{
    const auto mu = MomentSequence::from_distribution(DistributionSpec::beta(2, 3), 30);
    std::vector<Rational> nodes;
    for (int k = 0; k < 12; ++k)
        nodes.push_back(Rational(mpz_class(2 * k + 1), mpz_class(25)));
    const auto exact = solve_weights(nodes, mu);
    PrecisionScope scope(140);
    std::vector<Real> real_nodes;
    for (const auto& x : nodes)
        real_nodes.push_back(to_real(x, 140));
    const auto approx = solve_weights(real_nodes, mu, 120);
    for (std::size_t k = 0; k < nodes.size(); ++k)
        CHECK(agree(approx[k], to_real(exact[k], 140), 100));
}

TEST_CASE("degree of exactness")
{
    const auto uni = uniform_moments(12);
    const auto gauss3 = build_formula(poly({"0", "-3/5", "0", "1"}), uni, sym, 50);
    CHECK(degree_of_exactness(gauss3, uni, 8) == 5);
    CHECK(degree_of_exactness(gauss3, uni, 3) == 3);

    const auto mid = build_formula(poly({"0", "1"}), uni, sym, 50);
    CHECK(degree_of_exactness(mid, uni, 4) == 1);

    const auto beta = arcsine_moments(12);
    const auto half = build_formula(poly({"-1/2", "1"}), beta, unit, 50);
    CHECK(half.nodes.size() == 1);
    CHECK(half.weights[0] == Real(1));
    REQUIRE(half.exact_weights);
    CHECK((*half.exact_weights)[0] == Rational(1));
    CHECK(degree_of_exactness(half, beta, 4) == 1);
}

TEST_CASE("formula on the 3-node arcsine polynomial")
{
    const auto mu = arcsine_moments(20);
    const auto f = build_formula(arcsine_product(2), mu, unit, 50);
    REQUIRE(f.size() == 3);
    PrecisionScope scope(60);
    for (const auto& w : f.weights)
        CHECK(agree(w, to_real(q("1/3"), 60), 45));
    CHECK(f.verified_degree == 5);
}

TEST_CASE("degree-25 formula reproduces the table")
{
    const auto mu = arcsine_moments(60);
    const auto f = build_formula(arcsine_product(5), mu, unit, 50);
    REQUIRE(f.size() == 25);
    PrecisionScope scope(60);
    for (std::size_t k = 0; k < 25; ++k)
        CHECK(agree(f.nodes[k], parse_real(arcsine_table()[k].node, 60), 45));
    CHECK(*f.verified_degree >= 24 + 23);
    Real total = 0;
    for (const auto& w : f.weights)
        total += w;
    CHECK(agree(total, Real(1), 45));
}

TEST_CASE("property: formulas reproduce moments, sum to one and are symmetric")
{
    for (int which = 0; which < 2; ++which) {
        const Interval domain = which == 0 ? sym : unit;
        const auto mu = which == 0 ? uniform_moments(80) : arcsine_moments(80);
        const Polynomial start = which == 0 ? poly({"0", "1"}) : Polynomial{Rational(1)};
        const auto schedule = which == 0 ? ExtensionSchedule::successor(4) : ExtensionSchedule::fixed({1, 2, 4, 6, 12});
        const auto steps = generate_chain(start, schedule, mu, domain);
        std::vector<QuadratureFormula> formulas;
        for (const auto& s : steps) {
            REQUIRE(s.outcome.succeeded());
            const auto f = build_formula(s.node_polynomial, mu, domain, 50);
            const int k = static_cast<int>(f.size());
            CHECK(degree_of_exactness(f, mu, k - 1) == k - 1);
            PrecisionScope scope(60);
            Real total = 0;
            for (const auto& w : f.weights)
                total += w;
            CHECK(agree(total, Real(1), 45));
            const Real mirror = which == 0 ? Real(0) : Real(1);
            for (int i = 0; i < k; ++i) {
                const auto j = static_cast<std::size_t>(k - 1 - i);
                const auto ii = static_cast<std::size_t>(i);
                CHECK(abs(f.nodes[ii] + f.nodes[j] - mirror) < pow(Real(10), -45));
                CHECK(agree(f.weights[ii], f.weights[j], 40));
            }
            formulas.push_back(f);
        }
        std::vector<Polynomial> polys;
        for (const auto& s : steps)
            polys.push_back(s.node_polynomial);
        CHECK(polynomials_nested(polys));
        const auto rule = assemble_nested_rule(formulas);
        CHECK(rule.first_level.back().size() == formulas.back().size());
    }
}

TEST_CASE("nested rule first levels match the table index column")
{
    const auto mu = arcsine_moments(60);
    std::vector<QuadratureFormula> formulas;
    for (std::size_t i = 1; i <= 5; ++i)
        formulas.push_back(build_formula(arcsine_product(i), mu, unit, 50));
    const auto rule = assemble_nested_rule(formulas);
    for (std::size_t k = 0; k < 25; ++k)
        CHECK(rule.first_level[4][k] == arcsine_table()[k].index);
    CHECK_FALSE(polynomials_nested({arcsine_product(2), poly({"-1/3", "1"})}));
    std::vector<QuadratureFormula> broken{formulas[1], build_formula(poly({"-1/3", "1"}) * arcsine_product(1), mu, unit, 50)};
    CHECK_THROWS(assemble_nested_rule(broken));
}

TEST_CASE("formulas from approximate moments")
{
    std::vector<std::string> text;
    PrecisionScope scope(60);
    for (int k = 0; k <= 12; ++k)
        text.push_back(format_real(to_real(moment(DistributionSpec::uniform(-1, 1), k), 40), 40));
    const auto mu = MomentSequence::approximate(sym, text, 40);
    const auto f = build_formula(to_real(poly({"0", "-3/5", "0", "1"}), 60), mu, sym, 50);
    CHECK(f.precision == 40);
    REQUIRE(f.size() == 3);
    CHECK(agree(f.weights[1], to_real(q("4/9"), 60), 35));
    CHECK(f.verified_degree == 5);
}
