#include "doctest.h"

#include "nestquad/exact_linear.hpp"
#include "support.hpp"

using namespace testing;

namespace {

Rational binomial(int n, int k)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r, mpz_class(1));
}

} // namespace

TEST_CASE("moment examples")
{
    const auto arcsine = DistributionSpec::beta(q("1/2"), q("1/2"));
    CHECK(moment(arcsine, 1) == q("1/2"));
    CHECK(moment(arcsine, 2) == q("3/8"));
    CHECK(moment(DistributionSpec::uniform(-1, 1), 0) == Rational(1));
    CHECK(moment(DistributionSpec::gaussian(), 0) == Rational(1));
    CHECK(moment(DistributionSpec::uniform(-1, 1), 2) == q("1/3"));
    CHECK(moment(DistributionSpec::gaussian(), 4) == Rational(3));
    CHECK(moment(DistributionSpec::gaussian(), 6) == Rational(15));
    // (b^{k+1} - a^{k+1}) / ((k+1)(b-a)) on [1,3]
    CHECK(moment(DistributionSpec::uniform(1, 3), 2) == q("26/6"));
    // Beta(2,3): k=1 -> 2/5, k=2 -> 2*3/(5*6)
    CHECK(moment(DistributionSpec::beta(2, 3), 1) == q("2/5"));
    CHECK(moment(DistributionSpec::beta(2, 3), 2) == q("1/5"));
}

TEST_CASE("distribution text")
{
    CHECK(DistributionSpec::parse("beta:1/2,1/2") == DistributionSpec::beta(q("1/2"), q("1/2")));
    CHECK(DistributionSpec::parse("uniform:-1,1") == DistributionSpec::uniform(-1, 1));
    CHECK(DistributionSpec::parse("gauss") == DistributionSpec::gaussian());
    CHECK(DistributionSpec::parse(DistributionSpec::beta(2, 3).to_string()) == DistributionSpec::beta(2, 3));
    CHECK_THROWS(DistributionSpec::parse("beta:0,1"));
    CHECK_THROWS(DistributionSpec::parse("uniform:1,1"));
    CHECK_THROWS(DistributionSpec::parse("cauchy"));
    CHECK(DistributionSpec::gaussian().domain() == Interval::real_line());
    CHECK(DistributionSpec::beta(2, 3).domain() == Interval::closed(0, 1));
}

TEST_CASE("moments files")
{
    auto mu = parse_moments(R"({"domain": ["0", "1"], "moments": ["1", "1/2", "3/8"]})");
    CHECK(mu.is_exact());
    CHECK(mu.max_index() == 2);
    CHECK(mu.exact_moment(2) == q("3/8"));
    CHECK(mu.domain() == Interval::closed(0, 1));

    auto one = parse_moments(R"({"domain": ["-inf", "inf"], "moments": ["1"]})");
    CHECK(one.max_index() == 0);
    CHECK(one.domain() == Interval::real_line());

    CHECK_THROWS(parse_moments(R"({"domain": ["0", "1"], "moments": ["2", "1/2"]})"));
    CHECK_THROWS(parse_moments(R"({"domain": ["0", "1"], "moments": []})"));
    CHECK_THROWS(parse_moments(R"({"domain": ["1", "0"], "moments": ["1"]})"));
    CHECK_THROWS(parse_moments("not json"));

    auto approx = parse_moments(R"({"domain": ["0", "1"], "precision": 30, "moments": ["1", "0.5", "0.375"]})");
    CHECK_FALSE(approx.is_exact());
    CHECK(approx.precision() == 30);
    CHECK(approx.real_moment(2, 30) == parse_real("0.375", 30));
    CHECK_THROWS(approx.exact_moment(1));

    const auto round = parse_moments(moments_to_json(arcsine_moments(10)));
    CHECK(round.is_exact());
    for (int k = 0; k <= 10; ++k)
        CHECK(round.exact_moment(k) == arcsine_moments(10).exact_moment(k));
}

TEST_CASE("property: arcsine moments are central binomials")
{
    const auto mu = arcsine_moments(20);
    for (int k = 0; k <= 20; ++k)
        CHECK(mu.exact_moment(k) == binomial(2 * k, k) / pow(Rational(4), static_cast<unsigned>(k)));
}

TEST_CASE("property: symmetric families have vanishing odd moments")
{
    for (const auto& mu : {uniform_moments(61), gauss_moments(61),
                           MomentSequence::from_distribution(DistributionSpec::uniform(q("-7/3"), q("7/3")), 61)})
        for (int k = 1; k <= 61; k += 2)
            CHECK(mu.exact_moment(k).is_zero());
}

TEST_CASE("property: Hankel moment matrices are positive definite")
{
    for (const auto& spec : {DistributionSpec::uniform(-1, 1), DistributionSpec::beta(q("1/2"), q("1/2")),
                             DistributionSpec::beta(2, 3), DistributionSpec::gaussian(),
                             DistributionSpec::uniform(q("1/3"), 4)}) {
        const auto mu = MomentSequence::from_distribution(spec, 100);
        CHECK(mu.hankel_positive());
        RationalMatrix h(51, std::vector<Rational>(51));
        for (int i = 0; i <= 50; ++i)
            for (int j = 0; j <= 50; ++j)
                h[i][j] = mu.exact_moment(i + j);
        for (const auto& minor : leading_principal_minors(h))
            CHECK(minor.sign() > 0);
    }
    // two point masses: the 3x3 Hankel matrix is singular
    std::vector<Rational> m{Rational(1)};
    for (int k = 1; k <= 6; ++k)
        m.push_back(q("1/2"));
    CHECK_FALSE(MomentSequence::exact(Interval::closed(0, 1), m).hankel_positive());
}
