#include "doctest.h"

#include <cmath>
#include <vector>

#include "fracleib/errors.hpp"
#include "fracleib/fracops.hpp"
#include "fracleib/power_sum.hpp"
#include "fracleib/specfun.hpp"
#include "oracles.hpp"

using namespace fracleib;
namespace orc = oracles;

namespace {

const PowerSum kX = PowerSum::monomial(1.0, 1.0);
const PowerSum kX2 = PowerSum::monomial(1.0, 2.0);
const PowerSum kOne = PowerSum::constant(1.0);

std::vector<double> grid_points() { return geometric_grid(0.2, 5.0, 20); }

}  // namespace

TEST_CASE("half derivative of x has the closed form 2 sqrt(x/pi)") {
    const PowerSum d = rl_derivative(kX, 0.5);
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms()[0].exponent == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(d.terms()[0].coeff ==
          doctest::Approx(2.0 / orc::kSqrtPi).epsilon(1e-14));
    CHECK(d.eval(1.0) == doctest::Approx(2.0 / orc::kSqrtPi).epsilon(1e-14));
}

TEST_CASE("half derivative of a constant is c/sqrt(pi x)") {
    const PowerSum d = rl_derivative(PowerSum::constant(3.0), 0.5);
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms()[0].exponent == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(d.terms()[0].coeff ==
          doctest::Approx(3.0 / orc::kSqrtPi).epsilon(1e-14));
}

TEST_CASE("power rule coefficients match frozen Gamma ratios") {
    // D^0.3 x = Gamma(2) rgamma(1.7) x^0.7
    const PowerSum d03 = rl_derivative(kX, 0.3);
    REQUIRE(d03.terms().size() == 1);
    CHECK(d03.terms()[0].coeff ==
          doctest::Approx(orc::kInvGamma17).epsilon(1e-14));
    CHECK(d03.terms()[0].exponent == doctest::Approx(0.7).epsilon(1e-15));

    // D^1.5 x^2 = Gamma(3) rgamma(1.5) x^0.5
    const PowerSum d15 = rl_derivative(kX2, 1.5);
    REQUIRE(d15.terms().size() == 1);
    CHECK(d15.terms()[0].coeff ==
          doctest::Approx(2.0 * orc::kInvGamma15).epsilon(1e-14));
    CHECK(d15.terms()[0].exponent == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("rl derivative at alpha=1 reduces to the classical derivative") {
    const std::vector<PowerSum> corpus = {
        kOne,
        kX,
        kX2,
        PowerSum({{1.0, 0.0}, {-2.0, 1.0}, {0.5, 3.0}}),
        PowerSum::monomial(1.0, 0.5),
        PowerSum({{2.0, 1.5}, {1.0, 2.0}}),
    };
    for (const auto& f : corpus) {
        const PowerSum a1 = rl_derivative(f, 1.0);
        const PowerSum cls = classical_derivative(f);
        for (double x : grid_points()) {
            CHECK(orc::floor_rel_err(a1.eval(x), cls.eval(x)) <= 1e-13);
        }
    }
}

TEST_CASE("rl derivative of x^2 at alpha=1 is 2x termwise") {
    const PowerSum d = rl_derivative(kX2, 1.0);
    REQUIRE(d.terms().size() == 1);
    CHECK(d.terms()[0].coeff == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(d.terms()[0].exponent == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("rl derivative annihilates x^(alpha-1)") {
    const PowerSum f = PowerSum::monomial(1.0, 0.5);
    const PowerSum d = rl_derivative(f, 1.5);
    CHECK(d.is_zero());
}

TEST_CASE("rl integral of a constant") {
    // I^0.5 1 = 2 sqrt(x/pi)
    const PowerSum i = rl_integral(kOne, 0.5);
    REQUIRE(i.terms().size() == 1);
    CHECK(i.terms()[0].exponent == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(i.terms()[0].coeff ==
          doctest::Approx(2.0 / orc::kSqrtPi).epsilon(1e-14));

    // I^1 x = x^2/2
    const PowerSum i1 = rl_integral(kX, 1.0);
    REQUIRE(i1.terms().size() == 1);
    CHECK(i1.terms()[0].coeff == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(i1.terms()[0].exponent == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("integral semigroup: I^a I^b = I^(a+b)") {
    const double orders[] = {0.3, 0.5, 1.0};
    const std::vector<PowerSum> corpus = {kOne, kX, kX2,
                                          PowerSum::monomial(1.0, 0.5)};
    for (double a : orders) {
        for (double b : orders) {
            for (const auto& f : corpus) {
                const PowerSum lhs = rl_integral(rl_integral(f, b), a);
                const PowerSum rhs = rl_integral(f, a + b);
                for (double x : grid_points()) {
                    CAPTURE(a);
                    CAPTURE(b);
                    CAPTURE(x);
                    CHECK(orc::floor_rel_err(lhs.eval(x), rhs.eval(x)) <=
                          1e-11);
                }
            }
        }
    }
}

TEST_CASE("derivative is a left inverse of the integral") {
    const double orders[] = {0.3, 0.5, 1.5};
    const std::vector<PowerSum> corpus = {kOne, kX, kX2,
                                          PowerSum({{1.0, 0.0}, {2.0, 2.0}})};
    for (double a : orders) {
        for (const auto& f : corpus) {
            const PowerSum back = rl_derivative(rl_integral(f, a), a);
            for (double x : grid_points()) {
                CAPTURE(a);
                CAPTURE(x);
                CHECK(orc::floor_rel_err(back.eval(x), f.eval(x)) <= 1e-11);
            }
        }
    }
}

TEST_CASE("frac_diffint dispatches by sign") {
    const PowerSum d = frac_diffint(kX, 0.5);
    const PowerSum dref = rl_derivative(kX, 0.5);
    CHECK(d == dref);

    const PowerSum i = frac_diffint(kX, -0.5);
    const PowerSum iref = rl_integral(kX, 0.5);
    CHECK(i == iref);

    const PowerSum same = frac_diffint(kX2, 0.0);
    CHECK(same == kX2);
}

TEST_CASE("operator order validation") {
    CHECK_THROWS_AS(rl_derivative(kX, 0.0), DomainError);
    CHECK_THROWS_AS(rl_derivative(kX, 2.0), DomainError);
    CHECK_THROWS_AS(rl_derivative(kX, -0.5), DomainError);
    CHECK_THROWS_AS(rl_integral(kX, 0.0), DomainError);
    CHECK_THROWS_AS(rl_integral(kX, -1.0), DomainError);
}

TEST_CASE("exponent validation names the offending term") {
    const PowerSum bad = PowerSum::monomial(2.0, -1.5);
    CHECK_THROWS_AS(rl_derivative(bad, 0.5), DomainError);
    try {
        rl_derivative(bad, 0.5);
    } catch (const DomainError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("-1.5") != std::string::npos);
    }
}

TEST_CASE("caputo annihilates constants and matches rl on pure powers") {
    CHECK(caputo_derivative(PowerSum::constant(5.0), 0.5).is_zero());

    const PowerSum c = caputo_derivative(kX, 0.5);
    const PowerSum r = rl_derivative(kX, 0.5);
    CHECK(c == r);

    // On 3 + x the constant drops, leaving the rl derivative of x alone.
    const PowerSum mixed = caputo_derivative(
        PowerSum({{3.0, 0.0}, {1.0, 1.0}}), 0.5);
    CHECK(mixed == r);
}

TEST_CASE("caputo validation") {
    CHECK_THROWS_AS(caputo_derivative(kX, 0.0), DomainError);
    CHECK_THROWS_AS(caputo_derivative(kX, 1.5), DomainError);
    CHECK_THROWS_AS(
        caputo_derivative(PowerSum::monomial(1.0, -0.5), 0.5), DomainError);
}

TEST_CASE("caputo at alpha=1 matches the classical derivative") {
    const PowerSum f({{4.0, 0.0}, {-1.0, 1.0}, {2.0, 3.0}});
    const PowerSum c = caputo_derivative(f, 1.0);
    const PowerSum cls = classical_derivative(f);
    for (double x : grid_points()) {
        CHECK(orc::floor_rel_err(c.eval(x), cls.eval(x)) <= 1e-13);
    }
}

TEST_CASE("fractional operators are linear") {
    const PowerSum f = kX2;
    const PowerSum g = PowerSum::monomial(1.0, 0.5);
    const PowerSum combo = add(scale(2.0, f), scale(-3.0, g));
    const double alphas[] = {0.3, 0.5, 1.5};
    for (double a : alphas) {
        const PowerSum lhs = rl_derivative(combo, a);
        const PowerSum rhs = add(scale(2.0, rl_derivative(f, a)),
                                 scale(-3.0, rl_derivative(g, a)));
        for (double x : grid_points()) {
            CAPTURE(a);
            CHECK(std::fabs(lhs.eval(x) - rhs.eval(x)) <=
                  1e-12 * std::max(1.0, std::fabs(rhs.eval(x))));
        }
    }
}

TEST_CASE("gl derivative at alpha=1 differentiates x exactly on the grid") {
    const GridFunction g = sample(kX, 0.125, 17);
    const GridFunction d = gl_derivative(g, 1.0);
    REQUIRE(d.values.size() == g.values.size());
    for (std::size_t n = 1; n < d.values.size(); ++n) {
        CHECK(d.values[n] == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("gl weights match signed binomial coefficients") {
    // A unit impulse at the origin turns the convolution into a direct
    // readout of the weight sequence.
    const double h = 1.0;
    std::vector<double> vals(66, 0.0);
    vals[0] = 1.0;
    const GridFunction impulse(h, vals);
    const double alphas[] = {0.3, 0.5, 1.0, 1.5};
    for (double a : alphas) {
        const GridFunction d = gl_derivative(impulse, a);
        for (int k = 0; k <= 64; ++k) {
            const double want =
                (k % 2 == 0 ? 1.0 : -1.0) * gen_binom(a, k);
            CAPTURE(a);
            CAPTURE(k);
            CHECK(std::fabs(d.values[static_cast<std::size_t>(k)] - want) <=
                  1e-12 * std::max(1.0, std::fabs(want)));
        }
    }
}

TEST_CASE("gl derivative approximates the rl derivative of a constant") {
    const double h = 1e-3;
    const std::size_t n = 1002;
    const GridFunction g = sample(kOne, h, n);
    const GridFunction d = gl_derivative(g, 0.5);
    const double exact = rl_derivative(kOne, 0.5).eval(1.0);
    const double got = d.value_at(1.0);
    CHECK(std::fabs(got - exact) <= 1e-3);
}

TEST_CASE("gl derivative scales as h^(-alpha) and validates input") {
    const GridFunction g = sample(kOne, 0.5, 5);
    CHECK_THROWS_AS(gl_derivative(g, 0.0), DomainError);
    CHECK_THROWS_AS(gl_derivative(g, 2.0), DomainError);

    const GridFunction d = gl_derivative(g, 0.5);
    CHECK(d.values[0] == doctest::Approx(std::pow(0.5, -0.5)).epsilon(1e-13));
    CHECK(d.h == g.h);
    CHECK(d.origin_clamped == g.origin_clamped);
}
