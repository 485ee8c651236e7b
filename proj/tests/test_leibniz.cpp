#include "doctest.h"

#include <cmath>
#include <vector>

#include "fracleib/errors.hpp"
#include "fracleib/fracops.hpp"
#include "fracleib/leibniz.hpp"
#include "fracleib/operator_spec.hpp"
#include "fracleib/power_sum.hpp"
#include "fracleib/specfun.hpp"
#include "oracles.hpp"

using namespace fracleib;
namespace orc = oracles;

namespace {

const PowerSum kX = PowerSum::monomial(1.0, 1.0);
const PowerSum kX2 = PowerSum::monomial(1.0, 2.0);
const PowerSum kOne = PowerSum::constant(1.0);

}  // namespace

TEST_CASE("series for f=g=x at alpha=0.5 terminates at K=1") {
    const auto ev = leibniz_series(kX, kX, 0.5, 1);
    CHECK(ev.alpha == 0.5);
    CHECK(ev.K == 1);
    CHECK(ev.terminated);
    REQUIRE(ev.terms.size() == 2);

    // term 0: C(0.5,0) D^0.5(x) * x, term 1: C(0.5,1) D^-0.5(x) * 1.
    const PowerSum t0 = multiply(frac_diffint(kX, 0.5), kX);
    const PowerSum t1 = scale(0.5, frac_diffint(kX, -0.5));
    CHECK(ev.terms[0] == t0);
    CHECK(ev.terms[1] == t1);

    // Summed: D^0.5(x^2) = 2 rgamma(2.5) x^1.5.
    REQUIRE(ev.partial.terms().size() == 1);
    CHECK(ev.partial.terms()[0].exponent ==
          doctest::Approx(1.5).epsilon(1e-15));
    CHECK(ev.partial.terms()[0].coeff ==
          doctest::Approx(orc::kTwoInvGamma25).epsilon(1e-14));
    CHECK(ev.partial.eval(1.0) ==
          doctest::Approx(1.5045055561273501).epsilon(1e-14));

    const PowerSum direct = rl_derivative(multiply(kX, kX), 0.5);
    for (double x : geometric_grid(0.2, 5.0, 20)) {
        CHECK(orc::floor_rel_err(ev.partial.eval(x), direct.eval(x)) <= 1e-12);
    }
}

TEST_CASE("constant right factor collapses to a single surviving term") {
    const auto ev = leibniz_series(kX2, kOne, 0.5, 3);
    CHECK(ev.terminated);
    REQUIRE(ev.terms.size() == 4);
    CHECK(ev.terms[0] == rl_derivative(kX2, 0.5));
    CHECK(ev.terms[1].is_zero());
    CHECK(ev.terms[2].is_zero());
    CHECK(ev.terms[3].is_zero());
    CHECK(ev.partial == rl_derivative(kX2, 0.5));
}

TEST_CASE("alpha=1, K=1 reproduces the classical product rule") {
    const PowerSum f({{1.0, 1.0}, {2.0, 2.0}});
    const PowerSum g({{3.0, 0.0}, {1.0, 1.0}});
    const auto ev = leibniz_series(f, g, 1.0, 1);
    CHECK(ev.terminated);
    const PowerSum direct = classical_derivative(multiply(f, g));
    for (double x : geometric_grid(0.2, 5.0, 20)) {
        CHECK(orc::floor_rel_err(ev.partial.eval(x), direct.eval(x)) <= 1e-12);
    }
}

TEST_CASE("termination flag requires polynomial g within the cutoff") {
    CHECK(leibniz_series(kX, kX2, 0.5, 2).terminated);
    CHECK(!leibniz_series(kX, kX2, 0.5, 1).terminated);
    CHECK(!leibniz_series(kX, PowerSum::monomial(1.0, 0.5), 0.5, 12)
               .terminated);
}

TEST_CASE("series matches the direct derivative on polynomial pairs") {
    const std::vector<PowerSum> fs = {
        kOne, kX, kX2, PowerSum({{1.0, 0.0}, {1.0, 2.0}}),
        PowerSum({{2.0, 1.0}, {-1.0, 4.0}}),
    };
    const std::vector<PowerSum> gs = {
        kOne, kX, PowerSum({{1.0, 0.0}, {-2.0, 1.0}}), kX2,
        PowerSum({{1.0, 1.0}, {1.0, 3.0}}),
    };
    const double alphas[] = {0.3, 0.5, 1.5};
    const auto pts = geometric_grid(0.2, 5.0, 20);
    for (const auto& f : fs) {
        for (const auto& g : gs) {
            for (double a : alphas) {
                const int K = g.degree();
                const auto ev = leibniz_series(f, g, a, K);
                CHECK(ev.terminated);
                const PowerSum direct = rl_derivative(multiply(f, g), a);
                for (double x : pts) {
                    CAPTURE(a);
                    CAPTURE(x);
                    CHECK(orc::floor_rel_err(ev.partial.eval(x),
                                             direct.eval(x)) <= 1e-11);
                }
            }
        }
    }
}

TEST_CASE("order and truncation validation") {
    CHECK_THROWS_AS(leibniz_series(kX, kX, 0.0, 1), DomainError);
    CHECK_THROWS_AS(leibniz_series(kX, kX, 2.0, 1), DomainError);
    CHECK_THROWS_AS(leibniz_series(kX, kX, -0.5, 1), DomainError);
    CHECK_THROWS_AS(leibniz_series(kX, kX, 0.5, -1), DomainError);
}

TEST_CASE("term failures are labeled with the term index") {
    // An exponent at or below -1 trips the power rule inside term k=0, and
    // the series wrapper must say which term failed.
    const PowerSum f = PowerSum::monomial(1.0, -1.5);
    try {
        leibniz_series(f, kX, 0.5, 1);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("term k = 0") != std::string::npos);
    }
}

TEST_CASE("default truncation policy") {
    CHECK(default_truncation(kX2, 0.5) == 3);
    CHECK(default_truncation(kX2, 1.5) == 4);
    CHECK(default_truncation(PowerSum::monomial(1.0, 6.0), 0.5) == 6);
    CHECK(default_truncation(kOne, 0.3) == 3);
    CHECK(default_truncation(PowerSum::monomial(1.0, 0.5), 0.5) == 16);
}

TEST_CASE("defect of the classical derivative vanishes") {
    const OperatorSpec d = OperatorSpec::classical();
    const auto rep = leibniz_defect(d, kX, kX2, default_defect_points());
    CHECK(rep.alpha == 1.0);
    CHECK(rep.max_abs <= 1e-12);
    for (double v : rep.delta) {
        CHECK(std::fabs(v) <= 1e-12);
    }
}

TEST_CASE("defect of rl half derivative on (x, x) at x=1") {
    const OperatorSpec rl = OperatorSpec::rl(0.5);
    const auto rep = leibniz_defect(rl, kX, kX, {1.0});
    REQUIRE(rep.delta.size() == 1);
    CHECK(std::fabs(rep.delta[0] - orc::kDefectRL05xx) <= 1e-12);
    CHECK(std::fabs(rep.max_abs - std::fabs(orc::kDefectRL05xx)) <= 1e-12);
    CHECK(rep.alpha == 0.5);
}

TEST_CASE("caputo defect coincides with rl defect on (x, x)") {
    // Caputo and rl differ only on constants, and x has none.
    const auto rep =
        leibniz_defect(OperatorSpec::caputo(0.5), kX, kX, {1.0});
    REQUIRE(rep.delta.size() == 1);
    CHECK(std::fabs(rep.delta[0] - orc::kDefectRL05xx) <= 1e-12);
}

TEST_CASE("defect closed forms at alpha = 0.3 and 1.5") {
    const auto r03 = leibniz_defect(OperatorSpec::rl(0.3), kX, kX, {1.0});
    CHECK(std::fabs(r03.delta[0] - orc::kDefectRL03xx) <= 1e-12);
    const auto r15 = leibniz_defect(OperatorSpec::rl(1.5), kX, kX, {1.0});
    CHECK(std::fabs(r15.delta[0] - orc::kDefectRL15xx) <= 1e-12);
}

TEST_CASE("fractional defects are far from zero") {
    for (double a : {0.3, 0.5, 1.5}) {
        const auto rep = leibniz_defect(OperatorSpec::rl(a), kX, kX,
                                        default_defect_points());
        CAPTURE(a);
        CHECK(rep.max_abs >= 0.1);
    }
}

TEST_CASE("defect of rl at alpha=1 vanishes") {
    const auto rep = leibniz_defect(OperatorSpec::rl(1.0), kX, kX2,
                                    default_defect_points());
    CHECK(rep.max_abs <= 1e-11);
}

TEST_CASE("composite operators have no single order") {
    const OperatorSpec combo = OperatorSpec::combo(
        {2.0, -1.0}, {OperatorSpec::rl(0.5), OperatorSpec::classical()});
    const auto rep = leibniz_defect(combo, kX, kX, {1.0});
    CHECK(std::isnan(rep.alpha));
}

TEST_CASE("defect report carries its inputs") {
    const auto pts = default_defect_points();
    const auto rep = leibniz_defect(OperatorSpec::rl(0.5), kX, kX2, pts);
    CHECK(rep.points == pts);
    CHECK(rep.f == kX);
    CHECK(rep.g == kX2);
    REQUIRE(rep.delta.size() == pts.size());
}

TEST_CASE("defect point validation") {
    CHECK_THROWS_AS(leibniz_defect(OperatorSpec::rl(0.5), kX, kX, {}),
                    DomainError);
    CHECK_THROWS_AS(leibniz_defect(OperatorSpec::rl(0.5), kX, kX, {0.0}),
                    DomainError);
    CHECK_THROWS_AS(leibniz_defect(OperatorSpec::rl(0.5), kX, kX, {1.0, -2.0}),
                    DomainError);
}

TEST_CASE("default defect points span the standard window") {
    const auto pts = default_defect_points();
    REQUIRE(pts.size() == 20);
    CHECK(pts.front() == 0.2);
    CHECK(pts.back() == 5.0);
}
