#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hqm/selftest.hpp"

using namespace hqm;

TEST_CASE("corrupted phi_3 is caught by the route-agreement check")
{
    SelftestOptions opt;
    opt.phi = [](int m) {
        YPoly phi = phi_cached(m);
        if (m != 3)
            return phi;
        MPoly p = phi.poly();
        p.add_term({1, 0, 0}, Rational(1, 2) - Rational(5, 12));
        return YPoly(3, p);
    };
    const CheckResult r = run_check(2, opt);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("f_phi") != std::string::npos);
    CHECK(r.detail.find("m=3") != std::string::npos);
}

TEST_CASE("untouched phi passes and results are formatted")
{
    const CheckResult r = run_check(2);
    CHECK(r.pass);
    CHECK(format_check(r).rfind("[PASS] 02 ", 0) == 0);
    CHECK_THROWS_AS(run_check(12), std::invalid_argument);
}

TEST_CASE("too few coefficients for the fits is reported")
{
    SelftestOptions opt;
    opt.fit_dmax = 12;
    const CheckResult r = run_check(8, opt);
    CHECK_FALSE(r.pass);
    CHECK(r.detail.find("fit_qm") != std::string::npos);
}
