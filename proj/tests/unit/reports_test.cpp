#include <cstdlib>

#include "support.hpp"
#include "zetaeta/reports.hpp"

using namespace zetaeta;

TEST_SUITE("reports")
{

TEST_CASE("samples are seeded and bounded")
{
    auto const a = fe_samples(50, 1);
    auto const b = fe_samples(50, 1);
    auto const c = fe_samples(50, 2);
    CHECK(a == b);
    CHECK(a != c);
    for (Complex s : a) {
        CHECK(s.real() >= -5.0);
        CHECK(s.real() <= 6.0);
        CHECK(std::fabs(s.imag()) <= 30.0);
    }
}

TEST_CASE("fe suites pass")
{
    for (char const * name : {"zeta", "xi", "counterexample"}) {
        CAPTURE(name);
        Report const r = fe_check(name, 50, 1);
        CHECK(r.records.size() == 50);
        CHECK(r.passed());
    }
    Report const eta = fe_check("eta", 10, 1, &test::first_zeros(100), 100);
    CHECK(eta.passed());
    CHECK_THROWS_AS(fe_check("eta", 10, 1), InvalidArgument);
    CHECK_THROWS_AS(fe_check("nope", 10, 1), InvalidArgument);
    CHECK_THROWS_AS(fe_check("zeta", 0, 1), InvalidArgument);
}

TEST_CASE("uniqueness cases")
{
    CHECK(uniqueness_case("sharpness").passed());
    CHECK(uniqueness_case("order2").passed());
    Report const limit0 = uniqueness_case("limit0");
    REQUIRE(limit0.first_failure() != nullptr);
    CHECK(limit0.first_failure()->case_name == "abs-f3");
    CHECK(limit0.first_failure()->sample == "30,0");
    CHECK_THROWS_AS(uniqueness_case("other"), InvalidArgument);
}

TEST_CASE("formatting and cache location")
{
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(2.0) == "2");
    setenv("ZETA_CACHE_DIR", "/tmp/zc-test", 1);
    CHECK(default_zero_cache_path() == "/tmp/zc-test/zeta-zeros.txt");
    unsetenv("ZETA_CACHE_DIR");
    setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(default_zero_cache_path() == "/tmp/xdg/zetaeta/zeta-zeros.txt");
    unsetenv("XDG_CACHE_HOME");
}

}
