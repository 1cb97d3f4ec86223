#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <vector>

#include "support.hpp"
#include "zetaeta/dedekind.hpp"
#include "zetaeta/reports.hpp"
#include "zetaeta/special_functions.hpp"

using namespace zetaeta;
namespace fs = std::filesystem;

namespace {

// r_2(n) / 4 by direct lattice-point count: the ideal count of Z[i].
std::vector<int> gaussian_ideal_counts(int limit)
{
    std::vector<int> r2(limit + 1, 0);
    for (int x = -200; x <= 200; ++x)
        for (int y = -200; y <= 200; ++y) {
            int const n = x * x + y * y;
            if (n >= 1 && n <= limit)
                ++r2[n];
        }
    for (int & v : r2)
        v /= 4;
    return r2;
}

int chi_mod(std::int64_t D, std::uint64_t n)
{
    switch (D) {
    case -4: return (n % 2 == 0) ? 0 : (n % 4 == 1 ? 1 : -1);
    case -3: return (n % 3 == 0) ? 0 : (n % 3 == 1 ? 1 : -1);
    case 5: {
        int const r = static_cast<int>(n % 5);
        return r == 0 ? 0 : (r == 1 || r == 4 ? 1 : -1);
    }
    case 8: {
        int const r = static_cast<int>(n % 8);
        return (r % 2 == 0) ? 0 : (r == 1 || r == 7 ? 1 : -1);
    }
    }
    return 99;
}

} // namespace

TEST_SUITE("dedekind")
{

TEST_CASE("fundamental discriminants")
{
    for (std::int64_t D : {-4, -3, -7, -8, 5, 8, 12, 13, -15})
        CHECK(is_fundamental_discriminant(D));
    for (std::int64_t D : {0, 1, 4, -12, -16, 9, 20, 2, -1})
        CHECK_FALSE(is_fundamental_discriminant(D));
}

TEST_CASE("field table")
{
    auto const table = builtin_field_table();
    CHECK(table.size() == 4);
    auto const gi = lookup_field(-4);
    CHECK(gi.roots_of_unity == 4);
    CHECK(gi.r2 == 1);
    CHECK(gi.degree() == 2);
    CHECK(gi.imaginary());
    CHECK(lookup_field(5).regulator == doctest::Approx(0.48121182505960344750));
    CHECK(lookup_field(8).regulator == doctest::Approx(0.88137358701954302523));
    CHECK(lookup_field(-3).roots_of_unity == 6);
    CHECK_THROWS_AS(lookup_field(-7), InvalidArgument);
    CHECK_THROWS_AS(lookup_field(-12), InvalidArgument);

    fs::path const dir = fs::temp_directory_path() / "zetaeta-test-fields";
    fs::create_directories(dir);
    std::ofstream(dir / "ok.json")
        << R"([{"discriminant": -7, "r1": 0, "r2": 1, "class_number": 1, "regulator": 1, "roots_of_unity": 2}])";
    auto const f7 = lookup_field(-7, (dir / "ok.json").string());
    CHECK(f7.discriminant == -7);
    CHECK(lookup_field(-4, (dir / "ok.json").string()).roots_of_unity == 4);

    std::ofstream(dir / "broken.json") << "[{\"discriminant\": -7,";
    CHECK_THROWS_AS(load_field_table((dir / "broken.json").string()), FormatError);
    std::ofstream(dir / "object.json") << "{}";
    CHECK_THROWS_AS(load_field_table((dir / "object.json").string()), FormatError);
    std::ofstream(dir / "bad.json")
        << R"([{"discriminant": -7, "r1": 0, "r2": 1, "class_number": 0, "regulator": 1, "roots_of_unity": 2}])";
    CHECK_THROWS_AS(load_field_table((dir / "bad.json").string()), InvalidArgument);
    CHECK_THROWS_AS(load_field_table((dir / "none.json").string()), IoError);
    fs::remove_all(dir);

    QuadraticFieldData wrong = gi;
    wrong.r1 = 2;
    CHECK_THROWS_AS(wrong.validate(), InvalidArgument);
}

TEST_CASE("Kronecker symbol")
{
    for (std::int64_t D : {-4, -3, 5, 8})
        for (std::uint64_t n = 1; n <= 200; ++n) {
            CAPTURE(D);
            CAPTURE(n);
            CHECK(kronecker_chi(D, n) == chi_mod(D, n));
        }
    CHECK(kronecker_chi(-7, 2) == 1);
    CHECK(kronecker_chi(12, 5) == -1);
    CHECK_THROWS_AS(kronecker_chi(-4, 0), InvalidArgument);
}

TEST_CASE("ideal counts of Z[i]")
{
    int const limit = 10000;
    auto const series = ideal_counts(lookup_field(-4), limit);
    auto const oracle = gaussian_ideal_counts(limit);
    int mismatches = 0;
    for (int n = 1; n <= limit; ++n)
        mismatches += series[n] != static_cast<std::uint32_t>(oracle[n]);
    CHECK(mismatches == 0);
    CHECK(series[1] == 1);
    CHECK(series[5] == 2);
    CHECK(series[3] == 0);
    CHECK(series[9] == 1);
    for (auto [m, n] : {std::pair{5, 13}, std::pair{9, 25}, std::pair{4, 65}, std::pair{17, 29}}) {
        REQUIRE(std::gcd(m, n) == 1);
        CHECK(series[m * n] == series[m] * series[n]);
    }
    CHECK_THROWS_AS(ideal_counts(lookup_field(-4), 0), InvalidArgument);
}

TEST_CASE("Dirichlet L values")
{
    struct Row
    {
        Complex s;
        Complex chi_m4;
        Complex chi_5;
    };
    std::vector<Row> const rows = {
        {{2, 0}, {0.91596559417721901505, 0}, {0.70621140325974096993, 0}},
        {{3, 0}, {0.96894614625936938048, 0}, {0.85482476664854301024, 0}},
        {{2, 5}, {0.93022082010864781257, -0.11628679339529345363},
         {1.2110579161175972879, -0.21337514840401419363}},
        {{0.5, 3}, {1.4685105834601206943, 0.19169891968453042018},
         {1.5573567209431383151, 1.0212389903423030311}},
        {{0.3, 40}, {-0.13151688567973615584, -1.3636932672200872954},
         {-0.82750918716917630832, 2.63159366497558806}},
    };
    for (auto const & r : rows) {
        CAPTURE(r.s);
        CHECK(std::abs(dirichlet_L(-4, r.s) - r.chi_m4) < 1e-10);
        CHECK(std::abs(dirichlet_L(5, r.s) - r.chi_5) < 1e-10);
    }
    // L(s, chi) has no pole at s = 1; L(1, chi_-4) = pi/4
    CHECK(dirichlet_L(-4, {1.0, 0.0}).real() == doctest::Approx(kPi / 4).epsilon(1e-12));
    // functional-equation side
    Complex const s(-2.5, 4.0);
    Complex const direct = dirichlet_L(-4, s);
    CHECK(std::isfinite(std::abs(direct)));
    CHECK_THROWS_AS(dirichlet_L(-12, {2.0, 0.0}), InvalidArgument);
}

TEST_CASE("Dedekind zeta of Q(i)")
{
    auto const field = lookup_field(-4);
    CHECK(zeta_kappa(field, {2.0, 0.0}).real() ==
          doctest::Approx(1.5067030099229850309).epsilon(1e-12));
    auto const series = ideal_counts(field, 1000000);
    for (Complex s : {Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(2.5, 5.0)}) {
        CAPTURE(s);
        CHECK(std::abs(zeta_kappa(field, s) - ideal_series_sum(field, series, s)) < 1e-8);
    }
    CHECK_THROWS_AS(zeta_kappa(field, {1.0, 0.0}), PoleError);

    for (Complex s : fe_samples(20, 4)) {
        Complex const lhs = zeta_kappa(field, 1.0 - s);
        Complex const rhs = kappa_fe_factor(field, s) * zeta_kappa(field, s);
        CHECK(std::abs(lhs - rhs) / (1.0 + std::abs(lhs)) < 1e-9);
        Complex const a = xi_kappa(field, s);
        Complex const b = xi_kappa(field, 1.0 - s);
        CHECK(std::abs(a - b) / (1.0 + std::abs(a)) < 1e-9);
    }
}

TEST_CASE("class number formula and residues")
{
    CHECK(class_number_formula(lookup_field(-4)) == doctest::Approx(kPi / 4).epsilon(1e-15));
    CHECK(class_number_formula(lookup_field(-3)) == doctest::Approx(kPi / (3 * std::sqrt(3.0))));
    CHECK(class_number_formula(lookup_field(5)) ==
          doctest::Approx(4 * 0.48121182505960344750 / (2 * std::sqrt(5.0))));
    CHECK_THROWS_AS(class_number_formula(0, 1, 1, 1, 0, 4), InvalidArgument);
    for (std::int64_t D : {-4, -3, 5, 8}) {
        CAPTURE(D);
        ResidueCheck const r = residue_check(lookup_field(D));
        CHECK(r.rel_err < 1e-6);
        CHECK(std::fabs(r.numeric - r.formula) < 1e-4);
    }
}

TEST_CASE("L zeros and rotated L")
{
    CHECK(hardy_Z_chi(-4, 3.0) == doctest::Approx(1.48096988812825).epsilon(1e-10));
    CHECK(std::fabs(rotated_L(-4, 7.5).imag()) < 1e-10);
    ZeroList const z = find_L_zeros(-4, 20.0);
    REQUIRE(z.size() == 5);
    CHECK(std::fabs(z.ordinates[0] - 6.0209489046976) < 1e-8);
    CHECK(std::fabs(z.ordinates[1] - 10.2437703041666) < 1e-8);
    CHECK(std::fabs(z.ordinates[2] - 12.9880980123124) < 1e-8);
    CHECK(std::fabs(z.ordinates[3] - 16.3426071045872) < 1e-8);
    CHECK(std::fabs(z.ordinates[4] - 18.2919931961235) < 1e-8);
    CHECK(z.source_tag == "L D=-4");

    ZeroList const z5 = find_L_zeros(5, 10.0);
    REQUIRE(z5.size() == 2);
    CHECK(std::fabs(z5.ordinates[0] - 6.64845334472771) < 1e-8);
    CHECK(std::fabs(z5.ordinates[1] - 9.83144443288667) < 1e-8);
    CHECK_THROWS_AS(find_L_zeros(-4, 0.5), InvalidArgument);
    CHECK_THROWS_AS(hardy_Z_chi(-4, 0.0), DomainError);
}

TEST_CASE("merged zero lists")
{
    auto const field = lookup_field(-4);
    ZeroList const z = kappa_zeros(field, 15.0);
    REQUIRE(z.size() == 4);
    CHECK(std::is_sorted(z.ordinates.begin(), z.ordinates.end()));
    CHECK(std::fabs(z.ordinates[3] - 14.1347251417346938) < 1e-8);
    CHECK(z.source_tag == "dedekind D=-4");
    auto const v = kappa_validator(field);
    for (double t : z.ordinates)
        CHECK(v(t) < 1e-6);

    ZeroList a, b;
    a.ordinates = {1.0, 3.0};
    b.ordinates = {2.0, 3.0 + 1e-10};
    CHECK_THROWS_AS(merge_zero_lists(a, b, "x"), ConsistencyError);
    b.ordinates = {2.0, 4.0};
    CHECK(merge_zero_lists(a, b, "x").ordinates == std::vector<double>{1.0, 2.0, 3.0, 4.0});
    CHECK_THROWS_AS(kappa_zeros(field, 5.0), InvalidArgument);
    CHECK(kappa_first_zeros(field, 10).size() >= 10);
}

TEST_CASE("eta for Q(i)")
{
    auto const field = lookup_field(-4);
    ZeroList const zeros = kappa_first_zeros(field, 60);
    TruncatedProductSpec const spec = kappa_product_spec(field, zeros, 60);
    CHECK(spec.leading_constant() == doctest::Approx(kappa_leading_constant(field)));
    CHECK(kappa_leading_constant(field) == doctest::Approx(0.25));
    for (Complex s : fe_samples(30, 6))
        CHECK(eta_kappa_fe_residual(field, spec, s) < 1e-9);
    CHECK(eta_kappa_residue_symbolic(field, spec) == doctest::Approx(kPi / 4).epsilon(1e-12));
    CHECK(std::fabs(eta_kappa_residue_numeric(field, spec) - kPi / 4) < 1e-5);
    CHECK_THROWS_AS(eta_kappa_truncated(field, spec, {1.0, 0.0}), PoleError);
    Complex const s(0.3, 2.0);
    CHECK(std::abs(h_kappa_truncated(field, spec, s) - h_kappa_truncated(field, spec, 1.0 - s)) <
          1e-12 * (1.0 + std::abs(h_kappa_truncated(field, spec, s))));

    ZeroList pending = zeros;
    pending.validation_pending = true;
    CHECK_NOTHROW(kappa_product_spec(field, pending, 60));
    pending.ordinates[1] += 0.05;
    CHECK_THROWS_AS(kappa_product_spec(field, pending, 60), ValidationError);
}

}
