#include <stdexcept>

#include "doctest.h"
#include "nscartan/invariants.hpp"
#include "oracles.hpp"

using namespace nscartan;

TEST_CASE("genus of X_ns(p) and X_ns+(p) for small p")
{
    CHECK(genus_ns(5) == 0);
    CHECK(genus_ns(7) == 1);
    CHECK(genus_ns(11) == 4);
    CHECK(genus_ns(13) == 8);
    CHECK(genus_ns(17) == 15);
    CHECK(genus_ns_plus(7) == 0);
    CHECK(genus_ns_plus(11) == 1);
    CHECK(genus_ns_plus(13) == 3);
}

TEST_CASE("Riemann-Hurwitz from coset counts equals the closed form")
{
    for (uint32_t p : oracle::primes(5, 61)) {
        const auto rh = genus_ns_riemann_hurwitz(build_cartan(p));
        const auto cf = genus_ns_closed_form(p);
        CHECK(rh.nu2 == cf.nu2);
        CHECK(rh.nu3 == cf.nu3);
        CHECK(rh.cusps == cf.cusps);
        CHECK(rh.genus == cf.genus);
        // 2g - 2 = d/6 - nu2/2 - 2nu3/3 - cusps, cleared of denominators
        CHECK(6 * (2 * cf.genus - 2) ==
              int64_t(cf.degree) - 3 * int64_t(cf.nu2) - 4 * int64_t(cf.nu3) - 6 * int64_t(cf.cusps));
    }
}

TEST_CASE("genus of X_0(N) on known levels")
{
    CHECK(genus_X0(11) == 1);
    CHECK(genus_X0(23) == 2);
    CHECK(genus_X0(37) == 2);
    CHECK(genus_X0(49) == 1);
    CHECK(genus_X0(121) == 6);
    CHECK(genus_X0(169) == 8);
    CHECK(genus_X0(1) == 0);
}

TEST_CASE("new-part dimension relation")
{
    for (uint32_t p : oracle::primes(5, 97)) {
        const auto c = newpart_dim_check(p);
        CHECK_MESSAGE(c.ok, c.diagnostic);
        CHECK(c.genus_ns == c.genus_X0_p2 - 2 * c.genus_X0_p);
    }
}

TEST_CASE("double cover relation is integral")
{
    for (uint32_t p : oracle::primes(5, 97)) {
        const int64_t g = genus_ns(p), gp = genus_ns_plus(p);
        CHECK(2 * g - 2 == 2 * (2 * gp - 2) + int64_t(fixed_w(p)));
        CHECK(fixed_w(p) == (p % 4 == 1 ? (p - 1) / 2 : (p + 1) / 2));
    }
}

TEST_CASE("class numbers against the reduced-forms oracle")
{
    for (uint32_t p : oracle::primes(7, 400)) {
        if (p % 4 != 3) continue;
        const int64_t h = class_number(p);
        CHECK(h == oracle::reduced_forms(-int64_t(p)));
        CHECK(h <= int64_t(p - 1) / 2);
    }
    CHECK(class_number(7) == 1);
    CHECK(class_number(23) == 3);
    CHECK(class_number(47) == 5);
    CHECK(class_number(199) == 9);
    CHECK(class_number_reduced_forms(-4) == 1);
    CHECK(class_number_reduced_forms(-20) == 2);
    CHECK_THROWS_AS(class_number(13), std::invalid_argument);
}

TEST_CASE("CM split and field tags")
{
    CHECK(cm_split(23) == std::pair<int64_t, int64_t>{3, genus_ns(23) - 3});
    CHECK(cm_split(13).first == 0);
    CHECK(quadratic_field_tag(13) == "Q(sqrt(13))");
    CHECK(quadratic_field_tag(11) == "Q(sqrt(-11))");
    CHECK_FALSE(genus_gap_holds(17));
    for (uint32_t p : oracle::primes(19, 97)) CHECK(genus_gap_holds(p));
}

TEST_CASE("curve invariants bundle")
{
    const auto inv = curve_invariants(11);
    CHECK(inv.genus_ns == 4);
    CHECK(inv.cusps_ns == 10);
    CHECK(inv.nu2 == 2);
    CHECK(inv.nu3 == 2);
    CHECK(inv.fixed_w == 6);
    CHECK(inv.newpart_ok);
}
