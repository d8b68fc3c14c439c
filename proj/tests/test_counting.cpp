#include <cmath>
#include <random>
#include <sstream>

#include <stdexcept>

#include "doctest.h"
#include "nscartan/counting.hpp"
#include "nscartan/invariants.hpp"
#include "oracles.hpp"

using namespace nscartan;

namespace {

std::string data(const char* name)
{
    return std::string(NSCARTAN_DATA_DIR) + "/" + name;
}

std::vector<NewformRecord> parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_newform_records(in, "inline");
}

}  // namespace

TEST_CASE("newform parsing")
{
    const auto recs = parse("# comment\n121 1 hecke:2 traces:[-1]\n\n169 3 charpoly:[ -1, -1, 2, 1 ]\n");
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].traces == std::vector<int64_t>{-1});
    CHECK(recs[1].charpoly == std::vector<int64_t>{-1, -1, 2, 1});
    CHECK(recs[1].line == 4);
    // x^3 + 2x^2 - x - 1: p1 = -2, p2 = 4 + 2 = 6
    CHECK(recs[1].power_sums(2) == std::vector<int64_t>{-2, 6});
}

TEST_CASE("malformed newform rows report their line")
{
    auto message = [](const std::string& text) {
        try {
            parse(text);
        } catch (const std::invalid_argument& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("121 1 traces:[1]\n121 x traces:[1]\n").find("inline:2") != std::string::npos);
    CHECK(message("169 2 charpoly:[-1,-1,2,1]\n").find("inline:1") != std::string::npos);
    CHECK(message("169 3 charpoly:[-1,-1,2,2]\n").find("monic") != std::string::npos);
    CHECK(message("121 1 colour:[1]\n").find("unknown key") != std::string::npos);
    CHECK(message("121 1 traces:[1\n").find("unbalanced") != std::string::npos);
    CHECK(message("121 1\n").find("traces or charpoly") != std::string::npos);
    CHECK_THROWS_AS(load_newform_records(data("missing.txt")), std::runtime_error);
}

TEST_CASE("Frobenius power-sum polynomials match the matrix-power oracle")
{
    for (uint32_t q : {2u, 3u, 5u})
        for (unsigned k = 0; k <= 6; ++k) {
            const auto poly = frobenius_power_sum_poly(q, k);
            for (int64_t a = -5; a <= 5; ++a) {
                int64_t v = 0, apow = 1;
                for (int64_t c : poly) v += c * apow, apow *= a;
                CHECK(v == oracle::power_sum(a, q, k));
            }
        }
}

TEST_CASE("trace formula on the bundled fixtures")
{
    CHECK(count_points_trace(load_newform_records(data("level121_ns.txt")), 2, 2) == 15);
    CHECK(count_points_trace(load_newform_records(data("level169_nsplus.txt")), 2, 2) == 11);
    const auto rep = count_points_trace_report(load_newform_records(data("level121_ns.txt")), 11, 2, 2, CurveVariant::Ns);
    CHECK(rep.total == 15);
    CHECK(rep.cusps == 0);
}

TEST_CASE("moduli and trace methods agree")
{
    const auto a = count_points_moduli(11, 2, 2, CurveVariant::Ns);
    const auto b = count_points_moduli(13, 2, 2, CurveVariant::NsPlus);
    CHECK(a.total == 15);
    CHECK(b.total == 11);
    uint64_t sum = a.cusps;
    for (const auto& c : a.breakdown) sum += c.count;
    CHECK(static_cast<int64_t>(sum) == a.total);
    CHECK(a.breakdown.front().count == 11);
}

TEST_CASE("moduli counts satisfy the Weil bound")
{
    // |N - (Q + 1)| <= 2 g sqrt(Q) with the independently computed genus
    for (uint32_t p : {5u, 7u, 11u, 13u, 17u})
        for (uint32_t q : {2u, 3u, 5u}) {
            if (q == p) continue;
            for (CurveVariant v : {CurveVariant::Ns, CurveVariant::NsPlus}) {
                const auto r = count_points_moduli(p, q, 2, v);
                const int64_t Q = int64_t{q} * q;
                const int64_t g = v == CurveVariant::Ns ? genus_ns(p) : genus_ns_plus(p);
                // 2 g sqrt(Q) = 2 g q exactly
                CHECK(std::llabs(r.total - (Q + 1)) <= 2 * g * q);
                CHECK(r.total >= 0);
            }
        }
}

TEST_CASE("supersingular sub-total meets the lower bound")
{
    for (uint32_t p : {11u, 13u, 17u, 19u})
        for (uint32_t q : {2u, 3u}) {
            const auto r = count_points_moduli(p, q, 2, CurveVariant::Ns);
            CHECK(Rational(static_cast<int64_t>(r.supersingular_subtotal)) >= Rational(int64_t{p} * (p - 1) * (q - 1), 12));
        }
}

TEST_CASE("moduli counts are independent of the non-square and coset order")
{
    for (uint32_t p : {7u, 11u, 13u})
        for (CurveVariant v : {CurveVariant::Ns, CurveVariant::NsPlus}) {
            const int64_t base = count_points_moduli(p, 3, 2, v).total;
            for (uint32_t alpha : nonsquares(p))
                for (CosetOrder o : {CosetOrder::Ascending, CosetOrder::Descending}) {
                    ModuliOptions opts;
                    opts.cartan.alpha = alpha;
                    opts.cartan.order = o;
                    CHECK(count_points_moduli(p, 3, 2, v, opts).total == base);
                }
        }
}

TEST_CASE("r = 4 agrees with the trace formula on the fixtures")
{
    CHECK(count_points_moduli(11, 2, 4, CurveVariant::Ns).total ==
          count_points_trace(load_newform_records(data("level121_ns.txt")), 2, 4));
}

TEST_CASE("cusp counts and argument checks")
{
    CHECK(rational_cusp_count(11, 4, CurveVariant::Ns) == 0);
    CHECK(rational_cusp_count(11, 1, CurveVariant::Ns) == 10);
    CHECK_THROWS_AS(count_points_moduli(11, 2, 3, CurveVariant::Ns), std::invalid_argument);
    CHECK_THROWS_AS(count_points_moduli(11, 11, 2, CurveVariant::Ns), std::invalid_argument);
    CHECK_THROWS_AS(parse_variant("split"), std::invalid_argument);
    CHECK(parse_variant("ns+") == CurveVariant::NsPlus);
    CHECK(hyperelliptic_bound_check(10, 2));
    CHECK_FALSE(hyperelliptic_bound_check(11, 2));
}
