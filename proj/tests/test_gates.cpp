#include <stdexcept>

#include "doctest.h"
#include "nscartan/gates.hpp"
#include "nscartan/report.hpp"
#include "oracles.hpp"

using namespace nscartan;

TEST_CASE("hyperelliptic gates")
{
    for (uint32_t p : oracle::primes(11, 97)) CHECK(hyperelliptic_gate(p, CurveVariant::Ns).verdict == Verdict::Pass);
    for (uint32_t p : oracle::primes(13, 97))
        CHECK(hyperelliptic_gate(p, CurveVariant::NsPlus).verdict == Verdict::Pass);
    CHECK(hyperelliptic_gate(7, CurveVariant::Ns).verdict == Verdict::Declined);
    CHECK(hyperelliptic_gate(11, CurveVariant::NsPlus).verdict == Verdict::Declined);
    // below the exact-bound range the explicit count is what decides
    CHECK(hyperelliptic_gate(11, CurveVariant::Ns).basis == "explicit point count over F_4");
    CHECK(hyperelliptic_gate(13, CurveVariant::NsPlus).basis == "explicit point count over F_4");
}

TEST_CASE("cusp preservation opens at 37")
{
    CHECK(minimal_cusp_preservation_prime() == 37u);
    CHECK(fixed_point_degree_check(16, 8));
    CHECK_FALSE(fixed_point_degree_check(17, 8));
    for (uint32_t p : oracle::primes(11, 31)) CHECK(cusp_preservation_gate(p).verdict == Verdict::Fail);
    for (uint32_t p : oracle::primes(37, 97)) CHECK(cusp_preservation_gate(p).verdict == Verdict::Pass);
}

TEST_CASE("full automorphism group gate")
{
    std::vector<uint32_t> open;
    for (uint32_t p : oracle::primes(11, 97))
        if (full_aut_gate(p).verdict == Verdict::Pass) open.push_back(p);
    CHECK(open == std::vector<uint32_t>{37, 61, 73, 97});
    const auto e11 = full_aut_gate(11);
    CHECK(e11.verdict == Verdict::Fail);
    CHECK(e11.conclusion.find("Klein four") != std::string::npos);
    CHECK(full_aut_gate(13).conclusion.find("p = 13") != std::string::npos);
}

TEST_CASE("ray class inequality")
{
    CHECK(ray_class_gate(7, 6));
    CHECK_FALSE(ray_class_gate(11, 6));
    CHECK(ray_class_gate(5, 4));
    CHECK_FALSE(ray_class_gate(7, 4));
    CHECK(ray_class_max_prime() == 7);
    CHECK_THROWS_AS(ray_class_gate(11, 3), std::invalid_argument);
    for (uint32_t p : oracle::primes(3, 97))
        for (uint32_t w : {2u, 4u, 6u}) CHECK(ray_class_gate(p, w) == (p <= w + 1));
}

TEST_CASE("field of definition gate")
{
    for (uint32_t p : oracle::primes(11, 97)) {
        const auto e = field_of_definition_gate(p);
        CHECK(e.verdict == Verdict::Pass);
    }
    CHECK(field_of_definition_gate(11).basis == "explicitly computed case");
}

TEST_CASE("uniformity hypotheses")
{
    CHECK(class_number_one_discriminants().size() == 9);
    for (uint32_t p : oracle::primes(37, 97)) {
        bool inert = false;
        for (int64_t D : class_number_one_discriminants()) inert = inert || legendre(D, p) == -1;
        CHECK((unif_aut_hypotheses(p).verdict == Verdict::Pass) == inert);
    }
    CHECK(unif_aut_hypotheses(31).verdict == Verdict::Declined);
}

TEST_CASE("every gate meets its expectation through p = 97")
{
    for (uint32_t p : oracle::primes(5, 97)) {
        const auto r = gates_for(p);
        CHECK(r.entries.size() == 8);
        CHECK(r.meets_expectations());
    }
    CHECK_THROWS_AS(gates_for(9), std::invalid_argument);
}

TEST_CASE("reports render deterministically")
{
    const Json a = to_json(gates_for(37)), b = to_json(gates_for(37));
    CHECK(render_text(a) == render_text(b));
    CHECK(a.dump() == b.dump());
    CHECK(a.begin().key() == "p");
    const std::string text = render_text(to_json(count_points_moduli(11, 2, 2, CurveVariant::Ns)));
    CHECK(text.find("total: 15") != std::string::npos);
    CHECK(text.find("supersingular_bound: 55/6") != std::string::npos);
    CHECK(render_text(lattices_report(7)).find("cartan_fixed:\n  - <(1, 0), (0, 1)>\n") != std::string::npos);
    CHECK(render_text(cuspdiv_report(11, 3)).find("T_l: [t=3: 1, t=4: 3]") != std::string::npos);
}

TEST_CASE("check manifest passes")
{
    VerifyOptions o;
    o.data_dir = NSCARTAN_DATA_DIR;
    const auto checks = run_checks(o);
    CHECK(checks.size() == 12);
    for (const auto& c : checks) CHECK_MESSAGE(c.passed, c.key << ": " << c.detail);
}
