#include <cmath>
#include <random>
#include <set>

#include <stdexcept>

#include "doctest.h"
#include "nscartan/ellcurve.hpp"
#include "oracles.hpp"

using namespace nscartan;

TEST_CASE("point counts agree with direct enumeration")
{
    std::mt19937 rng(23);
    for (uint32_t p : {5u, 7u, 11u, 13u, 31u, 97u}) {
        const FieldHandle F = build_ext_field(p, 1);
        for (int i = 0; i < 30; ++i) {
            const int64_t a = rng() % p, b = rng() % p;
            if (oracle::md(4 * a * a * a + 27 * b * b, p) == 0) continue;
            const auto E = WeierstrassCurve::short_form(F, F->from_int(a), F->from_int(b));
            CHECK(point_count(E) == oracle::short_curve_count(p, a, b));
        }
    }
}

TEST_CASE("extension counts follow the Frobenius recursion")
{
    std::mt19937 rng(29);
    for (uint32_t p : {2u, 3u, 5u, 7u}) {
        const FieldHandle F = build_ext_field(p, 1), F2 = build_ext_field(p, 2), F3 = build_ext_field(p, 3);
        for (const auto& E : enumerate_curves(F)) {
            const int64_t a = frobenius_trace(E);
            const int64_t n2 = static_cast<int64_t>(p) * p + 1 - oracle::power_sum(a, p, 2);
            const int64_t n3 = static_cast<int64_t>(p) * p * p + 1 - oracle::power_sum(a, p, 3);
            CHECK(static_cast<int64_t>(point_count(E, F2)) == n2);
            CHECK(static_cast<int64_t>(point_count(E, F3)) == n3);
        }
    }
}

TEST_CASE("group law: associativity and order divides the count")
{
    const FieldHandle F = build_ext_field(3, 3);
    std::mt19937 rng(31);
    for (const auto& E : enumerate_curves(F)) {
        std::vector<CurvePoint> pts;
        for (uint32_t x = 0; x < F->size(); ++x)
            for (uint32_t y = 0; y < F->size(); ++y)
                if (E.contains(Gf{x}, Gf{y})) pts.push_back({Gf{x}, Gf{y}, false});
        const uint64_t n = pts.size() + 1;
        CHECK(n == point_count(E));
        for (int i = 0; i < 10; ++i) {
            const auto& P = pts[rng() % pts.size()];
            const auto& Q = pts[rng() % pts.size()];
            const auto& R = pts[rng() % pts.size()];
            CHECK(add(E, add(E, P, Q), R) == add(E, P, add(E, Q, R)));
            CHECK(add(E, P, negate(E, P)).infinity);
            CHECK(multiply(E, P, static_cast<int64_t>(n)).infinity);
        }
    }
}

TEST_CASE("curves with a given j-invariant")
{
    for (auto [c, r] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 1u}, {7u, 2u}, {13u, 1u}}) {
        const FieldHandle F = build_ext_field(c, r);
        for (uint32_t j = 0; j < F->size(); ++j) CHECK(WeierstrassCurve::with_j_invariant(F, Gf{j}).j_invariant() == Gf{j});
    }
}

TEST_CASE("geometric automorphism orders of special curves")
{
    // over F_{q^2} (or larger) the special automorphisms are all defined
    CHECK(automorphism_order(WeierstrassCurve::with_j_invariant(build_ext_field(2, 2), Gf{0})) == 24);
    CHECK(automorphism_order(WeierstrassCurve::with_j_invariant(build_ext_field(3, 2), Gf{0})) == 12);
    CHECK(automorphism_order(WeierstrassCurve::with_j_invariant(build_ext_field(7, 2), Gf{0})) == 6);
    const FieldHandle F = build_ext_field(7, 2);
    CHECK(automorphism_order(WeierstrassCurve::with_j_invariant(F, F->from_int(1728))) == 4);
    CHECK(automorphism_order(WeierstrassCurve::with_j_invariant(F, F->from_int(3))) == 2);
}

TEST_CASE("mass formula for supersingular curves")
{
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u, 17u}) {
        const auto inv = supersingular_inventory(q);
        Rational mass(0);
        for (const auto& e : inv.entries) mass += Rational(1, static_cast<int64_t>(e.aut_order));
        CHECK(mass == Rational(int64_t{q} - 1, 24));
        CHECK(inv.mass == mass);
    }
    // number of supersingular j: floor(q/12) + {0,1,1,2} by q mod 12
    for (uint32_t q : {5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u}) {
        const size_t extra = q % 12 == 1 ? 0 : q % 12 == 11 ? 2 : 1;
        CHECK(supersingular_inventory(q).entries.size() == q / 12 + extra);
    }
    CHECK_THROWS_AS(supersingular_inventory(4), std::invalid_argument);
}

TEST_CASE("supersingular test agrees with trace divisibility")
{
    for (uint32_t p : {5u, 7u, 11u}) {
        const FieldHandle F = build_ext_field(p, 1);
        for (const auto& E : enumerate_curves(F)) CHECK(is_supersingular(E) == (frobenius_trace(E) % p == 0));
    }
}

TEST_CASE("roots of the 3-division polynomial are x-coordinates of 3-torsion")
{
    for (unsigned k : {1u, 2u, 3u}) {
        const FieldHandle F = build_ext_field(5, k);
        for (const auto& E : enumerate_curves(build_ext_field(5, 1))) {
            const FieldEmbedding emb(E.field(), F);
            const auto EF = E.base_change(emb);
            const Polynomial psi3 = division_polynomial(EF, 3);
            std::set<uint32_t> roots, torsion;
            for (uint32_t x = 0; x < F->size(); ++x)
                if (psi3.eval(Gf{x}) == F->zero()) roots.insert(x);
            for (uint32_t x = 0; x < F->size(); ++x)
                for (uint32_t y = 0; y < F->size(); ++y)
                    if (EF.contains(Gf{x}, Gf{y}) && multiply(EF, {Gf{x}, Gf{y}, false}, 3).infinity) torsion.insert(x);
            // every torsion x is a root; a root without a rational y is allowed
            for (uint32_t x : torsion) CHECK(roots.count(x) == 1);
            CHECK(psi3.degree() == 4);
        }
    }
}

TEST_CASE("Frobenius mod p matches the trace and determinant")
{
    for (uint32_t q : {2u, 3u}) {
        const FieldHandle F = build_ext_field(q, 2);
        for (const auto& E : enumerate_curves(F)) {
            for (uint32_t p : {5u, 7u}) {
                const FrobeniusClass c = frobenius_matrix_class(E, p);
                CHECK(c.trace() == oracle::md(frobenius_trace(E), p));
                CHECK(c.det() == oracle::md(static_cast<int64_t>(q) * q, p));
                if (c.is_scalar()) {
                    CHECK(frobenius_is_scalar(E, p, std::get<ScalarClass>(c.kind).lambda));
                }
            }
        }
    }
}
