#include <random>
#include <stdexcept>

#include "doctest.h"
#include "nscartan/cuspdiv.hpp"
#include "oracles.hpp"

using namespace nscartan;

namespace {

CuspDivisor random_divisor(uint32_t p, std::mt19937& rng)
{
    CuspDivisor D(p);
    for (int i = 0; i < 4; ++i) D.add(1 + rng() % (p - 1), static_cast<int64_t>(rng() % 11) - 5);
    return D;
}

}  // namespace

TEST_CASE("T_3 on a single cusp at p = 11")
{
    CHECK(hecke_Tl(3, CuspDivisor::point(11, 1)).format() == "[t=3: 1, t=4: 3]");
    CHECK(disjoint_support_choice(3, 1, 11) == 2);
    CHECK(CuspDivisor(11).format() == "0");
}

TEST_CASE("Hecke operators are linear and scale degree by l + 1")
{
    std::mt19937 rng(53);
    for (uint32_t p : {11u, 13u, 17u, 23u})
        for (uint32_t l : {2u, 3u, 5u, 7u}) {
            for (int i = 0; i < 30; ++i) {
                const CuspDivisor A = random_divisor(p, rng), B = random_divisor(p, rng);
                CHECK(hecke_Tl(l, A + B) == hecke_Tl(l, A) + hecke_Tl(l, B));
                CHECK(hecke_Tl(l, A).degree() == int64_t(l + 1) * A.degree());
                CHECK(hecke_Tl(l, w_act(A)) == w_act(hecke_Tl(l, A)));
                CHECK(w_act(w_act(A)) == A);
            }
            CHECK(eichler_shimura_shape_check(l, p));
        }
}

TEST_CASE("Galois action is a group action")
{
    std::mt19937 rng(59);
    for (uint32_t p : {11u, 13u}) {
        for (int i = 0; i < 40; ++i) {
            const CuspDivisor D = random_divisor(p, rng);
            const int64_t a = 1 + rng() % (p - 1), b = 1 + rng() % (p - 1);
            CHECK(galois_act(a, galois_act(b, D)) == galois_act(a * b, D));
            CHECK(galois_act(1, D) == D);
            CHECK(galois_act(a, D).degree() == D.degree());
        }
    }
    CHECK_THROWS_AS(galois_act(11, CuspDivisor(11)), std::invalid_argument);
}

TEST_CASE("D_l vanishes for the identity and w")
{
    for (uint32_t p : {11u, 13u, 17u})
        for (uint32_t l : {2u, 3u, 5u, 7u})
            for (uint32_t C = 1; C < p; ++C)
                for (uint32_t Cp = 1; Cp < p; ++Cp) {
                    if (C == Cp) continue;
                    CHECK(D_l(CuspAutomorphism::Identity, l, C, Cp, p).is_zero());
                    CHECK(D_l(CuspAutomorphism::W, l, C, Cp, p).is_zero());
                }
    CHECK_THROWS_AS(D_l(CuspAutomorphism::W, 2, 3, 3, 11), std::invalid_argument);
}

TEST_CASE("disjoint supports exist for every cusp")
{
    for (uint32_t p : oracle::primes(11, 97))
        for (uint32_t l : {2u, 3u, 5u, 7u})
            for (uint32_t C = 1; C < p; ++C) {
                const uint32_t Cp = disjoint_support_choice(l, C, p);
                CHECK(Cp != C);
                const auto a = hecke_Tl(l, CuspDivisor::point(p, C)).support();
                const auto b = hecke_Tl(l, CuspDivisor::point(p, Cp)).support();
                for (uint32_t s : a)
                    for (uint32_t t : b) CHECK(s != t);
            }
}

TEST_CASE("divisor checks are invariant under torsor relabeling")
{
    std::mt19937 rng(61);
    for (uint32_t p : {11u, 13u, 17u})
        for (uint32_t b = 1; b < p; ++b)
            for (uint32_t l : {2u, 3u, 5u, 7u}) {
                const CuspDivisor D = random_divisor(p, rng);
                CHECK(hecke_Tl(l, relabel(D, b)) == relabel(hecke_Tl(l, D), b));
                CHECK(w_act(relabel(D, b)) == relabel(w_act(D), b));
                // the disjoint partner moves with the basepoint up to the choice rule
                const uint32_t C = 1 + rng() % (p - 1);
                const uint32_t Cp = disjoint_support_choice(l, C, p);
                const uint32_t bC = static_cast<uint32_t>(uint64_t{b} * C % p), bCp = static_cast<uint32_t>(uint64_t{b} * Cp % p);
                const auto s1 = hecke_Tl(l, CuspDivisor::point(p, bC)).support();
                const auto s2 = hecke_Tl(l, CuspDivisor::point(p, bCp)).support();
                for (uint32_t s : s1)
                    for (uint32_t t : s2) CHECK(s != t);
            }
}

TEST_CASE("argument checks")
{
    CHECK_THROWS_AS(CuspDivisor(9), std::invalid_argument);
    CHECK_THROWS_AS(CuspDivisor::point(11, 0), std::out_of_range);
    CHECK_THROWS_AS(hecke_Tl(11, CuspDivisor(11)), std::invalid_argument);
    CHECK_THROWS_AS(hecke_Tl(4, CuspDivisor(11)), std::invalid_argument);
    CHECK_THROWS_AS(CuspDivisor(11) + CuspDivisor(13), std::invalid_argument);
}
