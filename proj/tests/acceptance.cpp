// One line per acceptance criterion. Every comparison is exact: integer
// equality or exact rational ordering.
#include <algorithm>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "nscartan/counting.hpp"
#include "nscartan/cuspdiv.hpp"
#include "nscartan/ellcurve.hpp"
#include "nscartan/gates.hpp"
#include "nscartan/invariants.hpp"
#include "nscartan/lattices.hpp"
#include "oracles.hpp"

using namespace nscartan;

namespace {

constexpr int64_t kTolerance = 0;  // exact-integer comparisons throughout

std::string data(const char* name)
{
    return std::string(NSCARTAN_DATA_DIR) + "/" + name;
}

bool exact(int64_t got, int64_t want)
{
    return std::llabs(got - want) <= kTolerance;
}

int failures = 0;

void criterion(int n, const std::function<bool(std::string&)>& body)
{
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    failures += ok ? 0 : 1;
    std::printf("criterion %d: %s  %s\n", n, ok ? "PASS" : "FAIL", detail.c_str());
}

}  // namespace

int main()
{
    int64_t t121 = -1, t169 = -1;

    criterion(1, [&](std::string& d) {
        t121 = count_points_trace(load_newform_records(data("level121_ns.txt")), 2, 2);
        d = "level 121 trace count over F_4 = " + std::to_string(t121) + " (want 15)";
        return exact(t121, 15);
    });

    criterion(2, [&](std::string& d) {
        t169 = count_points_trace(load_newform_records(data("level169_nsplus.txt")), 2, 2);
        d = "level 169 trace count over F_4 = " + std::to_string(t169) + " (want 11)";
        return exact(t169, 11);
    });

    criterion(3, [&](std::string& d) {
        const auto a = count_points_moduli(11, 2, 2, CurveVariant::Ns);
        const auto b = count_points_moduli(13, 2, 2, CurveVariant::NsPlus);
        std::vector<int64_t> parts;
        for (const auto& c : a.breakdown) parts.push_back(static_cast<int64_t>(c.count));
        std::sort(parts.rbegin(), parts.rend());
        std::string s;
        for (int64_t x : parts) s += std::to_string(x) + " + ";
        d = "ns(11) = " + std::to_string(a.total) + ", ns+(13) = " + std::to_string(b.total) + ", breakdown " + s +
            std::to_string(a.cusps) + " cusps";
        return exact(a.total, 15) && exact(b.total, 11) && exact(a.total, t121) && exact(b.total, t169) &&
               parts == std::vector<int64_t>{11, 2, 2, 0} && a.cusps == 0;
    });

    criterion(4, [&](std::string& d) {
        bool ok = true;
        for (uint32_t q : {2u, 3u, 5u, 7u, 13u}) {
            const auto inv = supersingular_inventory(q);
            Rational mass(0);
            for (const auto& e : inv.entries) mass += Rational(1, static_cast<int64_t>(e.aut_order));
            ok = ok && mass == Rational(int64_t{q} - 1, 24);
            d += "q=" + std::to_string(q) + ":" + std::to_string(mass.numerator()) + "/" +
                 std::to_string(mass.denominator()) + " ";
        }
        return ok;
    });

    criterion(5, [&](std::string& d) {
        bool ok = true;
        for (uint32_t p : {11u, 13u, 17u})
            for (uint32_t q : {2u, 3u}) {
                const auto r = count_points_moduli(p, q, 2, CurveVariant::Ns);
                const Rational bound(int64_t{p} * (p - 1) * (q - 1), 12);
                ok = ok && Rational(static_cast<int64_t>(r.supersingular_subtotal)) >= bound;
                d += "(" + std::to_string(p) + "," + std::to_string(q) + "):" + std::to_string(r.supersingular_subtotal) + " ";
            }
        return ok;
    });

    criterion(6, [&](std::string& d) {
        bool ok = genus_ns(5) == 0 && genus_ns(7) == 1 && genus_ns(11) == 4 && genus_ns(13) == 8 &&
                  genus_ns_plus(7) == 0 && genus_ns_plus(11) == 1 && genus_ns_plus(13) == 3;
        for (uint32_t p : oracle::primes(5, 31)) {
            const auto c = newpart_dim_check(p);
            ok = ok && c.ok && c.genus_ns == c.genus_X0_p2 - 2 * c.genus_X0_p;
        }
        d = "genus_ns(5,7,11,13) = 0,1,4,8; genus_ns+(7,11,13) = 0,1,3; new-part relation for 5 <= p <= 31";
        return ok;
    });

    criterion(7, [&](std::string& d) {
        bool ok = class_number(7) == 1 && class_number(11) == 1 && class_number(23) == 3;
        int n = 0;
        for (uint32_t p : oracle::primes(7, 199)) {
            if (p % 4 != 3) continue;
            const int64_t h = class_number_dirichlet(p);
            ok = ok && h == oracle::reduced_forms(-int64_t(p)) && h <= int64_t(p - 1) / 2;
            ++n;
        }
        d = std::to_string(n) + " primes p = 3 mod 4 below 200 against the reduced-forms oracle";
        return ok;
    });

    criterion(8, [&](std::string& d) {
        bool ok = true;
        for (uint32_t p : oracle::primes(5, 47)) {
            const auto s = cartan_fixed_sublist(p);
            ok = ok && s.size() == 1 && s.front().is_standard();
        }
        d = "[ZxZ] for every prime 5 <= p <= 47";
        return ok;
    });

    criterion(9, [&](std::string& d) {
        bool ok = true;
        uint64_t classes = 0;
        for (uint32_t p : oracle::primes(5, 31)) {
            const auto ctx = build_cartan(p);
            for (uint32_t t = 0; t < p; ++t)
                for (uint32_t n = 1; n < p; ++n) {
                    const FrobeniusClass cls = classify_charpoly(p, t, n, false);
                    const uint64_t got = count_fixed_cosets(cls.representative(), Subgroup::Cartan, ctx);
                    ok = ok && got == (cls.is_nonsplit() ? 2u : 0u);
                    ++classes;
                }
            for (uint32_t l = 1; l < p; ++l) {
                ok = ok && count_fixed_cosets(Mat2::scalar(p, l), Subgroup::Cartan, ctx) == uint64_t{p} * (p - 1);
                ++classes;
            }
            if (p <= 7) {
                // independent brute force over all of GL_2(F_p)
                for (uint32_t t = 0; t < p; ++t)
                    for (uint32_t n = 1; n < p; ++n) {
                        const Mat2 m = classify_charpoly(p, t, n, false).representative();
                        ok = ok && count_fixed_cosets(m, Subgroup::Cartan, ctx) ==
                                       oracle::fixed_cosets_bruteforce({m.a(), m.b(), m.c(), m.d()}, p, ctx.alpha());
                    }
            }
        }
        d = std::to_string(classes) + " classes for p <= 31; GL_2 oracle for p <= 7";
        return ok;
    });

    criterion(10, [&](std::string& d) {
        bool ok = true;
        for (uint32_t p : oracle::primes(11, 97)) ok = ok && hyperelliptic_gate(p, CurveVariant::Ns).verdict == Verdict::Pass;
        for (uint32_t p : oracle::primes(13, 97))
            ok = ok && hyperelliptic_gate(p, CurveVariant::NsPlus).verdict == Verdict::Pass;
        const auto first = minimal_cusp_preservation_prime(97);
        std::vector<uint32_t> open;
        for (uint32_t p : oracle::primes(11, 97))
            if (full_aut_gate(p).verdict == Verdict::Pass) open.push_back(p);
        const uint32_t ray = ray_class_max_prime(97);
        std::string s;
        for (uint32_t p : open) s += std::to_string(p) + " ";
        d = "cusp gate opens at " + (first ? std::to_string(*first) : std::string("none")) + ", full-Aut open { " + s +
            "}, ray-class max " + std::to_string(ray);
        return ok && first == 37u && open == std::vector<uint32_t>{37, 61, 73, 97} && ray == 7;
    });

    criterion(11, [&](std::string& d) {
        bool ok = true;
        uint64_t pairs = 0;
        for (uint32_t p : {11u, 13u, 17u})
            for (uint32_t l : {2u, 3u, 5u, 7u})
                for (uint32_t C = 1; C < p; ++C) {
                    const auto D = CuspDivisor::point(p, C, 3);
                    ok = ok && hecke_Tl(l, D).degree() == int64_t(l + 1) * D.degree();
                    for (uint32_t Cp = 1; Cp < p; ++Cp) {
                        if (Cp == C) continue;
                        ok = ok && D_l(CuspAutomorphism::Identity, l, C, Cp, p).is_zero() &&
                             D_l(CuspAutomorphism::W, l, C, Cp, p).is_zero();
                        ++pairs;
                    }
                }
        for (uint32_t p : oracle::primes(11, 97))
            for (uint32_t l : {2u, 3u, 5u, 7u})
                for (uint32_t C = 1; C < p; ++C) ok = ok && disjoint_support_choice(l, C, p) != C;
        d = std::to_string(pairs) + " (p, l, C, C') quadruples; disjoint choice for 11 <= p <= 97";
        return ok;
    });

    criterion(12, [&](std::string& d) {
        bool ok = true;
        uint64_t runs = 0;
        for (auto [p, q, v] : {std::tuple{11u, 2u, CurveVariant::Ns}, std::tuple{13u, 2u, CurveVariant::NsPlus},
                               std::tuple{11u, 3u, CurveVariant::Ns}, std::tuple{13u, 3u, CurveVariant::Ns}}) {
            const int64_t base = count_points_moduli(p, q, 2, v).total;
            for (uint32_t alpha : nonsquares(p))
                for (CosetOrder o : {CosetOrder::Ascending, CosetOrder::Descending}) {
                    ModuliOptions opts;
                    opts.cartan.alpha = alpha;
                    opts.cartan.order = o;
                    ok = ok && count_points_moduli(p, q, 2, v, opts).total == base;
                    ++runs;
                }
        }
        for (uint32_t p : {11u, 13u, 17u})
            for (uint32_t b = 1; b < p; ++b)
                for (uint32_t l : {2u, 3u, 5u, 7u})
                    for (uint32_t C = 1; C < p; ++C) {
                        const auto D = CuspDivisor::point(p, C) - CuspDivisor::point(p, (C % (p - 1)) + 1);
                        ok = ok && hecke_Tl(l, relabel(D, b)) == relabel(hecke_Tl(l, D), b) &&
                             w_act(relabel(D, b)) == relabel(w_act(D), b);
                    }
        d = std::to_string(runs) + " moduli runs over non-squares and coset orders; relabeling for p in {11,13,17}";
        return ok;
    });

    return failures == 0 ? 0 : 1;
}
