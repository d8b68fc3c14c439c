#include "nscartan/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace nscartan {

namespace {

void require_prime_at_least_5(uint32_t p, const char* who)
{
    if (p < 5 || !is_prime(p)) throw std::invalid_argument(std::string(who) + ": p must be a prime >= 5");
}

int64_t riemann_hurwitz(uint64_t degree, uint64_t nu2, uint64_t nu3, uint64_t cusps)
{
    const Rational g = Rational(1) + Rational(static_cast<int64_t>(degree), 12) -
                       Rational(static_cast<int64_t>(nu2), 4) - Rational(static_cast<int64_t>(nu3), 3) -
                       Rational(static_cast<int64_t>(cusps), 2);
    if (g.denominator() != 1 || g.numerator() < 0)
        throw std::logic_error("genus formula produced a non-integral or negative value");
    return g.numerator();
}

uint64_t euler_phi(uint64_t n)
{
    uint64_t out = n;
    for (uint64_t l : prime_factors(n)) out = out / l * (l - 1);
    return out;
}

}  // namespace

GenusData genus_ns_riemann_hurwitz(const CartanContext& ctx)
{
    const uint32_t p = ctx.p();
    GenusData g;
    g.degree = ctx.index(Subgroup::Cartan);
    g.nu2 = count_fixed_cosets(Mat2(p, 0, -1, 1, 0), Subgroup::Cartan, ctx);
    g.nu3 = count_fixed_cosets(Mat2(p, 0, -1, 1, 1), Subgroup::Cartan, ctx);
    // Orbits of <T> by Burnside; every T^k (k != 0) is conjugate to T.
    const uint64_t fixed_by_T = count_fixed_cosets(Mat2(p, 1, 1, 0, 1), Subgroup::Cartan, ctx);
    const uint64_t orbit_sum = g.degree + (p - 1) * fixed_by_T;
    if (orbit_sum % p != 0) throw std::logic_error("genus_ns: cusp orbit count is not an integer");
    g.cusps = orbit_sum / p;
    g.genus = riemann_hurwitz(g.degree, g.nu2, g.nu3, g.cusps);
    return g;
}

GenusData genus_ns_closed_form(uint32_t p)
{
    require_prime_at_least_5(p, "genus_ns_closed_form");
    GenusData g;
    g.degree = uint64_t{p} * (p - 1);
    g.nu2 = p % 4 == 3 ? 2 : 0;
    g.nu3 = p % 3 == 2 ? 2 : 0;
    g.cusps = p - 1;
    g.genus = riemann_hurwitz(g.degree, g.nu2, g.nu3, g.cusps);
    return g;
}

int64_t genus_ns(uint32_t p)
{
    require_prime_at_least_5(p, "genus_ns");
    CartanOptions opts;
    opts.max_level = std::max<uint32_t>(opts.max_level, p);
    const GenusData rh = genus_ns_riemann_hurwitz(build_cartan(p, opts));
    const GenusData closed = genus_ns_closed_form(p);
    if (rh.genus != closed.genus || rh.nu2 != closed.nu2 || rh.nu3 != closed.nu3 || rh.cusps != closed.cusps)
        throw std::logic_error("genus_ns: coset counts disagree with the closed form at p = " + std::to_string(p));
    return rh.genus;
}

uint64_t fixed_w(uint32_t p)
{
    require_prime_at_least_5(p, "fixed_w");
    return p % 4 == 1 ? (p - 1) / 2 : (p + 1) / 2;
}

int64_t genus_ns_plus(uint32_t p)
{
    const int64_t g = genus_ns(p);
    const int64_t rhs = 2 * g - 2 - static_cast<int64_t>(fixed_w(p));  // = 2(2g+ - 2)
    if (rhs % 4 != 0) throw std::logic_error("genus_ns_plus: non-integral genus at p = " + std::to_string(p));
    const int64_t g_plus = (rhs / 2 + 2) / 2;
    if (g_plus < 0) throw std::logic_error("genus_ns_plus: negative genus");
    return g_plus;
}

int64_t genus_X0(uint64_t N)
{
    if (N == 0) throw std::invalid_argument("genus_X0: N must be positive");
    const auto primes = prime_factors(N);
    uint64_t index = N;
    for (uint64_t l : primes) index = index / l * (l + 1);

    uint64_t nu2 = 0;
    if (N % 4 != 0) {
        nu2 = 1;
        for (uint64_t l : primes)
            if (l != 2) nu2 *= 1 + legendre(-1, static_cast<int64_t>(l));
    }
    uint64_t nu3 = 0;
    if (N % 9 != 0) {
        nu3 = 1;
        for (uint64_t l : primes) {
            if (l == 3) continue;
            // (-3/2) = -1: 2 is inert in Q(sqrt(-3)).
            const int chi = l == 2 ? -1 : legendre(-3, static_cast<int64_t>(l));
            nu3 *= static_cast<uint64_t>(1 + chi);
        }
    }
    uint64_t cusps = 0;
    for (uint64_t d = 1; d <= N; ++d)
        if (N % d == 0) cusps += euler_phi(std::gcd(d, N / d));
    return riemann_hurwitz(index, nu2, nu3, cusps);
}

NewpartCheck newpart_dim_check(uint32_t p)
{
    NewpartCheck c;
    c.genus_ns = genus_ns(p);
    c.genus_X0_p2 = genus_X0(uint64_t{p} * p);
    c.genus_X0_p = genus_X0(p);
    c.ok = c.genus_ns == c.genus_X0_p2 - 2 * c.genus_X0_p;
    if (!c.ok)
        c.diagnostic = "g_ns(" + std::to_string(p) + ") = " + std::to_string(c.genus_ns) + " but g0(p^2) - 2 g0(p) = " +
                       std::to_string(c.genus_X0_p2 - 2 * c.genus_X0_p);
    return c;
}

int64_t class_number_dirichlet(uint32_t p)
{
    if (p <= 3 || !is_prime(p) || p % 4 != 3)
        throw std::invalid_argument("class_number: p must be a prime = 3 mod 4 with p > 3");
    int64_t sum = 0;
    for (int64_t m = 1; m < p; ++m) sum = checked_add(sum, m * legendre(m, p));
    if (sum % p != 0) throw std::logic_error("class_number: character sum not divisible by p");
    return -sum / p;
}

int64_t class_number_reduced_forms(int64_t D)
{
    if (D >= 0 || mod(D, 4) > 1) throw std::invalid_argument("class_number_reduced_forms: bad discriminant");
    int64_t h = 0;
    for (int64_t a = 1; 3 * a * a <= -D; ++a) {
        for (int64_t b = -a; b <= a; ++b) {
            const int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const int64_t c = num / (4 * a);
            if (c < a) continue;
            if ((std::abs(b) == a || a == c) && b < 0) continue;
            ++h;
        }
    }
    return h;
}

int64_t class_number(uint32_t p)
{
    const int64_t h = class_number_dirichlet(p);
    const int64_t h_forms = class_number_reduced_forms(-static_cast<int64_t>(p));
    if (h != h_forms)
        throw std::logic_error("class_number: Dirichlet value " + std::to_string(h) + " != reduced-forms count " +
                               std::to_string(h_forms));
    if (h > static_cast<int64_t>(p - 1) / 2) throw std::logic_error("class_number: bound h <= (p-1)/2 violated");
    return h;
}

std::pair<int64_t, int64_t> cm_split(uint32_t p)
{
    const int64_t g = genus_ns(p);
    const int64_t gc = p % 4 == 1 ? 0 : class_number(p);
    if (g < gc) throw std::logic_error("cm_split: CM part exceeds the genus");
    return {gc, g - gc};
}

bool genus_gap_holds(uint32_t p)
{
    return genus_ns(p) > static_cast<int64_t>(p);
}

std::string quadratic_field_tag(uint32_t p)
{
    return p % 4 == 1 ? "Q(sqrt(" + std::to_string(p) + "))" : "Q(sqrt(-" + std::to_string(p) + "))";
}

CurveInvariants curve_invariants(uint32_t p)
{
    require_prime_at_least_5(p, "curve_invariants");
    CurveInvariants inv;
    inv.p = p;
    CartanOptions opts;
    opts.max_level = std::max<uint32_t>(opts.max_level, p);
    const GenusData rh = genus_ns_riemann_hurwitz(build_cartan(p, opts));
    inv.genus_ns = genus_ns(p);
    inv.genus_ns_plus = genus_ns_plus(p);
    inv.cusps_ns = rh.cusps;
    inv.cusps_ns_plus = rh.cusps / 2;
    inv.nu2 = rh.nu2;
    inv.nu3 = rh.nu3;
    inv.fixed_w = fixed_w(p);
    std::tie(inv.g_C, inv.g_H) = cm_split(p);
    inv.field_tag = quadratic_field_tag(p);
    inv.newpart_ok = newpart_dim_check(p).ok;
    inv.genus_gap = inv.genus_ns > static_cast<int64_t>(p);
    return inv;
}

}  // namespace nscartan
