// Independent reference computations used only by the tests. Nothing here
// calls into the library.
#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline bool is_prime(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<uint32_t> primes(uint32_t lo, uint32_t hi)
{
    std::vector<uint32_t> v;
    for (uint32_t n = lo; n <= hi; ++n)
        if (is_prime(n)) v.push_back(n);
    return v;
}

inline int64_t md(int64_t a, int64_t m)
{
    a %= m;
    return a < 0 ? a + m : a;
}

inline std::set<int64_t> nonzero_squares(int64_t p)
{
    std::set<int64_t> s;
    for (int64_t x = 1; x < p; ++x) s.insert(x * x % p);
    return s;
}

/// #E(F_p) for y^2 = x^3 + a x + b by direct enumeration.
inline uint64_t short_curve_count(int64_t p, int64_t a, int64_t b)
{
    std::vector<int> sq(p, 0);
    for (int64_t y = 0; y < p; ++y) sq[y * y % p]++;
    uint64_t n = 1;
    for (int64_t x = 0; x < p; ++x) n += sq[md(x * x % p * x + a * x + b, p)];
    return n;
}

/// Reduced forms (a, b, c) with b^2 - 4ac = D < 0: |b| <= a <= c, b >= 0 when |b| = a or a = c.
inline int64_t reduced_forms(int64_t D)
{
    int64_t h = 0;
    for (int64_t a = 1; 3 * a * a <= -D; ++a)
        for (int64_t b = -a + 1; b <= a; ++b) {
            const int64_t num = b * b - D;
            if (num % (4 * a) != 0) continue;
            const int64_t c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            ++h;
        }
    return h;
}

/// 2x2 matrices over F_p as {a, b, c, d}.
using M = std::array<int64_t, 4>;

inline M mul(const M& x, const M& y, int64_t p)
{
    return {(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p, (x[2] * y[0] + x[3] * y[2]) % p,
            (x[2] * y[1] + x[3] * y[3]) % p};
}

inline int64_t det(const M& x, int64_t p) { return md(x[0] * x[3] - x[1] * x[2], p); }

inline int64_t inv(int64_t a, int64_t p)
{
    int64_t r = 1, e = p - 2;
    a = md(a, p);
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

inline M inverse(const M& x, int64_t p)
{
    const int64_t di = inv(det(x, p), p);
    return {x[3] * di % p, md(-x[1], p) * di % p, md(-x[2], p) * di % p, x[0] * di % p};
}

/// Number of right cosets C g of C = {[[x, alpha y], [y, x]]} with C g m = C g,
/// counted as #{g in GL_2 : g m g^-1 in C} / |C|.
inline uint64_t fixed_cosets_bruteforce(const M& m, int64_t p, int64_t alpha)
{
    uint64_t hits = 0;
    for (int64_t a = 0; a < p; ++a)
        for (int64_t b = 0; b < p; ++b)
            for (int64_t c = 0; c < p; ++c)
                for (int64_t d = 0; d < p; ++d) {
                    const M g{a, b, c, d};
                    if (det(g, p) == 0) continue;
                    const M k = mul(mul(g, m, p), inverse(g, p), p);
                    if (k[0] == k[3] && k[1] == alpha * k[2] % p) ++hits;
                }
    return hits / static_cast<uint64_t>(p * p - 1);
}

/// alpha^k + conj(alpha)^k for the roots of x^2 - a x + q: trace of [[a, -q], [1, 0]]^k.
inline int64_t power_sum(int64_t a, int64_t q, unsigned k)
{
    int64_t m[4] = {1, 0, 0, 1};
    for (unsigned i = 0; i < k; ++i) {
        const int64_t n0 = m[0] * a + m[1], n1 = -m[0] * q;
        const int64_t n2 = m[2] * a + m[3], n3 = -m[2] * q;
        m[0] = n0, m[1] = n1, m[2] = n2, m[3] = n3;
    }
    return m[0] + m[3];
}

}  // namespace oracle
