#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nscartan {

/// Integer divisor on the cusp torsor (Z/p)*, indexed by t = 1 .. p-1.
class CuspDivisor {
public:
    explicit CuspDivisor(uint32_t p);
    /// The divisor [t] with multiplicity `mult`.
    static CuspDivisor point(uint32_t p, uint32_t t, int64_t mult = 1);

    uint32_t p() const noexcept { return p_; }
    int64_t operator[](uint32_t t) const;
    void add(uint32_t t, int64_t mult);

    int64_t degree() const;
    std::vector<uint32_t> support() const;
    bool is_zero() const;

    CuspDivisor operator+(const CuspDivisor& rhs) const;
    CuspDivisor operator-(const CuspDivisor& rhs) const;
    CuspDivisor scaled(int64_t k) const;
    bool operator==(const CuspDivisor&) const = default;

    /// "[t=3: 1, t=4: 3]"; "0" for the zero divisor.
    std::string format() const;

private:
    void require_same(const CuspDivisor& rhs) const;
    uint32_t p_;
    std::vector<int64_t> coeff_;  // index 0 unused
};

/// sigma_l: t -> l t. Throws std::invalid_argument for l = 0 mod p.
CuspDivisor galois_act(int64_t l, const CuspDivisor& D);

/// T_l as an operator matrix on the basis cusps: column t holds 1 at l t and
/// l at l^-1 t. Throws std::invalid_argument unless l is a prime other than p.
std::vector<std::vector<int64_t>> hecke_matrix(uint32_t l, uint32_t p);
CuspDivisor hecke_Tl(uint32_t l, const CuspDivisor& D);

/// t -> -t.
CuspDivisor w_act(const CuspDivisor& D);

enum class CuspAutomorphism { Identity, W };
CuspDivisor apply(CuspAutomorphism u, const CuspDivisor& D);

/// u^{sigma_l} T_l (C - C') - T_l u (C - C'). Both modeled automorphisms are
/// defined over Q, so u^{sigma_l} = u.
CuspDivisor D_l(CuspAutomorphism u, uint32_t l, uint32_t C, uint32_t C_prime, uint32_t p);

/// Least C' != C with supp(T_l C) and supp(T_l C') disjoint; throws
/// std::runtime_error if none exists.
uint32_t disjoint_support_choice(uint32_t l, uint32_t C, uint32_t p);

/// Operator form of T_l equals sigma_l + l sigma_{l^-1} on every basis cusp.
bool eichler_shimura_shape_check(uint32_t l, uint32_t p);

/// Torsor relabeling t -> b t (change of basepoint).
CuspDivisor relabel(const CuspDivisor& D, uint32_t b);

}  // namespace nscartan
