#include "nscartan/cuspdiv.hpp"

#include <sstream>
#include <stdexcept>

#include "nscartan/finite_algebra.hpp"

namespace nscartan {

CuspDivisor::CuspDivisor(uint32_t p) : p_(p), coeff_(p, 0)
{
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("CuspDivisor: p must be an odd prime");
}

CuspDivisor CuspDivisor::point(uint32_t p, uint32_t t, int64_t mult)
{
    CuspDivisor D(p);
    D.add(t, mult);
    return D;
}

int64_t CuspDivisor::operator[](uint32_t t) const
{
    if (t == 0 || t >= p_) throw std::out_of_range("CuspDivisor: cusp index outside 1 .. p-1");
    return coeff_[t];
}

void CuspDivisor::add(uint32_t t, int64_t mult)
{
    if (t == 0 || t >= p_) throw std::out_of_range("CuspDivisor: cusp index outside 1 .. p-1");
    coeff_[t] = checked_add(coeff_[t], mult);
}

int64_t CuspDivisor::degree() const
{
    int64_t d = 0;
    for (int64_t c : coeff_) d = checked_add(d, c);
    return d;
}

std::vector<uint32_t> CuspDivisor::support() const
{
    std::vector<uint32_t> out;
    for (uint32_t t = 1; t < p_; ++t)
        if (coeff_[t] != 0) out.push_back(t);
    return out;
}

bool CuspDivisor::is_zero() const
{
    for (int64_t c : coeff_)
        if (c != 0) return false;
    return true;
}

void CuspDivisor::require_same(const CuspDivisor& rhs) const
{
    if (p_ != rhs.p_) throw std::invalid_argument("CuspDivisor: different levels");
}

CuspDivisor CuspDivisor::operator+(const CuspDivisor& rhs) const
{
    require_same(rhs);
    CuspDivisor out(*this);
    for (uint32_t t = 1; t < p_; ++t) out.coeff_[t] = checked_add(out.coeff_[t], rhs.coeff_[t]);
    return out;
}

CuspDivisor CuspDivisor::operator-(const CuspDivisor& rhs) const
{
    return *this + rhs.scaled(-1);
}

CuspDivisor CuspDivisor::scaled(int64_t k) const
{
    CuspDivisor out(*this);
    for (auto& c : out.coeff_) c = checked_mul(c, k);
    return out;
}

std::string CuspDivisor::format() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    os << "[";
    bool first = true;
    for (uint32_t t : support()) {
        os << (first ? "" : ", ") << "t=" << t << ": " << coeff_[t];
        first = false;
    }
    os << "]";
    return os.str();
}

CuspDivisor galois_act(int64_t l, const CuspDivisor& D)
{
    const uint32_t p = D.p();
    const int64_t lm = mod(l, p);
    if (lm == 0) throw std::invalid_argument("galois_act: l must be a unit mod p");
    CuspDivisor out(p);
    for (uint32_t t : D.support()) out.add(static_cast<uint32_t>(lm * t % p), D[t]);
    return out;
}

std::vector<std::vector<int64_t>> hecke_matrix(uint32_t l, uint32_t p)
{
    if (!is_prime(l) || l == p) throw std::invalid_argument("hecke_Tl: l must be a prime different from p");
    const int64_t lm = mod(l, p);
    const int64_t linv = inverse_mod(lm, p);
    // rows and columns indexed by cusps 1 .. p-1 (slot 0 unused)
    std::vector<std::vector<int64_t>> T(p, std::vector<int64_t>(p, 0));
    for (uint32_t t = 1; t < p; ++t) {
        T[lm * t % p][t] += 1;
        T[linv * t % p][t] += l;
    }
    return T;
}

CuspDivisor hecke_Tl(uint32_t l, const CuspDivisor& D)
{
    const uint32_t p = D.p();
    const auto T = hecke_matrix(l, p);
    CuspDivisor out(p);
    for (uint32_t s = 1; s < p; ++s) {
        int64_t acc = 0;
        for (uint32_t t = 1; t < p; ++t) acc = checked_add(acc, checked_mul(T[s][t], D[t]));
        if (acc != 0) out.add(s, acc);
    }
    return out;
}

CuspDivisor w_act(const CuspDivisor& D)
{
    return galois_act(-1, D);
}

CuspDivisor apply(CuspAutomorphism u, const CuspDivisor& D)
{
    return u == CuspAutomorphism::Identity ? D : w_act(D);
}

CuspDivisor D_l(CuspAutomorphism u, uint32_t l, uint32_t C, uint32_t C_prime, uint32_t p)
{
    if (C == C_prime) throw std::invalid_argument("D_l: cusps must differ");
    const CuspDivisor diff = CuspDivisor::point(p, C) - CuspDivisor::point(p, C_prime);
    return apply(u, hecke_Tl(l, diff)) - hecke_Tl(l, apply(u, diff));
}

uint32_t disjoint_support_choice(uint32_t l, uint32_t C, uint32_t p)
{
    const auto base = hecke_Tl(l, CuspDivisor::point(p, C)).support();
    for (uint32_t c = 1; c < p; ++c) {
        if (c == C) continue;
        bool disjoint = true;
        for (uint32_t t : hecke_Tl(l, CuspDivisor::point(p, c)).support())
            for (uint32_t s : base) disjoint = disjoint && s != t;
        if (disjoint) return c;
    }
    throw std::runtime_error("disjoint_support_choice: no cusp with disjoint T_l support");
}

bool eichler_shimura_shape_check(uint32_t l, uint32_t p)
{
    if (!is_prime(l) || l == p) throw std::invalid_argument("eichler_shimura_shape_check: l must be a prime != p");
    const int64_t linv = inverse_mod(mod(l, p), p);
    for (uint32_t t = 1; t < p; ++t) {
        const CuspDivisor e = CuspDivisor::point(p, t);
        const CuspDivisor shape = galois_act(l, e) + galois_act(linv, e).scaled(l);
        if (hecke_Tl(l, e) != shape) return false;
    }
    return true;
}

CuspDivisor relabel(const CuspDivisor& D, uint32_t b)
{
    return galois_act(b, D);
}

}  // namespace nscartan
