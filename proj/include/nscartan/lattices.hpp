#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "nscartan/ellcurve.hpp"
#include "nscartan/verdict.hpp"

namespace nscartan {

/// Integer 2x2 matrix [[a, b], [c, d]] acting on row vectors from the right.
struct IntMat2 {
    int64_t a = 1, b = 0, c = 0, d = 1;
    int64_t det() const { return checked_add(checked_mul(a, d), -checked_mul(b, c)); }
    IntMat2 operator*(const IntMat2& r) const;
    bool operator==(const IntMat2&) const = default;
};

/// Lifts an element of SL_2(F_p) to SL_2(Z); `shift` selects among lifts
/// (different shifts give different integer matrices with the same reduction).
/// Throws std::invalid_argument if det m != 1.
IntMat2 lift_to_sl2z(const Mat2& m, int64_t shift = 0);

using RationalVec = std::array<Rational, 2>;

/// Homothety class of a lattice in Q^2 commensurable with Z x Z, in the
/// canonical basis (M, g/h), (0, 1) with M > 0, 0 <= g < h, gcd(g, h) = 1.
class HomothetyLattice {
public:
    /// Canonical class of the lattice spanned by two independent rational rows.
    static HomothetyLattice from_basis(const RationalVec& r1, const RationalVec& r2);
    static HomothetyLattice canonical(Rational M, int64_t g, int64_t h);

    Rational M() const { return M_; }
    int64_t g() const { return g_; }
    int64_t h() const { return h_; }
    std::array<RationalVec, 2> basis() const;
    bool is_standard() const { return M_ == Rational(1) && g_ == 0; }

    bool operator==(const HomothetyLattice&) const = default;
    std::string format() const;

private:
    HomothetyLattice(Rational M, int64_t g, int64_t h) : M_(M), g_(g), h_(h) {}
    Rational M_;
    int64_t g_ = 0;
    int64_t h_ = 1;
};

/// One entry of the Gamma(p)-fixed list, before canonicalization.
struct LatticeFamilyMember {
    std::string family;  // "<(1,g),(0,p)>", "<(1,0),(0,p)>", "<(p,0),(0,1)>", "ZxZ"
    int64_t g = 0;
    std::array<RationalVec, 2> basis;
    HomothetyLattice lattice;
};

/// The four families as listed, p + 3 members (one pair coincides).
std::vector<LatticeFamilyMember> gamma_p_family_members(uint32_t p);

/// Distinct homothety classes fixed by Gamma(p), in family order:
/// p + 2 classes. Each is checked against the generators
/// [[1,p],[0,1]], [[1,0],[p,1]], [[1+p,p],[-p,1-p]] of Gamma(p) elements;
/// std::logic_error if one is not fixed.
std::vector<HomothetyLattice> gamma_p_fixed_lattices(uint32_t p);

/// L m == L for the row-vector action, by membership of the image basis rows
/// plus the index argument (det m = 1). Throws std::invalid_argument if
/// det m != 1.
bool fixes(const IntMat2& m, const HomothetyLattice& L);

/// Congruence form of `fixes` for the listed families, std::nullopt for a
/// lattice outside them.
std::optional<bool> fixes_by_congruence(const IntMat2& m, const HomothetyLattice& L, uint32_t p);

/// Norm-one pairs (x, y): x^2 - alpha y^2 = 1 mod p.
std::vector<std::pair<uint32_t, uint32_t>> norm_one_pairs(uint32_t p, uint32_t alpha);

/// Listed lattices fixed by every [[x, alpha y], [y, x]] with x^2 - alpha y^2 = 1.
std::vector<HomothetyLattice> cartan_fixed_sublist(uint32_t p, std::optional<uint32_t> alpha = std::nullopt);

/// Normalizer verdict; declines when genus_ns(p) < 2.
GateEntry normalizer_verdict(uint32_t p);

}  // namespace nscartan
