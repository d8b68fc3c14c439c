#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "nscartan/finite_algebra.hpp"
#include "nscartan/gl2_cartan.hpp"

namespace nscartan {

using Rational = boost::rational<int64_t>;

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a finite field.
class WeierstrassCurve {
public:
    /// Throws std::invalid_argument if the discriminant vanishes.
    WeierstrassCurve(FieldHandle field, Gf a1, Gf a2, Gf a3, Gf a4, Gf a6);

    static WeierstrassCurve short_form(FieldHandle field, Gf a, Gf b);
    /// Canonical model with the given j-invariant:
    ///   char 2:  y^2 + y = x^3 (j = 0),        y^2 + xy = x^3 + 1/j
    ///   char 3:  y^2 = x^3 - x (j = 0),        y^2 = x^3 + x^2 - 1/j
    ///   char>=5: y^2 = x^3 + 1, y^2 = x^3 + x, y^2 = x^3 + 3k x + 2k, k = j/(1728 - j)
    static WeierstrassCurve with_j_invariant(FieldHandle field, Gf j);

    const FieldHandle& field() const noexcept { return field_; }
    uint32_t characteristic() const noexcept { return field_->characteristic(); }
    Gf a1() const noexcept { return a1_; }
    Gf a2() const noexcept { return a2_; }
    Gf a3() const noexcept { return a3_; }
    Gf a4() const noexcept { return a4_; }
    Gf a6() const noexcept { return a6_; }
    Gf b2() const;
    Gf b4() const;
    Gf b6() const;
    Gf b8() const;
    Gf c4() const;
    Gf discriminant() const;
    Gf j_invariant() const;

    bool contains(Gf x, Gf y) const;
    /// Same equation over an extension field.
    WeierstrassCurve base_change(const FieldEmbedding& embedding) const;

    std::string format() const;

private:
    FieldHandle field_;
    Gf a1_, a2_, a3_, a4_, a6_;
};

/// Affine point or the point at infinity.
struct CurvePoint {
    Gf x{}, y{};
    bool infinity = true;
    bool operator==(const CurvePoint&) const = default;
};

CurvePoint negate(const WeierstrassCurve& E, const CurvePoint& P);
CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint multiply(const WeierstrassCurve& E, const CurvePoint& P, int64_t n);

/// #E(F) including the point at infinity; asserts the Hasse bound.
uint64_t point_count(const WeierstrassCurve& E);
/// #E over an extension field of E's field of definition.
uint64_t point_count(const WeierstrassCurve& E, const FieldHandle& extension);
/// q + 1 - #E(F_q) with q the size of E's field.
int64_t frobenius_trace(const WeierstrassCurve& E);
bool is_supersingular(const WeierstrassCurve& E);

/// Order of Aut(E) over E's field of definition, by scanning substitutions
/// (u, r, s, t) that fix the coefficient vector.
uint64_t automorphism_order(const WeierstrassCurve& E);

/// Non-singular curves of the canonical family for the field's characteristic
/// (short form, char-3 form without a1/a3, or full form in char 2).
std::vector<WeierstrassCurve> enumerate_curves(const FieldHandle& field);

struct SupersingularEntry {
    Gf j;
    uint64_t aut_order;
    /// Degree r of the field F_{q^r} over which the automorphism count stabilized.
    unsigned stabilization_degree;
};

struct SupersingularInventory {
    uint32_t q;
    FieldHandle field;  // F_{q^2}, home of the supersingular j-invariants
    std::vector<SupersingularEntry> entries;
    Rational mass;
};

/// One entry per geometric isomorphism class of supersingular curves in
/// characteristic q. Throws std::logic_error if the mass differs from (q-1)/24.
SupersingularInventory supersingular_inventory(uint32_t q, uint64_t bound = kDefaultFieldBound);

/// Division-polynomial recurrences for general Weierstrass equations, in x
/// only: f_n = psi_n for odd n and f_n = psi_n / psi_2 for even n.
/// Optionally every value is reduced modulo a fixed polynomial.
class DivisionPolynomials {
public:
    explicit DivisionPolynomials(const WeierstrassCurve& E);
    DivisionPolynomials(const WeierstrassCurve& E, Polynomial modulus);

    const Polynomial& f(unsigned n);
    /// psi_2^2 = 4x^3 + b2 x^2 + 2 b4 x + b6.
    const Polynomial& psi2_squared() const noexcept { return beta_; }
    /// x([n]P) as numerator / denominator polynomials in x(P).
    std::pair<Polynomial, Polynomial> multiplication_x(unsigned n);

private:
    Polynomial reduce(Polynomial poly) const;

    WeierstrassCurve curve_;
    std::optional<Polynomial> modulus_;
    Polynomial beta_;
    std::vector<std::optional<Polynomial>> cache_;
};

/// psi_m for an odd m not divisible by the characteristic; degree (m^2-1)/2.
Polynomial division_polynomial(const WeierstrassCurve& E, unsigned m);

/// Conjugacy class of the field-size-power Frobenius acting on E[p].
FrobeniusClass frobenius_matrix_class(const WeierstrassCurve& E, uint32_t p);

/// True iff Frobenius acts on E[p] as multiplication by lambda, tested via
/// x^Q * den_lambda == num_lambda modulo psi_p.
bool frobenius_is_scalar(const WeierstrassCurve& E, uint32_t p, uint32_t lambda);

}  // namespace nscartan
