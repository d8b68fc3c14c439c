#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace nscartan {

// ---------------------------------------------------------------------------
// Integer helpers
// ---------------------------------------------------------------------------

bool is_prime(uint64_t n);

/// Least non-negative residue of a modulo m (m > 0).
int64_t mod(int64_t a, int64_t m);

/// Overflow-checked arithmetic; throws std::overflow_error.
int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

/// Modular inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
int64_t inverse_mod(int64_t a, int64_t m);

int64_t pow_mod(int64_t base, uint64_t exponent, int64_t m);

/// Distinct prime factors of n in increasing order.
std::vector<uint64_t> prime_factors(uint64_t n);

/// Legendre symbol (m/p) for an odd prime p.
int legendre(int64_t m, int64_t p);

// ---------------------------------------------------------------------------
// Prime field elements
// ---------------------------------------------------------------------------

class PrimeFieldElement {
public:
    PrimeFieldElement(int64_t value, uint32_t modulus);

    uint32_t value() const noexcept { return value_; }
    uint32_t modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    PrimeFieldElement operator+(const PrimeFieldElement& rhs) const;
    PrimeFieldElement operator-(const PrimeFieldElement& rhs) const;
    PrimeFieldElement operator*(const PrimeFieldElement& rhs) const;
    PrimeFieldElement operator/(const PrimeFieldElement& rhs) const;
    PrimeFieldElement operator-() const;
    PrimeFieldElement inverse() const;
    PrimeFieldElement pow(uint64_t exponent) const;

    bool operator==(const PrimeFieldElement&) const = default;

private:
    void require_same_field(const PrimeFieldElement& rhs) const;

    uint32_t value_;
    uint32_t modulus_;
};

/// Smallest positive quadratic non-residue modulo an odd prime p.
PrimeFieldElement find_nonsquare(uint32_t p);

/// Non-residues modulo p in increasing order (used to vary the Cartan choice).
std::vector<uint32_t> nonsquares(uint32_t p);

// ---------------------------------------------------------------------------
// Finite fields F_{c^r}
// ---------------------------------------------------------------------------

/// Element of a GaloisField, stored as the base-c encoding of its coefficient
/// vector over the prime subfield: v = sum coeff_i * c^i.
struct Gf {
    uint32_t v = 0;
    constexpr auto operator<=>(const Gf&) const = default;
};

class GaloisField;
using FieldHandle = std::shared_ptr<const GaloisField>;

inline constexpr uint64_t kDefaultFieldBound = uint64_t{1} << 20;

/// Builds F_{characteristic^degree} over the lexicographically smallest monic
/// irreducible polynomial. Throws std::invalid_argument for a non-prime
/// characteristic or a field larger than `bound`.
FieldHandle build_ext_field(uint32_t characteristic, unsigned degree,
                            uint64_t bound = kDefaultFieldBound);

/// Immutable finite field with log/antilog tables. Shareable across threads.
class GaloisField {
public:
    GaloisField(uint32_t characteristic, unsigned degree, std::vector<uint32_t> modulus);

    uint32_t characteristic() const noexcept { return char_; }
    unsigned degree() const noexcept { return degree_; }
    uint32_t size() const noexcept { return size_; }
    /// Monic defining polynomial, coefficients c_0 .. c_degree.
    const std::vector<uint32_t>& defining_polynomial() const noexcept { return modulus_; }
    Gf primitive_element() const noexcept { return primitive_; }
    /// Class of the polynomial variable (equals from_int(0) when degree == 1).
    Gf generator() const;

    Gf zero() const noexcept { return Gf{0}; }
    Gf one() const noexcept { return Gf{1}; }
    Gf from_int(int64_t n) const;
    Gf from_coefficients(const std::vector<uint32_t>& coeffs) const;
    std::vector<uint32_t> coefficients(Gf a) const;
    bool in_prime_field(Gf a) const noexcept { return a.v < char_; }

    Gf add(Gf a, Gf b) const;
    Gf sub(Gf a, Gf b) const;
    Gf neg(Gf a) const;
    Gf mul(Gf a, Gf b) const;
    Gf inv(Gf a) const;
    Gf div(Gf a, Gf b) const;
    Gf pow(Gf a, uint64_t exponent) const;
    Gf square(Gf a) const { return mul(a, a); }

    /// a^(c^k), the k-fold characteristic-power map.
    Gf frobenius(Gf a, unsigned k = 1) const;
    /// Norm and trace down to the prime subfield, returned as residues.
    uint32_t norm(Gf a) const;
    uint32_t trace(Gf a) const;
    bool is_square(Gf a) const;

    std::string format(Gf a) const;

private:
    uint32_t mul_slow(uint32_t a, uint32_t b) const;
    uint32_t pow_slow(uint32_t a, uint64_t e) const;
    void build_tables();

    uint32_t char_;
    unsigned degree_;
    uint32_t size_;
    std::vector<uint32_t> modulus_;
    Gf primitive_{};
    std::vector<uint32_t> exp_;  // length 2 * (size - 1)
    std::vector<uint32_t> log_;
};

/// Field homomorphism F_small -> F_big, tabulated over all of F_small.
class FieldEmbedding {
public:
    FieldEmbedding(FieldHandle from, FieldHandle to);

    Gf operator()(Gf a) const { return table_.at(a.v); }
    const FieldHandle& source() const noexcept { return from_; }
    const FieldHandle& target() const noexcept { return to_; }

private:
    FieldHandle from_;
    FieldHandle to_;
    std::vector<Gf> table_;
};

// ---------------------------------------------------------------------------
// Univariate polynomials over a GaloisField
// ---------------------------------------------------------------------------

class Polynomial {
public:
    explicit Polynomial(FieldHandle field);
    Polynomial(FieldHandle field, std::vector<Gf> coeffs);

    static Polynomial constant(FieldHandle field, Gf c);
    static Polynomial monomial(FieldHandle field, Gf c, unsigned degree);
    static Polynomial x(FieldHandle field) { return monomial(std::move(field), Gf{1}, 1); }

    const FieldHandle& field() const noexcept { return field_; }
    const std::vector<Gf>& coefficients() const noexcept { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    Gf coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Gf{0}; }
    Gf leading() const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator%(const Polynomial& rhs) const { return divmod(rhs).second; }
    Polynomial operator-() const;
    Polynomial scaled(Gf c) const;

    /// Quotient and remainder; throws std::domain_error for a zero divisor.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
    Polynomial monic() const;
    Gf eval(Gf x) const;

    bool operator==(const Polynomial& rhs) const;

    std::string format() const;

private:
    void trim();
    void require_same_field(const Polynomial& rhs) const;

    FieldHandle field_;
    std::vector<Gf> coeffs_;
};

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// base^exponent reduced modulo `modulus`.
Polynomial pow_mod(const Polynomial& base, uint64_t exponent, const Polynomial& modulus);

/// Ben-Or irreducibility test over the polynomial's field.
bool is_irreducible(const Polynomial& f);

}  // namespace nscartan
