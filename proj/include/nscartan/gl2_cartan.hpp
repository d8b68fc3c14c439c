#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace nscartan {

/// 2x2 matrix over F_p, entries [[a, b], [c, d]] reduced into [0, p).
class Mat2 {
public:
    Mat2(uint32_t p, int64_t a, int64_t b, int64_t c, int64_t d);

    static Mat2 identity(uint32_t p) { return {p, 1, 0, 0, 1}; }
    static Mat2 scalar(uint32_t p, int64_t lambda) { return {p, lambda, 0, 0, lambda}; }
    /// Inverse of encoding(): code = a + p*b + p^2*c + p^3*d.
    static Mat2 from_encoding(uint32_t p, uint64_t code);

    uint32_t modulus() const noexcept { return p_; }
    uint32_t a() const noexcept { return a_; }
    uint32_t b() const noexcept { return b_; }
    uint32_t c() const noexcept { return c_; }
    uint32_t d() const noexcept { return d_; }

    uint32_t det() const noexcept;
    uint32_t trace() const noexcept;
    bool is_invertible() const noexcept { return det() != 0; }
    bool is_scalar() const noexcept { return b_ == 0 && c_ == 0 && a_ == d_; }
    uint64_t encoding() const noexcept;

    Mat2 operator*(const Mat2& rhs) const;
    Mat2 operator+(const Mat2& rhs) const;
    Mat2 scaled(int64_t lambda) const;
    /// Throws std::domain_error when singular.
    Mat2 inverse() const;
    Mat2 pow(uint64_t e) const;
    /// Multiplicative order; throws std::domain_error when singular.
    uint64_t order() const;

    bool operator==(const Mat2&) const = default;

    std::string format() const;

private:
    uint32_t p_, a_, b_, c_, d_;
};

/// g * x * g^-1
Mat2 conjugate(const Mat2& g, const Mat2& x);

// ---------------------------------------------------------------------------
// Conjugacy-class descriptor of a Frobenius matrix
// ---------------------------------------------------------------------------

struct ScalarClass {
    uint32_t lambda;
    bool operator==(const ScalarClass&) const = default;
};
/// Irreducible characteristic polynomial x^2 - trace*x + det.
struct NonSplitClass {
    uint32_t trace;
    uint32_t det;
    bool operator==(const NonSplitClass&) const = default;
};
/// Distinct eigenvalues, lambda1 < lambda2.
struct SplitDistinctClass {
    uint32_t lambda1;
    uint32_t lambda2;
    bool operator==(const SplitDistinctClass&) const = default;
};
struct JordanClass {
    uint32_t lambda;
    bool operator==(const JordanClass&) const = default;
};

struct FrobeniusClass {
    uint32_t p;
    std::variant<ScalarClass, NonSplitClass, SplitDistinctClass, JordanClass> kind;

    bool operator==(const FrobeniusClass&) const = default;

    bool is_scalar() const { return std::holds_alternative<ScalarClass>(kind); }
    bool is_nonsplit() const { return std::holds_alternative<NonSplitClass>(kind); }
    bool is_split() const { return std::holds_alternative<SplitDistinctClass>(kind); }
    bool is_jordan() const { return std::holds_alternative<JordanClass>(kind); }

    uint32_t trace() const;
    uint32_t det() const;
    /// "Scalar", "NonSplit", "SplitDistinct" or "Jordan".
    std::string tag() const;
    std::string format() const;
    /// A fixed matrix in the class: lambda*Id, the companion matrix,
    /// diag(lambda1, lambda2), or [[lambda, 1], [0, lambda]].
    Mat2 representative() const;
};

/// Class of an invertible matrix; throws std::invalid_argument when singular.
FrobeniusClass classify(const Mat2& m);

/// Class determined by a characteristic polynomial x^2 - t x + n (n != 0 mod p)
/// together with the answer to "is the matrix scalar?" (only consulted when
/// the discriminant vanishes).
FrobeniusClass classify_charpoly(uint32_t p, int64_t trace, int64_t det, bool scalar_when_repeated);

// ---------------------------------------------------------------------------
// Non-split Cartan subgroup and its normalizer
// ---------------------------------------------------------------------------

enum class Subgroup { Cartan, Normalizer };

enum class CosetOrder { Ascending, Descending };

struct CartanOptions {
    /// Non-square used for the Cartan shape; default: smallest non-residue.
    std::optional<uint32_t> alpha;
    /// Largest level accepted for full enumeration.
    uint32_t max_level = 97;
    /// Direction of the greedy scan that picks coset representatives.
    CosetOrder order = CosetOrder::Ascending;
};

/// C = {[[x, alpha*y], [y, x]]} and C+ = C u C*[[1,0],[0,-1]] in GL_2(F_p),
/// with member sets and right-coset representatives for C\GL_2 and C+\GL_2.
/// Immutable after build.
class CartanContext {
public:
    static CartanContext build(uint32_t p, const CartanOptions& options = {});

    uint32_t p() const noexcept { return p_; }
    uint32_t alpha() const noexcept { return alpha_; }

    /// Sorted encodings of the members of C or C+.
    const std::vector<uint64_t>& members(Subgroup h) const noexcept
    {
        return h == Subgroup::Cartan ? cartan_ : normalizer_;
    }
    bool contains(Subgroup h, const Mat2& m) const;
    /// Coset representatives g (one per coset H g), in greedy scan order.
    const std::vector<Mat2>& representatives(Subgroup h) const noexcept
    {
        return h == Subgroup::Cartan ? cartan_reps_ : normalizer_reps_;
    }
    uint64_t index(Subgroup h) const noexcept { return representatives(h).size(); }

    Mat2 cartan_element(int64_t x, int64_t y) const { return {p_, x, int64_t{alpha_} * y, y, x}; }
    /// [[1, 0], [0, -1]], the involution adjoining C+ to C.
    Mat2 normalizer_involution() const { return {p_, 1, 0, 0, -1}; }

private:
    CartanContext() = default;

    uint32_t p_ = 0;
    uint32_t alpha_ = 0;
    std::vector<uint64_t> cartan_;
    std::vector<uint64_t> normalizer_;
    std::vector<Mat2> cartan_reps_;
    std::vector<Mat2> normalizer_reps_;
};

inline CartanContext build_cartan(uint32_t p, const CartanOptions& options = {})
{
    return CartanContext::build(p, options);
}

/// Number of cosets H g with g x g^-1 in H, by scanning all representatives.
uint64_t count_fixed_cosets(const Mat2& x, Subgroup h, const CartanContext& ctx);

struct EllipticElements {
    bool order_four = false;        // some m in C n SL_2 with charpoly x^2 + 1
    bool order_three_type = false;  // some m in C n SL_2 with charpoly x^2 + x + 1
};

/// Exhaustive search in C n SL_2, cross-checked against the congruence
/// conditions p = 3 mod 4 and p = 2 mod 3; throws std::logic_error on mismatch.
EllipticElements elliptic_element_existence(uint32_t p);

enum class SpecialJ { Zero, Twelve28 };

/// Image of Aut(E) for j in {0, 1728} embedded in GL_2(F_p).
struct AutomorphismImage {
    std::string type;  // "C6", "C4", "SL(2,3)", "Dic3"
    std::vector<Mat2> generators;
    std::vector<Mat2> elements;  // sorted by encoding
    uint64_t order() const noexcept { return elements.size(); }
};

/// Searches SL_2(F_p) for a subgroup isomorphic to the automorphism group of a
/// curve with the given special j-invariant in the given characteristic.
/// Throws std::logic_error if no such subgroup is found.
AutomorphismImage image_subgroups_for_special_j(uint32_t characteristic, SpecialJ j, uint32_t p);

}  // namespace nscartan
