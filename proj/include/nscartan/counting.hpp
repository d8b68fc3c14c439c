#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "nscartan/ellcurve.hpp"
#include "nscartan/finite_algebra.hpp"
#include "nscartan/gl2_cartan.hpp"

namespace nscartan {

enum class CurveVariant { Ns, NsPlus };
enum class CountMethod { Moduli, Trace };

/// "ns" / "ns+".
std::string to_string(CurveVariant v);
std::string to_string(CountMethod m);
/// Accepts "ns", "ns+", "nsplus"; throws std::invalid_argument otherwise.
CurveVariant parse_variant(const std::string& s);

inline Subgroup subgroup_for(CurveVariant v)
{
    return v == CurveVariant::Ns ? Subgroup::Cartan : Subgroup::Normalizer;
}

// ---------------------------------------------------------------------------
// Newform data
// ---------------------------------------------------------------------------

/// One Galois-conjugacy class of newforms with data for a single Hecke
/// operator T_l. `traces[k-1]` is the trace of T_l^k on the class (so for a
/// dimension-1 form it is the eigenvalue and its powers); `charpoly` holds the
/// monic characteristic polynomial of T_l, coefficients c_0 .. c_d.
struct NewformRecord {
    uint32_t level = 0;
    unsigned dim = 0;
    uint32_t hecke = 2;
    std::vector<int64_t> traces;
    std::vector<int64_t> charpoly;
    std::string source;  // "path:line" of origin, for diagnostics
    unsigned line = 0;

    /// Power sums P_1 .. P_n of the T_l eigenvalues (exact, via Newton's
    /// identities when needed). Throws std::invalid_argument if the record
    /// does not determine them.
    std::vector<int64_t> power_sums(unsigned n) const;
    /// Throws std::invalid_argument on inconsistent dimension or data.
    void validate() const;
};

/// Format, one record per line ('#' starts a comment):
///   <level> <dim> [hecke:<l>] [traces:[t1,t2,...]] [charpoly:[c0,...,cd]]
/// At least one of traces/charpoly is required. Errors carry "name:line".
std::vector<NewformRecord> parse_newform_records(std::istream& in, const std::string& name);
std::vector<NewformRecord> load_newform_records(const std::string& path);

// ---------------------------------------------------------------------------
// Point counts
// ---------------------------------------------------------------------------

/// Rational cusps over F_Q, Q = q^r, for a cusp torsor (Z/p)* on which
/// Frobenius acts as multiplication by Q.
uint64_t rational_cusp_count(uint32_t p, uint64_t field_size, CurveVariant variant);

/// s_k(a) = alpha^k + conj(alpha)^k for the roots of x^2 - a x + q, as an
/// integer polynomial in a (coefficients of a^0, a^1, ...).
std::vector<int64_t> frobenius_power_sum_poly(uint32_t q, unsigned k);

/// q^r + 1 - sum over records of sum_i (alpha_i^r + conj(alpha_i)^r).
/// Every record must carry T_q data.
int64_t count_points_trace(const std::vector<NewformRecord>& records, uint32_t q, unsigned r);

struct JContribution {
    Gf j;
    std::string j_label;
    FrobeniusClass rho;
    bool special = false;
    bool supersingular = false;
    uint64_t automorphisms = 2;
    std::string image_type;  // automorphism image for special j, empty otherwise
    uint64_t burnside_sum = 0;
    uint64_t count = 0;
};

struct PointCountReport {
    uint32_t p = 0;
    uint32_t q = 0;
    unsigned r = 0;
    CurveVariant variant = CurveVariant::Ns;
    CountMethod method = CountMethod::Moduli;
    int64_t noncuspidal = 0;
    uint64_t cusps = 0;
    int64_t total = 0;
    uint32_t alpha = 0;                    // moduli method only
    std::vector<JContribution> breakdown;  // moduli method only, ascending j encoding
    uint64_t supersingular_subtotal = 0;   // moduli method only
    Rational supersingular_bound{0};       // p(p-1)(q-1)/12, or /24 for ns+
};

struct ModuliOptions {
    CartanOptions cartan;
    uint64_t field_bound = kDefaultFieldBound;
};

/// Moduli count of X_ns(p) / X_ns+(p) over F_{q^r}, r even. Throws
/// std::logic_error when an internal consistency check fails (Burnside sum
/// not divisible by |A|, automorphism orders disagreeing, supersingular
/// bound violated).
PointCountReport count_points_moduli(uint32_t p, uint32_t q, unsigned r, CurveVariant variant,
                                     const ModuliOptions& options = {});

/// Trace-method report; cusps are reported from the torsor model and the
/// noncuspidal part is the difference.
PointCountReport count_points_trace_report(const std::vector<NewformRecord>& records, uint32_t p, uint32_t q,
                                           unsigned r, CurveVariant variant);

/// True iff count <= 2(q^r + 1), i.e. the count is compatible with a
/// hyperelliptic curve.
bool hyperelliptic_bound_check(int64_t count, uint32_t q, unsigned r = 2);

}  // namespace nscartan
