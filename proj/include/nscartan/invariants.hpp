#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "nscartan/ellcurve.hpp"
#include "nscartan/gl2_cartan.hpp"

namespace nscartan {

/// Ingredients of the Riemann-Hurwitz formula for X_ns(p) -> X(1).
struct GenusData {
    uint64_t degree = 0;  // p(p-1)
    uint64_t nu2 = 0;
    uint64_t nu3 = 0;
    uint64_t cusps = 0;
    int64_t genus = 0;
};

/// nu2, nu3 and the cusps from coset fixed-point counts of
/// S = [[0,-1],[1,0]], [[0,-1],[1,1]] and T = [[1,1],[0,1]] on C \ GL_2.
GenusData genus_ns_riemann_hurwitz(const CartanContext& ctx);
/// Same formula with nu2 = 2[p = 3 mod 4], nu3 = 2[p = 2 mod 3], cusps p - 1.
GenusData genus_ns_closed_form(uint32_t p);

/// Both routes, agreement asserted (std::logic_error otherwise).
int64_t genus_ns(uint32_t p);
/// Fixed points of w on X_ns(p): (p-1)/2 for p = 1 mod 4, (p+1)/2 otherwise.
/// Externally sourced value.
uint64_t fixed_w(uint32_t p);
/// From 2g - 2 = 2(2g+ - 2) + fixed_w; integrality asserted.
int64_t genus_ns_plus(uint32_t p);
/// Genus of X_0(N) by the index / elliptic point / cusp formula.
int64_t genus_X0(uint64_t N);

struct NewpartCheck {
    bool ok = false;
    int64_t genus_ns = 0;
    int64_t genus_X0_p2 = 0;
    int64_t genus_X0_p = 0;
    std::string diagnostic;
};
/// genus_ns(p) == genus_X0(p^2) - 2 genus_X0(p).
NewpartCheck newpart_dim_check(uint32_t p);

/// -(1/p) sum_{m=1}^{p-1} m (m/p) for p = 3 mod 4, p > 3.
int64_t class_number_dirichlet(uint32_t p);
/// Number of reduced forms (a, b, c) of discriminant D < 0.
int64_t class_number_reduced_forms(int64_t D);
/// Dirichlet value, checked against the reduced-forms count and against
/// h(-p) <= (p-1)/2. Throws std::invalid_argument unless p = 3 mod 4, p > 3.
int64_t class_number(uint32_t p);

/// (g_C, g_H): CM part h(-p) (0 when p = 1 mod 4) and the remainder.
std::pair<int64_t, int64_t> cm_split(uint32_t p);

/// genus_ns(p) > p.
bool genus_gap_holds(uint32_t p);

/// "Q(sqrt(p))" for p = 1 mod 4, "Q(sqrt(-p))" for p = 3 mod 4.
std::string quadratic_field_tag(uint32_t p);

struct CurveInvariants {
    uint32_t p = 0;
    int64_t genus_ns = 0;
    int64_t genus_ns_plus = 0;
    uint64_t cusps_ns = 0;
    uint64_t cusps_ns_plus = 0;
    uint64_t nu2 = 0;
    uint64_t nu3 = 0;
    uint64_t fixed_w = 0;
    int64_t g_C = 0;
    int64_t g_H = 0;
    std::string field_tag;
    bool newpart_ok = false;
    bool genus_gap = false;
};

CurveInvariants curve_invariants(uint32_t p);

}  // namespace nscartan
