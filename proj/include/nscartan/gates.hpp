#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nscartan/counting.hpp"
#include "nscartan/verdict.hpp"

namespace nscartan {

struct GateReport {
    uint32_t p = 0;
    std::vector<GateEntry> entries;

    /// False iff some entry contradicts its expected verdict.
    bool meets_expectations() const;
};

/// Non-hyperelliptic verdict: the exact inequality p(p-1)(q-1)/12 > 2(q^2+1)
/// (ns) or p(p-1)(q-1)/24 > 2(q^2+1) (ns+) at q = 2, with the explicit F_4
/// count for (11, ns) and (13, ns+). Declines below the range.
GateEntry hyperelliptic_gate(uint32_t p, CurveVariant variant);

/// r <= 2k.
bool fixed_point_degree_check(uint64_t r, uint64_t k);

/// Open iff fixed_w(p) > 16 (equivalently fixed_point_degree_check fails at
/// k = 8). Declines for p < 11.
GateEntry cusp_preservation_gate(uint32_t p);
/// First prime >= 11 at which the cusp-preservation gate opens, up to `pmax`.
std::optional<uint32_t> minimal_cusp_preservation_prime(uint32_t pmax = 97);

/// Aut = <w> iff cusp preservation holds, p = 1 mod 12 and p != 13.
GateEntry full_aut_gate(uint32_t p);

/// Both sides of g_ns <= 2 g_C + 1 and the field tag K(p).
GateEntry field_of_definition_gate(uint32_t p);

/// (p-1)^2 <= w_K (p-1), i.e. p <= w_K + 1. Throws for w_K outside {2, 4, 6}.
bool ray_class_gate(uint32_t p, uint32_t w_K);
/// Largest odd prime <= pmax satisfying ray_class_gate for some w_K.
uint32_t ray_class_max_prime(uint32_t pmax = 97);
/// Entry form: passes when the inequality fails for every w_K.
GateEntry ray_class_entry(uint32_t p);

/// The nine class-number-one imaginary quadratic discriminants.
const std::vector<int64_t>& class_number_one_discriminants();
/// Reports whether p is inert in one of those fields. Declines for p < 37.
GateEntry unif_aut_hypotheses(uint32_t p);

/// Every gate for one p, in a fixed order.
GateReport gates_for(uint32_t p);

/// One line of the check manifest.
struct CheckResult {
    std::string key;
    std::string description;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    std::string data_dir;  // directory holding the bundled newform fixtures
    uint32_t pmax = 97;
};

/// Runs every acceptance check in a fixed order.
std::vector<CheckResult> run_checks(const VerifyOptions& options);

}  // namespace nscartan
