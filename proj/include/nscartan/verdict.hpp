#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nscartan {

enum class Verdict { Pass, Fail, Declined };

std::string to_string(Verdict v);

/// Where an input to a verdict comes from.
enum class Provenance { Computed, External };

std::string to_string(Provenance s);

struct GateInput {
    std::string name;
    std::string value;
    Provenance provenance = Provenance::Computed;
};

/// One verdict with the quantities it was derived from.
struct GateEntry {
    std::string gate;
    uint32_t p = 0;
    std::string variant;  // empty when not variant-specific
    Verdict verdict = Verdict::Declined;
    std::string conclusion;
    std::string basis;  // how the verdict was reached
    std::vector<GateInput> inputs;
    /// Verdict asserted by the source statement for this p (Pass or Fail), if any.
    std::optional<Verdict> expected;

    bool meets_expectation() const { return !expected || *expected == verdict; }
};

}  // namespace nscartan
