#include "nscartan/verdict.hpp"

namespace nscartan {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Declined: return "declined";
    }
    return "unknown";
}

std::string to_string(Provenance s)
{
    return s == Provenance::Computed ? "computed" : "external";
}

}  // namespace nscartan
