#pragma once

#include <string>

namespace tdpoly {

/// Outcome of an identity check: a verdict plus, on failure, a witness
/// describing the first disagreement found.
struct CheckResult {
    bool ok = true;
    std::string detail;

    explicit operator bool() const { return ok; }

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string witness) { return {false, std::move(witness)}; }
};

}  // namespace tdpoly
