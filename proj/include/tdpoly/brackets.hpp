#pragma once

#include <optional>

#include "tdpoly/check.hpp"
#include "tdpoly/field.hpp"
#include "tdpoly/params.hpp"

namespace tdpoly {

/// Everything the trinomial scalars [r,s,t] depend on: the type, the
/// ambient field, the diameter bounding r+s+t, and (type I only) q.
struct BracketContext {
    TDType type;
    Field field;
    int d;
    std::optional<FieldElement> q;
};

BracketContext bracket_context(const ParameterArray& pa);

/// The scalar [r,s,t] of the given type:
///   I:   (Q;Q)_{r+s} (Q;Q)_{r+t} (Q;Q)_{s+t} / ((Q;Q)_r (Q;Q)_s (Q;Q)_t (Q;Q)_{r+s+t})
///        with Q = q^2;
///   II:  (r+s)! (r+t)! (s+t)! / (r! s! t! (r+s+t)!), computed in the field;
///   III: 0 when r,s,t are all odd, else the same quotient with every
///        factorial argument halved (floor);
///   IV:  0 at (1,1,1), else 1 (at least one entry is then zero).
/// Requires r+s+t <= d. Division steps assert nonzero divisors and report
/// "division impossible" instead of assuming the characteristic constraints.
FieldElement bracket(int r, int s, int t, const BracketContext& ctx);

/// Checks the expansion eta_i = sum_h [h, i-h, d-i] eta_{i-h}(theta_0) tau_h
/// as an exact polynomial identity; the failure witness carries both sides.
CheckResult check_eta_expansion(const ParameterArray& pa, int i);

}  // namespace tdpoly
