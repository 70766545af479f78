#pragma once

#include <span>
#include <vector>

#include "tdpoly/check.hpp"
#include "tdpoly/params.hpp"
#include "tdpoly/polynomial.hpp"

namespace tdpoly {

/// The table scalar alpha_i entering p_i:
///   I: (q^i - q^{-i})^2 / (q^d - q^{-d})^2, II: i^2/d^2,
///   III-/IV: 0 for even i, 1 for odd i.
/// Undefined for type III+ (whose Drinfel'd polynomial is a plain product);
/// asking for it is an error.
FieldElement alpha_scalar(int i, TDType type, const Field& field,
                          const std::optional<FieldElement>& q, int d);

/// The degree <= 1 factor p_i. Away from type III+ this is
/// (theta_0 theta*_d + theta_d theta*_0 - lambda) alpha_i
///   + (theta_0 - theta_i)(theta*_0 - theta*_i);
/// for type III+ it is the even/odd split of the product form.
Polynomial p_poly(int i, const ParameterArray& pa);

/// The Drinfel'd polynomial: sum_i zeta_i p_{i+1} ... p_d, except for type
/// III+ where it is the bare product p_1 ... p_d (the split sequence does
/// not enter).
Polynomial drinfeld_poly(const ParameterArray& pa);

/// The normalized factor p-hat_i of the type (types I, II, III-, IV carry
/// their own closed forms; for III+ p-hat_i coincides with p_i).
Polynomial normalized_p(int i, const TypeData& td, int d);

/// The normalized Drinfel'd polynomial: the zeta-weighted sum over the
/// p-hat_i, except for type III+ where it is the product (and equals P).
Polynomial normalized_drinfeld(const ParameterArray& pa, const TypeData& td);

/// The affine change of variable with P-hat(lambda) = P(u lambda + v).
/// Types III+ and IV return (1, 0) since there P-hat = P. The two anchor
/// identities u X + v = theta_0 theta*_0 + theta_d theta*_d (and the cross
/// version) are verified before returning.
std::pair<FieldElement, FieldElement> affine_uv(const TypeData& td, int d);

/// Everything the normalization theorems talk about, bundled.
struct DrinfeldResult {
    Polynomial P;
    Polynomial P_hat;
    FieldElement u, v;
    std::vector<Polynomial> p_list;       // p_1 .. p_d
    std::vector<Polynomial> p_hat_list;   // p-hat_1 .. p-hat_d
    std::vector<FieldElement> alpha_list; // alpha_1 .. alpha_d; empty for III+
};

DrinfeldResult drinfeld_full(const ParameterArray& pa, const TypeData& td);

/// Computes P and P-hat for all 8 relatives and compares them
/// coefficient-wise; the witness names the first differing relative.
CheckResult check_d4_invariance(const ParameterArray& pa);

/// The two special-point evaluations of P.
struct SpecialsResult {
    FieldElement value_at_diag;   // P(theta_0 theta*_0 + theta_d theta*_d)
    FieldElement value_at_cross;  // P(theta_0 theta*_d + theta_d theta*_0)
    FieldElement zeta_d;
    FieldElement zeta_down_d;
    bool ok;
    std::string detail;
};

/// Evaluates P at the two special points and compares against zeta_d and
/// the reversed-ordering zeta_d; for type III+ with d >= 2 both values must
/// instead vanish.
SpecialsResult evaluate_specials(const ParameterArray& pa);

/// Drinfel'd polynomial of a Krawtchouk-type pair:
/// sum_i (-1)^i zeta_i lambda^i / ((i!)^2 4^i). Rationals only.
Polynomial krawtchouk_drinfeld(std::span<const FieldElement> zeta, int d);

/// Verifies P-hat(lambda) = (-1)^d (d!)^2 (lambda+2)^d P(4 (lambda+2)^{-1})
/// as a cleared-denominator polynomial identity, with P-hat computed from
/// the eigenvalue data theta_i = d - 2i, theta*_i = 2i - d.
CheckResult check_krawtchouk_relation(std::span<const FieldElement> zeta, int d);

/// Drinfel'd polynomial of a q-geometric pair:
/// sum_i (-1)^i zeta_i q^i lambda^i / ([i]!_q)^2.
Polynomial qgeometric_drinfeld(std::span<const FieldElement> zeta, int d, const FieldElement& q);

/// Verifies P-hat(lambda) =
/// (-1)^d ([d]!_q)^2 (q-q^{-1})^{2d} lambda^d P(lambda^{-1} q^{-1} (q-q^{-1})^{-2})
/// as a cleared-denominator polynomial identity, with P-hat computed from
/// theta_i = q^{2i-d}, theta*_i = q^{d-2i}.
CheckResult check_qgeometric_relation(std::span<const FieldElement> zeta, int d,
                                      const FieldElement& q);

}  // namespace tdpoly
