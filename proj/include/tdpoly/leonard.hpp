#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tdpoly/check.hpp"
#include "tdpoly/matrix.hpp"
#include "tdpoly/params.hpp"

namespace tdpoly {

/// Leonard-system split-sequence parameterization: the type data, the free
/// scalar t (for type IV this slot holds the scalar usually called phi),
/// optionally psi, and the first and second split sequences phi / phi2
/// (every entry nonzero).
struct LeonardData {
    TypeData td;
    int d;
    FieldElement t;
    std::optional<FieldElement> psi;
    std::vector<FieldElement> phi;
    std::vector<FieldElement> phi2;
};

/// Builds the first and second split sequences from the type's closed
/// forms (types I, II, III-, IV). A supplied psi is verified against its
/// defining equation first; any vanishing entry is rejected as
/// not-a-Leonard-system.
LeonardData phi_from_params(const TypeData& td, int d, const FieldElement& t_or_phi,
                            std::optional<FieldElement> psi = std::nullopt);

/// zeta_0 = 1, zeta_i = phi_1 phi_2 ... phi_i.
std::vector<FieldElement> zeta_from_phi(std::span<const FieldElement> phi, const Field& f);

/// All in-field solutions of the type's psi equation:
///   I:    psi + b b* c c* / psi = t        (nonzero solutions only)
///   II:   psi^2 = 4 t c c* + b^2 c*^2 + b*^2 c^2
///   III-: psi^2 = t c c* + b^2 c*^2 + b*^2 c^2
///   IV:   c c* phi = (a c* + a* c + c c* psi)(b c* + b* c + c c* + c c* psi)
/// An empty result means psi lives only in an extension field.
std::vector<FieldElement> solve_psi(const TypeData& td, int d, const FieldElement& t_or_phi);

/// The multiset of roots of the normalized Drinfel'd polynomial, per the
/// type's closed form: d roots (types I and II), the odd-indexed (d+1)/2
/// roots (type III-), two roots (type IV). Subcases requiring psi throw
/// missing-psi when it is absent.
std::vector<FieldElement> leonard_roots(const LeonardData& ld);

/// Certifies the type IV root theorem without leaving GF4. For admissible
/// type IV Leonard data the scalar psi never lies in GF4 (exhaustively
/// true), so the two stated root expressions are verified symbolically:
/// working in GF4[psi] modulo the defining quadratic of psi, both
/// expressions annihilate the normalized polynomial, and the quadratic's
/// two roots differ by (a+b)/c + (a*+b*)/c* + 1.
CheckResult check_type_iv_roots(const TypeData& td, const FieldElement& phi_scalar);

/// Split-basis realization: A lower bidiagonal with diagonal theta and
/// subdiagonal 1, A* upper bidiagonal with diagonal theta* and
/// superdiagonal phi_1..phi_d.
struct MatrixPair {
    Matrix A;
    Matrix A_star;
};

MatrixPair realize_matrices(std::span<const FieldElement> theta,
                            std::span<const FieldElement> theta_star,
                            std::span<const FieldElement> phi);

/// Split sequence read off a matrix pair by applying the alternating
/// operator word
///   (A* - theta*_1) ... (A* - theta*_i)(A - theta_{i-1}) ... (A - theta_0)
/// to a vector spanning U_0 and extracting the scalar. Works on arbitrary
/// matrices with both spectra supplied: the primitive idempotents are formed
/// by the product formula, each U_i is computed as
///   (E*_0 V + ... + E*_i V) /\ (E_i V + ... + E_d V),
/// and dim U_i = 1 plus directness of the sum are verified along the way.
std::vector<FieldElement> oracle_zeta(const Matrix& A, const Matrix& A_star,
                                      std::span<const FieldElement> theta,
                                      std::span<const FieldElement> theta_star);

/// Same split sequence for a split-basis pair, where U_0 is the first
/// coordinate line: the word is applied to e_0 directly, and the generic
/// idempotent path above is run as a cross-check.
std::vector<FieldElement> oracle_split_sequence(const MatrixPair& mp,
                                                std::span<const FieldElement> theta,
                                                std::span<const FieldElement> theta_star);

struct TridiagReport {
    bool idempotents_ok = true;       // E_i E_j = delta E_i, sum E_i = I (both families)
    bool triple_products_ok = true;   // E*_i A^k E*_j = 0 and E_i A*^k E_j = 0 for k < |i-j|
    bool shape_symmetric = true;      // rho_i = rho_{d-i} for both shape sequences
    std::vector<int> shape;           // rank E_i
    std::vector<int> shape_star;      // rank E*_i
    std::string detail;

    bool ok() const { return triple_products_ok && shape_symmetric; }
};

/// Checks the idempotent relations, the tridiagonal vanishing conditions,
/// and the symmetry of the shape for an arbitrary matrix pair with given
/// spectra.
TridiagReport check_tridiagonal_relations(const Matrix& A, const Matrix& A_star,
                                          std::span<const FieldElement> theta,
                                          std::span<const FieldElement> theta_star);

}  // namespace tdpoly
