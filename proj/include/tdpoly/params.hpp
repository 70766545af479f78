#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tdpoly/field.hpp"

namespace tdpoly {

/// Type of a tridiagonal system, determined by the base beta and the field:
/// I (beta != +-2), II (beta = 2, odd characteristic or zero), III+/- (beta
/// = -2, split by the parity of the diameter), IV (beta = 0 in
/// characteristic 2; forces d = 3).
enum class TDType { I, II, IIIPlus, IIIMinus, IV };

std::string type_to_string(TDType t);
TDType type_from_string(std::string_view s);

/// True for both III+ and III-.
inline bool is_type_iii(TDType t) { return t == TDType::IIIPlus || t == TDType::IIIMinus; }

/// The scalar pack fitting the eigenvalue and dual eigenvalue sequences of
/// one type:
///   I:   theta_i = a + b q^{2i-d} + c q^{d-2i}          (q with q^2+q^{-2} = beta)
///   II:  theta_i = a + b (i - d/2) + c i (d - i)
///   III: theta_i = a + b + c (i - d/2) for even i, a - b - c (i - d/2) for odd i
///   IV:  theta = (a, b+c, a+c, b)                        (d = 3)
/// and likewise for theta* with the starred scalars (type I shares q).
struct TypeData {
    TDType type;
    std::optional<FieldElement> q;  // type I only
    FieldElement a, b, c, a_star, b_star, c_star;
};

/// Parameter array (d; theta; theta*; zeta) of a sharp tridiagonal system,
/// together with its base beta (stored explicitly; for d <= 2 the base is
/// not derivable and must be supplied) and, for type I, the scalar q used
/// by every q-dependent formula. The array is validated on construction:
/// distinct eigenvalues, zeta_0 = 1, and for d >= 3 agreement of beta with
/// the three-term ratios of both sequences.
class ParameterArray {
public:
    ParameterArray(const Field& field, int d, std::vector<FieldElement> theta,
                   std::vector<FieldElement> theta_star, std::vector<FieldElement> zeta,
                   const FieldElement& beta, std::optional<FieldElement> q = std::nullopt);

    const Field& field() const { return field_; }
    int d() const { return d_; }
    TDType type() const { return type_; }
    const FieldElement& beta() const { return beta_; }
    const std::optional<FieldElement>& q() const { return q_; }

    const std::vector<FieldElement>& theta() const { return theta_; }
    const std::vector<FieldElement>& theta_star() const { return theta_star_; }
    const std::vector<FieldElement>& zeta() const { return zeta_; }

    const FieldElement& theta(int i) const { return theta_.at(static_cast<size_t>(i)); }
    const FieldElement& theta_star(int i) const { return theta_star_.at(static_cast<size_t>(i)); }
    const FieldElement& zeta(int i) const { return zeta_.at(static_cast<size_t>(i)); }

private:
    Field field_;
    int d_;
    std::vector<FieldElement> theta_, theta_star_, zeta_;
    FieldElement beta_;
    std::optional<FieldElement> q_;
    TDType type_;
};

/// The base beta, from the common three-term ratio
/// (theta_{i-2} - theta_{i+1}) / (theta_{i-1} - theta_i) = beta + 1,
/// verified to be independent of i and equal across both sequences.
/// Requires d >= 3; for smaller d the base must be supplied by the caller.
FieldElement compute_base(std::span<const FieldElement> theta,
                          std::span<const FieldElement> theta_star);

TDType classify_type(const FieldElement& beta, const Field& field, int d);

/// Recovers the unique (d >= 2) scalar pack of the claimed type from the
/// two eigenvalue sequences. For type I the caller must supply q with
/// q^2 + q^{-2} = beta (either of the two reciprocal choices). For d <= 1
/// the data is underdetermined and a canonical completion is used:
///   I:   c = c* = 0 (d = 1), b = c = 0 (d = 0);
///   II:  c = c* = 0;
///   III: c = c* = 2, and b = b* = 0 when d = 0;
/// documented here once and relied on nowhere else.
TypeData fit_type_data(std::span<const FieldElement> theta,
                       std::span<const FieldElement> theta_star, TDType type,
                       std::optional<FieldElement> q = std::nullopt);

/// Eigenvalue sequence produced by the type's formula (starred = dual).
std::vector<FieldElement> eigenvalues_from(const TypeData& td, int d, bool starred);

/// Builds a fully validated parameter array from type data plus a split
/// sequence. Enforces the type-data invariants, the characteristic
/// constraints (type II: char 0 or > d; type III: char 0 or > d/2), and the
/// distinctness of the produced sequences.
ParameterArray generate_parameter_array(const TypeData& td, int d,
                                        std::vector<FieldElement> zeta);

/// Split sequence of the relative with the eigenvalue ordering reversed,
/// computed by the bracket-weighted sum
///   zeta'_i = sum_h [h, i-h, d-i] eta*_{d-h}(theta*_0) eta_{i-h}(theta_0)
///             / eta*_{d-i}(theta*_0) * zeta_h.
std::vector<FieldElement> zeta_down_sequence(const ParameterArray& pa);

/// Applies a word over the alphabet s (dualize), d (reverse the dual
/// ordering), D (reverse the primal ordering), letter by letter from the
/// left. The d generator is realized as s D s, which agrees with the
/// dihedral relations.
ParameterArray d4_apply(const ParameterArray& pa, std::string_view word);

/// The scalar pack of the relative: s swaps the starred and unstarred
/// halves; D maps (a,b,c) to (a,c,b) for type I, (a,-b,c) for type II and
/// III with odd d, (a,b,-c) for type III with even d, and (b,a,c) for type
/// IV. For d <= 1 the pack fitting a sequence is not unique, so transforming
/// it alongside the array (rather than refitting) is what keeps the
/// normalized polynomial comparable across relatives.
TypeData d4_transform_type_data(const TypeData& td, std::string_view word);

/// Words producing the 8 relatives, in the conventional table order:
/// identity, down, Down, down Down, star, down star, Down star, down Down star.
inline constexpr std::array<std::string_view, 8> kRelativeWords = {
    "", "d", "D", "dD", "s", "ds", "Ds", "dDs"};

}  // namespace tdpoly
