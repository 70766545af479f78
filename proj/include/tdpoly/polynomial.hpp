#pragma once

#include <span>
#include <string>
#include <vector>

#include "tdpoly/field.hpp"

namespace tdpoly {

/// Dense univariate polynomial in lambda with exact coefficients, stored in
/// ascending degree and normalized (no trailing zeros; the zero polynomial
/// has an empty coefficient list). Immutable value type.
class Polynomial {
public:
    explicit Polynomial(const Field& f) : field_(f) {}

    static Polynomial zero(const Field& f) { return Polynomial(f); }
    static Polynomial one(const Field& f) { return constant(FieldElement::one(f)); }
    static Polynomial constant(const FieldElement& c);

    /// Builds from an ascending coefficient list, stripping trailing zeros.
    static Polynomial from_coeffs(const Field& f, std::vector<FieldElement> coeffs);

    /// The monic linear factor lambda - root.
    static Polynomial monic_linear(const FieldElement& root);

    const Field& field() const { return field_; }

    /// Degree, with -1 as the sentinel for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of lambda^i (zero beyond the stored degree).
    FieldElement coeff(int i) const;
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }

    FieldElement eval(const FieldElement& x) const;

    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial scale(const FieldElement& c) const;

    /// The substitution p(u*lambda + v), expanded exactly.
    Polynomial compose_affine(const FieldElement& u, const FieldElement& v) const;

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    /// Ascending coefficient list, e.g. "[10, -7, 1]" for lambda^2 - 7 lambda + 10.
    std::string to_string() const;

private:
    void normalize();
    void require_same_field(const Polynomial& rhs) const;

    Field field_;
    std::vector<FieldElement> coeffs_;
};

/// tau_i = (lambda - theta_0)...(lambda - theta_{i-1}); tau_0 = 1.
Polynomial tau_poly(int i, std::span<const FieldElement> theta);

/// eta_i = (lambda - theta_d)...(lambda - theta_{d-i+1}); eta_0 = 1.
Polynomial eta_poly(int i, std::span<const FieldElement> theta);

}  // namespace tdpoly
