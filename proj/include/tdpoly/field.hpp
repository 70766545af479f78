#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "tdpoly/errors.hpp"

namespace tdpoly {

enum class FieldKind { Rationals, Prime, GF4 };

/// Describes one of the supported exact coefficient fields:
///   Q       -- arbitrary-precision rationals,
///   Fp:<p>  -- integers modulo an odd prime p,
///   GF4     -- the four-element field {0, 1, w, w+1} with w^2 = w + 1.
class Field {
public:
    /// Prime moduli are capped at desk scale so that square roots can be
    /// found by exhaustive scan.
    static constexpr std::uint64_t kMaxPrimeModulus = 1'000'003;

    static Field rationals() { return Field(FieldKind::Rationals, 0); }
    static Field prime(std::uint64_t p);
    static Field gf4() { return Field(FieldKind::GF4, 0); }

    /// Parses "Q", "Fp:<p>" or "GF4".
    static Field parse(std::string_view text);

    FieldKind kind() const { return kind_; }
    std::uint64_t modulus() const { return modulus_; }

    /// 0 for the rationals, p for Fp, 2 for GF4.
    std::uint64_t characteristic() const;

    std::string to_string() const;

    bool operator==(const Field& other) const {
        return kind_ == other.kind_ && modulus_ == other.modulus_;
    }
    bool operator!=(const Field& other) const { return !(*this == other); }

private:
    Field(FieldKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

    FieldKind kind_;
    std::uint64_t modulus_;
};

/// An exact element of one of the supported fields. Values are immutable in
/// spirit: every operation returns a fresh element, and all arithmetic is
/// exact (there is no floating point anywhere in this library).
///
/// Rationals are kept in lowest terms with positive denominator (GMP's
/// canonical form), prime-field elements as least nonnegative residues, and
/// GF4 elements as two bits (coefficients of 1 and w).
class FieldElement {
public:
    /// Zero over the rationals; containers need a default constructor.
    FieldElement() : FieldElement(Field::rationals()) {}

    static FieldElement zero(const Field& f) { return FieldElement(f); }
    static FieldElement one(const Field& f) { return from_int(f, 1); }
    static FieldElement from_int(const Field& f, long long value);

    /// Parses the element grammar of the ambient field: rationals as
    /// "num" or "num/den", prime-field values as integers (optionally as a
    /// fraction, resolved via a modular inverse), GF4 as 0|1|w|w+1.
    static FieldElement parse(const Field& f, std::string_view text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement operator+(const FieldElement& rhs) const;
    FieldElement operator-(const FieldElement& rhs) const;
    FieldElement operator*(const FieldElement& rhs) const;
    FieldElement operator/(const FieldElement& rhs) const;

    FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
    FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
    FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }
    FieldElement& operator/=(const FieldElement& rhs) { return *this = *this / rhs; }

    FieldElement inverse() const;

    /// Exact integer power; negative exponents invert first.
    FieldElement pow(long long exponent) const;

    bool operator==(const FieldElement& rhs) const;
    bool operator!=(const FieldElement& rhs) const { return !(*this == rhs); }

    /// Underlying rational payload; only valid over Q.
    const mpq_class& rational() const;

    std::string to_string() const;

private:
    explicit FieldElement(Field f) : field_(f), rat_(0), bits_(0) {}

    void require_same_field(const FieldElement& other) const;

    Field field_;
    mpq_class rat_;       // Rationals payload
    std::uint64_t bits_;  // Prime residue or GF4 bit pair
};

/// q-Pochhammer symbol (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}); (a;q)_0 = 1.
FieldElement q_pochhammer(const FieldElement& a, const FieldElement& q, int n);

/// q-bracket [n]_q = (q^n - q^{-n})/(q - q^{-1}). Requires q nonzero and
/// q^2 != 1.
FieldElement q_bracket(int n, const FieldElement& q);

/// q-factorial [n]!_q = [n]_q [n-1]_q ... [1]_q, with [0]!_q = 1.
FieldElement q_factorial(int n, const FieldElement& q);

/// Some y with y^2 = x, if one exists in the field of x. Prime fields are
/// scanned exhaustively (moduli are desk-scale by construction); rationals
/// use exact integer square-root tests on numerator and denominator; GF4 is
/// scanned. Absence is a value, never an error.
std::optional<FieldElement> sqrt_in_field(const FieldElement& x);

/// The image of n! in the field, by repeated multiplication of integer
/// images. Throws DomainError if an intermediate factor vanishes (possible
/// only when the characteristic is positive and <= n).
FieldElement factorial_in_field(const Field& f, int n);

}  // namespace tdpoly
