#include "tdpoly/field.hpp"

#include <cctype>
#include <cstdlib>

namespace tdpoly {
namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on (a, p); p is prime so every nonzero a is a unit.
    if (a == 0) throw DomainError("division by zero in Fp:" + std::to_string(p));
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

bool is_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

constexpr std::uint64_t kGf4One = 1;  // bit 0: coefficient of 1, bit 1: coefficient of w

std::uint64_t gf4_mul(std::uint64_t x, std::uint64_t y) {
    // (x0 + x1 w)(y0 + y1 w) with w^2 = w + 1.
    std::uint64_t x0 = x & 1, x1 = (x >> 1) & 1;
    std::uint64_t y0 = y & 1, y1 = (y >> 1) & 1;
    std::uint64_t lo = (x0 & y0) ^ (x1 & y1);
    std::uint64_t hi = (x0 & y1) ^ (x1 & y0) ^ (x1 & y1);
    return lo | (hi << 1);
}

std::uint64_t gf4_inverse(std::uint64_t x) {
    switch (x) {
        case 1: return 1;
        case 2: return 3;  // w * (w+1) = 1
        case 3: return 2;
        default: throw DomainError("division by zero in GF4");
    }
}

}  // namespace

Field Field::prime(std::uint64_t p) {
    if (p == 2 || !is_prime_u64(p))
        throw DomainError("prime-field modulus must be an odd prime, got " + std::to_string(p));
    if (p > kMaxPrimeModulus)
        throw DomainError("prime-field modulus exceeds the desk-scale bound " +
                          std::to_string(kMaxPrimeModulus));
    return Field(FieldKind::Prime, p);
}

Field Field::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text == "GF4") return gf4();
    if (text.rfind("Fp:", 0) == 0) {
        std::string_view num = text.substr(3);
        if (!is_integer_token(num) || num.front() == '-')
            throw ParseError("bad field descriptor: " + std::string(text));
        return prime(std::strtoull(std::string(num).c_str(), nullptr, 10));
    }
    throw ParseError("bad field descriptor: " + std::string(text) + " (expected Q, Fp:<p>, GF4)");
}

std::uint64_t Field::characteristic() const {
    switch (kind_) {
        case FieldKind::Rationals: return 0;
        case FieldKind::Prime: return modulus_;
        case FieldKind::GF4: return 2;
    }
    return 0;
}

std::string Field::to_string() const {
    switch (kind_) {
        case FieldKind::Rationals: return "Q";
        case FieldKind::Prime: return "Fp:" + std::to_string(modulus_);
        case FieldKind::GF4: return "GF4";
    }
    return {};
}

FieldElement FieldElement::from_int(const Field& f, long long value) {
    FieldElement e(f);
    switch (f.kind()) {
        case FieldKind::Rationals:
            e.rat_ = mpq_class(static_cast<long>(value));
            break;
        case FieldKind::Prime: {
            std::int64_t p = static_cast<std::int64_t>(f.modulus());
            std::int64_t r = value % p;
            if (r < 0) r += p;
            e.bits_ = static_cast<std::uint64_t>(r);
            break;
        }
        case FieldKind::GF4:
            e.bits_ = static_cast<std::uint64_t>(value & 1) * kGf4One;
            break;
    }
    return e;
}

FieldElement FieldElement::parse(const Field& f, std::string_view text) {
    // Trim surrounding whitespace.
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty field element");

    if (f.kind() == FieldKind::GF4) {
        FieldElement e(f);
        if (text == "0") e.bits_ = 0;
        else if (text == "1") e.bits_ = 1;
        else if (text == "w") e.bits_ = 2;
        else if (text == "w+1") e.bits_ = 3;
        else throw ParseError("bad GF4 element: " + std::string(text) + " (expected 0|1|w|w+1)");
        return e;
    }

    std::string_view num = text, den;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
        if (!is_integer_token(den) || den.front() == '-' || den == "0")
            throw ParseError("bad denominator in element: " + std::string(text));
    }
    if (!is_integer_token(num)) throw ParseError("bad field element: " + std::string(text));

    if (f.kind() == FieldKind::Rationals) {
        FieldElement e(f);
        mpq_class v;
        v.set_str(std::string(text), 10);
        v.canonicalize();
        e.rat_ = v;
        return e;
    }

    // Prime field: integer, optionally a fraction resolved in the field.
    mpz_class n(std::string(num), 10);
    mpz_class p(static_cast<unsigned long>(f.modulus()));
    mpz_class r = n % p;
    if (r < 0) r += p;
    FieldElement e(f);
    e.bits_ = r.get_ui();
    if (!den.empty()) {
        mpz_class dz(std::string(den), 10);
        mpz_class dr = dz % p;
        FieldElement d(f);
        d.bits_ = dr.get_ui();
        e = e / d;
    }
    return e;
}

bool FieldElement::is_zero() const {
    return field_.kind() == FieldKind::Rationals ? rat_ == 0 : bits_ == 0;
}

bool FieldElement::is_one() const {
    return field_.kind() == FieldKind::Rationals ? rat_ == 1 : bits_ == 1;
}

void FieldElement::require_same_field(const FieldElement& other) const {
    if (field_ != other.field_)
        throw DomainError("field mismatch: " + field_.to_string() + " vs " + other.field_.to_string());
}

FieldElement FieldElement::operator-() const {
    FieldElement e(*this);
    switch (field_.kind()) {
        case FieldKind::Rationals: e.rat_ = -rat_; break;
        case FieldKind::Prime: e.bits_ = bits_ == 0 ? 0 : field_.modulus() - bits_; break;
        case FieldKind::GF4: break;  // characteristic 2
    }
    return e;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
    require_same_field(rhs);
    FieldElement e(*this);
    switch (field_.kind()) {
        case FieldKind::Rationals: e.rat_ = rat_ + rhs.rat_; break;
        case FieldKind::Prime: {
            std::uint64_t s = bits_ + rhs.bits_;
            if (s >= field_.modulus()) s -= field_.modulus();
            e.bits_ = s;
            break;
        }
        case FieldKind::GF4: e.bits_ = bits_ ^ rhs.bits_; break;
    }
    return e;
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const { return *this + (-rhs); }

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
    require_same_field(rhs);
    FieldElement e(*this);
    switch (field_.kind()) {
        case FieldKind::Rationals: e.rat_ = rat_ * rhs.rat_; break;
        case FieldKind::Prime: e.bits_ = (bits_ * rhs.bits_) % field_.modulus(); break;
        case FieldKind::GF4: e.bits_ = gf4_mul(bits_, rhs.bits_); break;
    }
    return e;
}

FieldElement FieldElement::inverse() const {
    FieldElement e(*this);
    switch (field_.kind()) {
        case FieldKind::Rationals:
            if (rat_ == 0) throw DomainError("division by zero in Q");
            e.rat_ = 1 / rat_;
            break;
        case FieldKind::Prime: e.bits_ = mod_inverse(bits_, field_.modulus()); break;
        case FieldKind::GF4: e.bits_ = gf4_inverse(bits_); break;
    }
    return e;
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
    require_same_field(rhs);
    return *this * rhs.inverse();
}

FieldElement FieldElement::pow(long long exponent) const {
    if (exponent < 0) return inverse().pow(-exponent);
    FieldElement base(*this);
    FieldElement acc = FieldElement::one(field_);
    unsigned long long e = static_cast<unsigned long long>(exponent);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& rhs) const {
    require_same_field(rhs);
    return field_.kind() == FieldKind::Rationals ? rat_ == rhs.rat_ : bits_ == rhs.bits_;
}

const mpq_class& FieldElement::rational() const {
    if (field_.kind() != FieldKind::Rationals)
        throw DomainError("rational() called on a " + field_.to_string() + " element");
    return rat_;
}

std::string FieldElement::to_string() const {
    switch (field_.kind()) {
        case FieldKind::Rationals: return rat_.get_str();
        case FieldKind::Prime: return std::to_string(bits_);
        case FieldKind::GF4:
            switch (bits_) {
                case 0: return "0";
                case 1: return "1";
                case 2: return "w";
                default: return "w+1";
            }
    }
    return {};
}

FieldElement q_pochhammer(const FieldElement& a, const FieldElement& q, int n) {
    const Field& f = a.field();
    FieldElement acc = FieldElement::one(f);
    FieldElement aq = a;
    for (int k = 0; k < n; ++k) {
        acc = acc * (FieldElement::one(f) - aq);
        aq = aq * q;
    }
    return acc;
}

FieldElement q_bracket(int n, const FieldElement& q) {
    if (q.is_zero() || (q * q).is_one())
        throw DomainError("invalid-q: q-bracket requires q != 0 and q^2 != 1");
    return (q.pow(n) - q.pow(-n)) / (q - q.inverse());
}

FieldElement q_factorial(int n, const FieldElement& q) {
    FieldElement acc = FieldElement::one(q.field());
    for (int k = 1; k <= n; ++k) acc = acc * q_bracket(k, q);
    return acc;
}

std::optional<FieldElement> sqrt_in_field(const FieldElement& x) {
    const Field& f = x.field();
    switch (f.kind()) {
        case FieldKind::Rationals: {
            const mpq_class& v = x.rational();
            if (v < 0) return std::nullopt;
            mpz_class num = v.get_num(), den = v.get_den();
            if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
                return std::nullopt;
            mpz_class rn, rd;
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return FieldElement::parse(f, rn.get_str() + "/" + rd.get_str());
        }
        case FieldKind::Prime:
        case FieldKind::GF4: {
            // Exhaustive scan; moduli are desk-scale by construction.
            std::uint64_t count = f.kind() == FieldKind::Prime ? f.modulus() : 4;
            for (std::uint64_t y = 0; y < count; ++y) {
                FieldElement cand = f.kind() == FieldKind::Prime
                                        ? FieldElement::from_int(f, static_cast<long long>(y))
                                        : FieldElement::parse(f, y == 0   ? "0"
                                                                 : y == 1 ? "1"
                                                                 : y == 2 ? "w"
                                                                          : "w+1");
                if (cand * cand == x) return cand;
            }
            return std::nullopt;
        }
    }
    return std::nullopt;
}

FieldElement factorial_in_field(const Field& f, int n) {
    FieldElement acc = FieldElement::one(f);
    for (int k = 2; k <= n; ++k) {
        FieldElement img = FieldElement::from_int(f, k);
        if (img.is_zero())
            throw DomainError("factorial " + std::to_string(n) + "! vanishes in " + f.to_string());
        acc = acc * img;
    }
    return acc;
}

}  // namespace tdpoly
