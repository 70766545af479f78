#include "tdpoly/polynomial.hpp"

namespace tdpoly {

Polynomial Polynomial::constant(const FieldElement& c) {
    Polynomial p(c.field());
    p.coeffs_.push_back(c);
    p.normalize();
    return p;
}

Polynomial Polynomial::from_coeffs(const Field& f, std::vector<FieldElement> coeffs) {
    Polynomial p(f);
    for (const FieldElement& c : coeffs)
        if (c.field() != f) throw DomainError("field mismatch in polynomial coefficients");
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

Polynomial Polynomial::monic_linear(const FieldElement& root) {
    Polynomial p(root.field());
    p.coeffs_ = {-root, FieldElement::one(root.field())};
    return p;
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Polynomial::require_same_field(const Polynomial& rhs) const {
    if (field_ != rhs.field_)
        throw DomainError("field mismatch: " + field_.to_string() + " vs " + rhs.field_.to_string());
}

FieldElement Polynomial::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return FieldElement::zero(field_);
    return coeffs_[static_cast<size_t>(i)];
}

FieldElement Polynomial::eval(const FieldElement& x) const {
    // Horner.
    FieldElement acc = FieldElement::zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    require_same_field(rhs);
    Polynomial out(field_);
    size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
    out.coeffs_.reserve(n);
    for (size_t i = 0; i < n; ++i)
        out.coeffs_.push_back(coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i)));
    out.normalize();
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    return *this + rhs.scale(-FieldElement::one(field_));
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_field(rhs);
    Polynomial out(field_);
    if (is_zero() || rhs.is_zero()) return out;
    out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, FieldElement::zero(field_));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    out.normalize();
    return out;
}

Polynomial Polynomial::scale(const FieldElement& c) const {
    Polynomial out(field_);
    out.coeffs_.reserve(coeffs_.size());
    for (const FieldElement& a : coeffs_) out.coeffs_.push_back(a * c);
    out.normalize();
    return out;
}

Polynomial Polynomial::compose_affine(const FieldElement& u, const FieldElement& v) const {
    // Horner over the polynomial ring: p(u x + v).
    Polynomial arg = from_coeffs(field_, {v, u});
    Polynomial acc = zero(field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * arg + constant(*it);
    return acc;
}

bool Polynomial::operator==(const Polynomial& rhs) const {
    require_same_field(rhs);
    if (coeffs_.size() != rhs.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

std::string Polynomial::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ", ";
        out += coeffs_[i].to_string();
    }
    out += "]";
    return out;
}

Polynomial tau_poly(int i, std::span<const FieldElement> theta) {
    if (theta.empty()) throw DomainError("empty eigenvalue sequence");
    const Field& f = theta[0].field();
    if (i < 0 || i > static_cast<int>(theta.size()))
        throw DomainError("tau index out of range");
    Polynomial p = Polynomial::one(f);
    for (int k = 0; k < i; ++k) p = p * Polynomial::monic_linear(theta[static_cast<size_t>(k)]);
    return p;
}

Polynomial eta_poly(int i, std::span<const FieldElement> theta) {
    if (theta.empty()) throw DomainError("empty eigenvalue sequence");
    const Field& f = theta[0].field();
    int d = static_cast<int>(theta.size()) - 1;
    if (i < 0 || i > d + 1) throw DomainError("eta index out of range");
    Polynomial p = Polynomial::one(f);
    for (int k = 0; k < i; ++k) p = p * Polynomial::monic_linear(theta[static_cast<size_t>(d - k)]);
    return p;
}

}  // namespace tdpoly
