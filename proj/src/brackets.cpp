#include "tdpoly/brackets.hpp"

#include "tdpoly/polynomial.hpp"

namespace tdpoly {
namespace {

FieldElement checked_quotient(const FieldElement& num, const FieldElement& den) {
    if (den.is_zero()) throw DomainError("division impossible in bracket evaluation");
    return num / den;
}

}  // namespace

BracketContext bracket_context(const ParameterArray& pa) {
    return BracketContext{pa.type(), pa.field(), pa.d(), pa.q()};
}

FieldElement bracket(int r, int s, int t, const BracketContext& ctx) {
    if (r < 0 || s < 0 || t < 0) throw DomainError("bracket entries must be nonnegative");
    if (r + s + t > ctx.d)
        throw DomainError("bracket requires r+s+t <= d (" + std::to_string(r + s + t) + " > " +
                          std::to_string(ctx.d) + ")");
    const Field& f = ctx.field;

    switch (ctx.type) {
        case TDType::I: {
            if (!ctx.q) throw DomainError("invalid-q: type I bracket requires q");
            FieldElement Q = *ctx.q * *ctx.q;
            for (int j = 1; j <= r + s + t; ++j)
                if (Q.pow(j).is_one())
                    throw DomainError("invalid-q: q^" + std::to_string(2 * j) + " = 1");
            auto poch = [&](int n) { return q_pochhammer(Q, Q, n); };
            FieldElement num = poch(r + s) * poch(r + t) * poch(s + t);
            FieldElement den = poch(r) * poch(s) * poch(t) * poch(r + s + t);
            return checked_quotient(num, den);
        }
        case TDType::II: {
            FieldElement num = factorial_in_field(f, r + s) * factorial_in_field(f, r + t) *
                               factorial_in_field(f, s + t);
            FieldElement den = factorial_in_field(f, r) * factorial_in_field(f, s) *
                               factorial_in_field(f, t) * factorial_in_field(f, r + s + t);
            return checked_quotient(num, den);
        }
        case TDType::IIIPlus:
        case TDType::IIIMinus: {
            if (r % 2 == 1 && s % 2 == 1 && t % 2 == 1) return FieldElement::zero(f);
            auto half = [](int n) { return n / 2; };
            FieldElement num = factorial_in_field(f, half(r + s)) *
                               factorial_in_field(f, half(r + t)) *
                               factorial_in_field(f, half(s + t));
            FieldElement den = factorial_in_field(f, half(r)) * factorial_in_field(f, half(s)) *
                               factorial_in_field(f, half(t)) *
                               factorial_in_field(f, half(r + s + t));
            return checked_quotient(num, den);
        }
        case TDType::IV: {
            if (r + s + t > 3) throw DomainError("type IV brackets need r+s+t <= 3 (d = 3)");
            if (r == 1 && s == 1 && t == 1) return FieldElement::zero(f);
            return FieldElement::one(f);  // at least one entry is zero when r+s+t <= 3
        }
    }
    throw DomainError("unreachable bracket type");
}

CheckResult check_eta_expansion(const ParameterArray& pa, int i) {
    const int d = pa.d();
    if (i < 0 || i > d) throw DomainError("eta-expansion index out of range");
    BracketContext ctx = bracket_context(pa);

    Polynomial lhs = eta_poly(i, pa.theta());
    Polynomial rhs = Polynomial::zero(pa.field());
    for (int h = 0; h <= i; ++h) {
        FieldElement w = bracket(h, i - h, d - i, ctx);
        FieldElement eta_at0 = eta_poly(i - h, pa.theta()).eval(pa.theta(0));
        rhs = rhs + tau_poly(h, pa.theta()).scale(w * eta_at0);
    }
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("eta-expansion mismatch at i=" + std::to_string(i) + ": lhs=" +
                             lhs.to_string() + " rhs=" + rhs.to_string());
}

}  // namespace tdpoly
