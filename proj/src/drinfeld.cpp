#include "tdpoly/drinfeld.hpp"

#include <algorithm>

#include "tdpoly/brackets.hpp"

namespace tdpoly {
namespace {

FieldElement square(const FieldElement& x) { return x * x; }

void require_index(int i, int d) {
    if (i < 1 || i > d) throw DomainError("index i must satisfy 1 <= i <= d");
}

// theta_0 theta*_0 + theta_d theta*_d.
FieldElement diag_point(const ParameterArray& pa) {
    return pa.theta(0) * pa.theta_star(0) + pa.theta(pa.d()) * pa.theta_star(pa.d());
}

// theta_0 theta*_d + theta_d theta*_0.
FieldElement cross_point(const ParameterArray& pa) {
    return pa.theta(0) * pa.theta_star(pa.d()) + pa.theta(pa.d()) * pa.theta_star(0);
}

// sum_i zeta_i p_{i+1} ... p_d over precomputed factors p_1..p_d.
Polynomial zeta_weighted_sum(std::span<const FieldElement> zeta,
                             std::span<const Polynomial> factors, const Field& f) {
    const int d = static_cast<int>(factors.size());
    Polynomial suffix = Polynomial::one(f);
    Polynomial acc = Polynomial::constant(zeta[static_cast<size_t>(d)]);
    for (int i = d - 1; i >= 0; --i) {
        suffix = factors[static_cast<size_t>(i)] * suffix;
        acc = acc + suffix.scale(zeta[static_cast<size_t>(i)]);
    }
    return acc;
}

void require_consistent(const ParameterArray& pa, const TypeData& td) {
    if (td.type != pa.type())
        throw DomainError("type data tag disagrees with the array type");
    std::vector<FieldElement> t = eigenvalues_from(td, pa.d(), false);
    std::vector<FieldElement> ts = eigenvalues_from(td, pa.d(), true);
    for (int i = 0; i <= pa.d(); ++i)
        if (t[static_cast<size_t>(i)] != pa.theta(i) || ts[static_cast<size_t>(i)] != pa.theta_star(i))
            throw DomainError("type data does not reproduce the array's eigenvalue sequences");
}

}  // namespace

FieldElement alpha_scalar(int i, TDType type, const Field& field,
                          const std::optional<FieldElement>& q, int d) {
    require_index(i, d);
    switch (type) {
        case TDType::I: {
            if (!q) throw DomainError("invalid-q: type I alpha requires q");
            FieldElement den = square(q->pow(d) - q->pow(-d));
            if (den.is_zero()) throw DomainError("invalid-q: q^{2d} = 1");
            return square(q->pow(i) - q->pow(-i)) / den;
        }
        case TDType::II: {
            FieldElement den = square(FieldElement::from_int(field, d));
            if (den.is_zero()) throw DomainError("alpha denominator d^2 vanishes");
            return square(FieldElement::from_int(field, i)) / den;
        }
        case TDType::IIIMinus:
        case TDType::IV:
            return i % 2 == 0 ? FieldElement::zero(field) : FieldElement::one(field);
        case TDType::IIIPlus:
            throw DomainError("alpha is undefined for type III+; use the product form of P");
    }
    throw DomainError("unreachable alpha type");
}

Polynomial p_poly(int i, const ParameterArray& pa) {
    const int d = pa.d();
    require_index(i, d);
    const Field& f = pa.field();
    FieldElement cross = cross_point(pa);
    FieldElement prod0i = (pa.theta(0) - pa.theta(i)) * (pa.theta_star(0) - pa.theta_star(i));

    if (pa.type() == TDType::IIIPlus) {
        Polynomial lin = Polynomial::from_coeffs(f, {cross, -FieldElement::one(f)});
        if (i % 2 == 1) return lin;
        FieldElement dd = square(FieldElement::from_int(f, d));
        if (dd.is_zero()) throw DomainError("d^2 vanishes in type III+ factor");
        FieldElement ratio = square(FieldElement::from_int(f, i)) / dd;
        return lin.scale(ratio) + Polynomial::constant(prod0i);
    }

    FieldElement alpha = alpha_scalar(i, pa.type(), f, pa.q(), d);
    Polynomial lin = Polynomial::from_coeffs(f, {cross, -FieldElement::one(f)});
    return lin.scale(alpha) + Polynomial::constant(prod0i);
}

Polynomial drinfeld_poly(const ParameterArray& pa) {
    const int d = pa.d();
    const Field& f = pa.field();
    if (pa.type() == TDType::IIIPlus) {
        Polynomial prod = Polynomial::one(f);
        for (int i = 1; i <= d; ++i) prod = prod * p_poly(i, pa);
        return prod;
    }
    std::vector<Polynomial> factors;
    factors.reserve(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) factors.push_back(p_poly(i, pa));
    return zeta_weighted_sum(pa.zeta(), factors, f);
}

Polynomial normalized_p(int i, const TypeData& td, int d) {
    require_index(i, d);
    const Field& f = td.a.field();
    FieldElement one = FieldElement::one(f);
    FieldElement minus_one = -one;

    switch (td.type) {
        case TDType::I: {
            if (!td.q) throw DomainError("invalid-q: type I requires q");
            const FieldElement& q = *td.q;
            FieldElement pref = square(q.pow(i) - q.pow(-i));
            FieldElement cst = td.b * td.b_star * q.pow(2 * i - 2 * d) +
                               td.c * td.c_star * q.pow(2 * d - 2 * i);
            return Polynomial::from_coeffs(f, {cst, minus_one}).scale(pref);
        }
        case TDType::II: {
            FieldElement di = FieldElement::from_int(f, d - i);
            FieldElement cst = td.b * td.b_star / FieldElement::from_int(f, 2) +
                               (td.b * td.c_star + td.c * td.b_star) * di +
                               td.c * td.c_star * di * di;
            FieldElement pref = square(FieldElement::from_int(f, i));
            return Polynomial::from_coeffs(f, {cst, minus_one}).scale(pref);
        }
        case TDType::IIIMinus: {
            if (i % 2 == 0)
                return Polynomial::constant(td.c * td.c_star *
                                            square(FieldElement::from_int(f, i)));
            FieldElement id = FieldElement::from_int(f, i - d);
            FieldElement two = FieldElement::from_int(f, 2);
            FieldElement cst = two * td.b * td.b_star +
                               two * (td.b * td.c_star + td.c * td.b_star) * id +
                               td.c * td.c_star * id * id;
            return Polynomial::from_coeffs(f, {cst, minus_one});
        }
        case TDType::IIIPlus: {
            // p-hat_i = p_i, in type-data form.
            FieldElement two = FieldElement::from_int(f, 2);
            FieldElement core = two * (td.a + td.b) * (td.a_star + td.b_star);
            FieldElement shift = td.c * td.c_star * square(FieldElement::from_int(f, d)) / two;
            if (i % 2 == 1) return Polynomial::from_coeffs(f, {core - shift, minus_one});
            FieldElement dd = square(FieldElement::from_int(f, d));
            FieldElement ratio = square(FieldElement::from_int(f, i)) / dd;
            return Polynomial::from_coeffs(f, {core + shift, minus_one}).scale(ratio);
        }
        case TDType::IV: {
            FieldElement ab = td.a * td.b_star + td.b * td.a_star;
            if (i == 1)
                return Polynomial::from_coeffs(
                    f, {ab + (td.a + td.b + td.c) * (td.a_star + td.b_star + td.c_star), one});
            if (i == 2) return Polynomial::constant(td.c * td.c_star);
            return Polynomial::from_coeffs(
                f, {ab + (td.a + td.b) * (td.a_star + td.b_star), one});
        }
    }
    throw DomainError("unreachable normalized_p type");
}

Polynomial normalized_drinfeld(const ParameterArray& pa, const TypeData& td) {
    require_consistent(pa, td);
    const int d = pa.d();
    const Field& f = pa.field();
    std::vector<Polynomial> factors;
    factors.reserve(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i) factors.push_back(normalized_p(i, td, d));
    if (td.type == TDType::IIIPlus) {
        Polynomial prod = Polynomial::one(f);
        for (const Polynomial& p : factors) prod = prod * p;
        return prod;
    }
    return zeta_weighted_sum(pa.zeta(), factors, f);
}

std::pair<FieldElement, FieldElement> affine_uv(const TypeData& td, int d) {
    const Field& f = td.a.field();
    FieldElement one = FieldElement::one(f);
    FieldElement zero = FieldElement::zero(f);
    if (td.type == TDType::IIIPlus || td.type == TDType::IV) return {one, zero};

    FieldElement u = zero, v = zero, anchor_diag = zero, anchor_cross = zero;
    switch (td.type) {
        case TDType::I: {
            if (!td.q) throw DomainError("invalid-q: type I requires q");
            const FieldElement& q = *td.q;
            FieldElement qd = q.pow(d), qmd = q.pow(-d);
            u = square(qd - qmd);
            v = FieldElement::from_int(f, 2) * td.a * td.a_star +
                FieldElement::from_int(f, 2) * (td.b + td.c) * (td.b_star + td.c_star) +
                (qd + qmd) * (td.a * (td.b_star + td.c_star) + td.a_star * (td.b + td.c));
            anchor_diag = td.b * td.b_star + td.c * td.c_star;
            anchor_cross = td.b * td.c_star + td.c * td.b_star;
            break;
        }
        case TDType::II: {
            FieldElement two = FieldElement::from_int(f, 2);
            u = square(FieldElement::from_int(f, d));
            v = two * td.a * td.a_star;
            anchor_diag = td.b * td.b_star / two;
            anchor_cross = -anchor_diag;
            break;
        }
        case TDType::IIIMinus: {
            FieldElement two = FieldElement::from_int(f, 2);
            FieldElement dd = FieldElement::from_int(f, d);
            u = one;
            v = (two * td.a - td.c * dd) * (two * td.a_star - td.c_star * dd) / two;
            anchor_diag = two * td.b * td.b_star;
            anchor_cross = -anchor_diag;
            break;
        }
        default: break;
    }

    std::vector<FieldElement> t = eigenvalues_from(td, d, false);
    std::vector<FieldElement> ts = eigenvalues_from(td, d, true);
    FieldElement diag = t[0] * ts[0] + t[static_cast<size_t>(d)] * ts[static_cast<size_t>(d)];
    FieldElement cross = t[0] * ts[static_cast<size_t>(d)] + t[static_cast<size_t>(d)] * ts[0];
    if (u * anchor_diag + v != diag || u * anchor_cross + v != cross)
        throw DomainError("affine anchor equations fail: inconsistent type data");
    return {u, v};
}

DrinfeldResult drinfeld_full(const ParameterArray& pa, const TypeData& td) {
    require_consistent(pa, td);
    const int d = pa.d();
    DrinfeldResult out{drinfeld_poly(pa),
                       normalized_drinfeld(pa, td),
                       FieldElement::one(pa.field()),
                       FieldElement::zero(pa.field()),
                       {},
                       {},
                       {}};
    auto [u, v] = affine_uv(td, d);
    out.u = u;
    out.v = v;
    for (int i = 1; i <= d; ++i) {
        out.p_list.push_back(p_poly(i, pa));
        out.p_hat_list.push_back(normalized_p(i, td, d));
        if (pa.type() != TDType::IIIPlus)
            out.alpha_list.push_back(alpha_scalar(i, pa.type(), pa.field(), pa.q(), d));
    }
    return out;
}

CheckResult check_d4_invariance(const ParameterArray& pa) {
    Polynomial base_p = drinfeld_poly(pa);
    TypeData base_td = fit_type_data(pa.theta(), pa.theta_star(), pa.type(), pa.q());
    Polynomial base_hat = normalized_drinfeld(pa, base_td);

    for (std::string_view word : kRelativeWords) {
        if (word.empty()) continue;
        ParameterArray rel = d4_apply(pa, word);
        Polynomial p = drinfeld_poly(rel);
        if (p != base_p)
            return CheckResult::fail("relative " + std::string(word) + ": P = " + p.to_string() +
                                     " differs from " + base_p.to_string());
        // The scalar pack transforms alongside the array; for d <= 1 packs
        // are not unique, so refitting would compare different
        // normalizations.
        TypeData td = d4_transform_type_data(base_td, word);
        Polynomial hat = normalized_drinfeld(rel, td);
        if (hat != base_hat)
            return CheckResult::fail("relative " + std::string(word) + ": P-hat = " +
                                     hat.to_string() + " differs from " + base_hat.to_string());
    }
    return CheckResult::pass();
}

SpecialsResult evaluate_specials(const ParameterArray& pa) {
    Polynomial P = drinfeld_poly(pa);
    FieldElement diag = diag_point(pa), cross = cross_point(pa);
    FieldElement v_diag = P.eval(diag), v_cross = P.eval(cross);
    FieldElement zd = pa.zeta(pa.d());
    FieldElement zdd = zeta_down_sequence(pa)[static_cast<size_t>(pa.d())];

    SpecialsResult out{v_diag, v_cross, zd, zdd, true, ""};
    if (pa.type() == TDType::IIIPlus && pa.d() >= 2) {
        if (!v_diag.is_zero() || !v_cross.is_zero()) {
            out.ok = false;
            out.detail = "type III+ evaluations must vanish, got " + v_diag.to_string() + ", " +
                         v_cross.to_string();
        }
        return out;
    }
    if (v_diag != zd) {
        out.ok = false;
        out.detail = "P(diag) = " + v_diag.to_string() + " but zeta_d = " + zd.to_string();
    } else if (v_cross != zdd) {
        out.ok = false;
        out.detail = "P(cross) = " + v_cross.to_string() + " but zeta_down_d = " + zdd.to_string();
    }
    return out;
}

Polynomial krawtchouk_drinfeld(std::span<const FieldElement> zeta, int d) {
    if (zeta.size() != static_cast<size_t>(d) + 1) throw DomainError("zeta must have length d+1");
    const Field& f = zeta[0].field();
    if (f.kind() != FieldKind::Rationals)
        throw DomainError("Krawtchouk Drinfel'd polynomial requires characteristic zero");
    if (!zeta[0].is_one()) throw DomainError("zeta_0 must be 1");

    std::vector<FieldElement> coeffs;
    FieldElement sign = FieldElement::one(f);
    for (int i = 0; i <= d; ++i) {
        FieldElement den = square(factorial_in_field(f, i)) * FieldElement::from_int(f, 4).pow(i);
        coeffs.push_back(sign * zeta[static_cast<size_t>(i)] / den);
        sign = -sign;
    }
    return Polynomial::from_coeffs(f, std::move(coeffs));
}

CheckResult check_krawtchouk_relation(std::span<const FieldElement> zeta, int d) {
    Polynomial pk = krawtchouk_drinfeld(zeta, d);
    const Field& f = zeta[0].field();

    FieldElement zero = FieldElement::zero(f);
    TypeData td{TDType::II,
                std::nullopt,
                zero,
                FieldElement::from_int(f, -2),
                zero,
                zero,
                FieldElement::from_int(f, 2),
                zero};
    ParameterArray pa =
        generate_parameter_array(td, d, std::vector<FieldElement>(zeta.begin(), zeta.end()));
    Polynomial hat = normalized_drinfeld(pa, td);

    // (lambda+2)^d P(4/(lambda+2)) = sum_i a_i 4^i (lambda+2)^{d-i}.
    Polynomial shift = Polynomial::from_coeffs(f, {FieldElement::from_int(f, 2),
                                                   FieldElement::one(f)});
    std::vector<Polynomial> shift_pows;
    shift_pows.push_back(Polynomial::one(f));
    for (int k = 1; k <= d; ++k) shift_pows.push_back(shift_pows.back() * shift);

    Polynomial cleared = Polynomial::zero(f);
    FieldElement four_pow = FieldElement::one(f);
    for (int i = 0; i <= d; ++i) {
        cleared = cleared + shift_pows[static_cast<size_t>(d - i)].scale(pk.coeff(i) * four_pow);
        four_pow = four_pow * FieldElement::from_int(f, 4);
    }
    FieldElement pref = square(factorial_in_field(f, d));
    if (d % 2 == 1) pref = -pref;
    Polynomial expected = cleared.scale(pref);

    if (hat == expected) return CheckResult::pass();
    return CheckResult::fail("Krawtchouk relation fails: P-hat = " + hat.to_string() +
                             ", cleared RHS = " + expected.to_string());
}

Polynomial qgeometric_drinfeld(std::span<const FieldElement> zeta, int d, const FieldElement& q) {
    if (zeta.size() != static_cast<size_t>(d) + 1) throw DomainError("zeta must have length d+1");
    const Field& f = q.field();
    if (q.is_zero()) throw DomainError("invalid-q: q = 0");
    FieldElement Q = q * q;
    for (int i = 1; i <= std::max(d, 1); ++i)
        if (Q.pow(i).is_one()) throw DomainError("invalid-q: q^" + std::to_string(2 * i) + " = 1");
    if (!zeta[0].is_one()) throw DomainError("zeta_0 must be 1");

    std::vector<FieldElement> coeffs;
    FieldElement sign = FieldElement::one(f);
    for (int i = 0; i <= d; ++i) {
        FieldElement den = square(q_factorial(i, q));
        coeffs.push_back(sign * zeta[static_cast<size_t>(i)] * q.pow(i) / den);
        sign = -sign;
    }
    return Polynomial::from_coeffs(f, std::move(coeffs));
}

CheckResult check_qgeometric_relation(std::span<const FieldElement> zeta, int d,
                                      const FieldElement& q) {
    Polynomial pg = qgeometric_drinfeld(zeta, d, q);
    const Field& f = q.field();

    FieldElement zero = FieldElement::zero(f);
    FieldElement one = FieldElement::one(f);
    TypeData td{TDType::I, q, zero, one, zero, zero, zero, one};
    ParameterArray pa =
        generate_parameter_array(td, d, std::vector<FieldElement>(zeta.begin(), zeta.end()));
    Polynomial hat = normalized_drinfeld(pa, td);

    // lambda^d P(w/lambda) = sum_i a_i w^i lambda^{d-i} with
    // w = q^{-1} (q - q^{-1})^{-2}.
    FieldElement w = (q * square(q - q.inverse())).inverse();
    std::vector<FieldElement> cleared_coeffs(static_cast<size_t>(d) + 1, zero);
    FieldElement w_pow = one;
    for (int i = 0; i <= d; ++i) {
        cleared_coeffs[static_cast<size_t>(d - i)] = pg.coeff(i) * w_pow;
        w_pow = w_pow * w;
    }
    FieldElement pref = square(q_factorial(d, q)) * square(q - q.inverse()).pow(d);
    if (d % 2 == 1) pref = -pref;
    Polynomial expected = Polynomial::from_coeffs(f, std::move(cleared_coeffs)).scale(pref);

    if (hat == expected) return CheckResult::pass();
    return CheckResult::fail("q-geometric relation fails: P-hat = " + hat.to_string() +
                             ", cleared RHS = " + expected.to_string());
}

}  // namespace tdpoly
