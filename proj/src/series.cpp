#include "tdpoly/series.hpp"

#include <algorithm>

namespace tdpoly {
namespace {

struct KindShape {
    int num_params;
    int den_params;
    bool basic;
};

KindShape shape_of(SeriesKind k) {
    switch (k) {
        case SeriesKind::F3_2: return {3, 2, false};
        case SeriesKind::F2_1: return {2, 1, false};
        case SeriesKind::F1_0: return {1, 0, false};
        case SeriesKind::Phi3_2: return {3, 2, true};
        case SeriesKind::Phi2_1: return {2, 1, true};
    }
    throw DomainError("unreachable series kind");
}

}  // namespace

std::string series_kind_to_string(SeriesKind k) {
    switch (k) {
        case SeriesKind::F3_2: return "3F2";
        case SeriesKind::F2_1: return "2F1";
        case SeriesKind::F1_0: return "1F0";
        case SeriesKind::Phi3_2: return "3phi2";
        case SeriesKind::Phi2_1: return "2phi1";
    }
    return {};
}

SeriesKind series_kind_from_string(std::string_view s) {
    if (s == "3F2") return SeriesKind::F3_2;
    if (s == "2F1") return SeriesKind::F2_1;
    if (s == "1F0") return SeriesKind::F1_0;
    if (s == "3phi2") return SeriesKind::Phi3_2;
    if (s == "2phi1") return SeriesKind::Phi2_1;
    throw ParseError("bad series kind: " + std::string(s) +
                     " (expected 3F2, 2F1, 1F0, 3phi2, 2phi1)");
}

void validate_series_spec(const SeriesSpec& spec) {
    KindShape shape = shape_of(spec.kind);
    if (static_cast<int>(spec.num.size()) != shape.num_params ||
        static_cast<int>(spec.den.size()) != shape.den_params)
        throw DomainError("series parameter counts do not match " +
                          series_kind_to_string(spec.kind));
    if (spec.termination < 0) throw DomainError("termination order must be nonnegative");

    const Field& f = spec.arg.field();
    if (shape.basic) {
        if (!spec.q) throw DomainError("basic series require q");
        if (spec.q->is_zero()) throw DomainError("invalid-q: q = 0");
        FieldElement target = (*spec.q * *spec.q).pow(-spec.termination);
        if (std::find(spec.num.begin(), spec.num.end(), target) == spec.num.end())
            throw DomainError("series does not terminate: no numerator parameter q^{-2n}");
    } else {
        FieldElement target = FieldElement::from_int(f, -spec.termination);
        if (std::find(spec.num.begin(), spec.num.end(), target) == spec.num.end())
            throw DomainError("series does not terminate: no numerator parameter -n");
    }
}

FieldElement rising_factorial(const FieldElement& a, int k) {
    const Field& f = a.field();
    FieldElement acc = FieldElement::one(f);
    for (int j = 0; j < k; ++j) acc = acc * (a + FieldElement::from_int(f, j));
    return acc;
}

FieldElement evaluate_series(const SeriesSpec& spec) {
    validate_series_spec(spec);
    const Field& f = spec.arg.field();
    const bool basic = shape_of(spec.kind).basic;
    FieldElement Q = basic ? *spec.q * *spec.q : FieldElement::zero(f);

    FieldElement term = FieldElement::one(f);
    FieldElement sum = term;
    for (int k = 0; k < spec.termination; ++k) {
        // Term ratio from the defining Pochhammer recurrences.
        FieldElement ratio_num = spec.arg;
        FieldElement ratio_den = FieldElement::one(f);
        if (basic) {
            FieldElement qk = Q.pow(k);
            for (const FieldElement& a : spec.num) ratio_num *= FieldElement::one(f) - a * qk;
            for (const FieldElement& b : spec.den) ratio_den *= FieldElement::one(f) - b * qk;
            ratio_den *= FieldElement::one(f) - Q.pow(k + 1);
        } else {
            FieldElement kk = FieldElement::from_int(f, k);
            for (const FieldElement& a : spec.num) ratio_num *= a + kk;
            for (const FieldElement& b : spec.den) ratio_den *= b + kk;
            ratio_den *= FieldElement::from_int(f, k + 1);
        }
        if (ratio_den.is_zero())
            throw DomainError("undefined-series: denominator factor vanishes at k = " +
                              std::to_string(k + 1));
        term = term * ratio_num / ratio_den;
        sum += term;
    }
    return sum;
}

CheckResult check_saalschutz(int n, const FieldElement& a, const FieldElement& b,
                             const FieldElement& c) {
    const Field& f = a.field();
    FieldElement one = FieldElement::one(f);
    FieldElement balanced = one + a + b - c - FieldElement::from_int(f, n);

    SeriesSpec spec{SeriesKind::F3_2,
                    {FieldElement::from_int(f, -n), a, b},
                    {c, balanced},
                    one,
                    std::nullopt,
                    n};
    FieldElement rhs_den = rising_factorial(c, n) * rising_factorial(c - a - b, n);
    if (rhs_den.is_zero())
        throw DomainError("not-applicable: Saalschuetz right side is undefined");
    FieldElement lhs = evaluate_series(spec);
    FieldElement rhs = rising_factorial(c - a, n) * rising_factorial(c - b, n) / rhs_den;
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("Saalschuetz fails: lhs = " + lhs.to_string() +
                             ", rhs = " + rhs.to_string());
}

CheckResult check_chu_vandermonde(int n, const FieldElement& a, const FieldElement& c) {
    const Field& f = a.field();
    SeriesSpec spec{SeriesKind::F2_1,
                    {FieldElement::from_int(f, -n), a},
                    {c},
                    FieldElement::one(f),
                    std::nullopt,
                    n};
    FieldElement rhs_den = rising_factorial(c, n);
    if (rhs_den.is_zero())
        throw DomainError("not-applicable: Chu-Vandermonde right side is undefined");
    FieldElement lhs = evaluate_series(spec);
    FieldElement rhs = rising_factorial(c - a, n) / rhs_den;
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("Chu-Vandermonde fails: lhs = " + lhs.to_string() +
                             ", rhs = " + rhs.to_string());
}

CheckResult check_q_saalschutz(int n, const FieldElement& a, const FieldElement& b,
                               const FieldElement& c, const FieldElement& q) {
    if (a.is_zero() || b.is_zero() || c.is_zero())
        throw DomainError("not-applicable: q-Saalschuetz parameters must be nonzero");
    FieldElement Q = q * q;
    FieldElement balanced = a * b * Q.pow(1 - n) / c;

    SeriesSpec spec{SeriesKind::Phi3_2, {a, b, Q.pow(-n)}, {c, balanced}, Q, q, n};
    FieldElement rhs_den = q_pochhammer(c, Q, n) * q_pochhammer(c / (a * b), Q, n);
    if (rhs_den.is_zero())
        throw DomainError("not-applicable: q-Saalschuetz right side is undefined");
    FieldElement lhs = evaluate_series(spec);
    FieldElement rhs = q_pochhammer(c / a, Q, n) * q_pochhammer(c / b, Q, n) / rhs_den;
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("q-Saalschuetz fails: lhs = " + lhs.to_string() +
                             ", rhs = " + rhs.to_string());
}

CheckResult check_q_chu_vandermonde(int n, const FieldElement& a, const FieldElement& c,
                                    const FieldElement& q, QChuVariant variant) {
    const Field& f = a.field();
    FieldElement Q = q * q;
    FieldElement arg = Q;
    if (variant == QChuVariant::BalancedArgument) {
        if (a.is_zero()) throw DomainError("not-applicable: balanced form needs a != 0");
        arg = c * Q.pow(n) / a;
    }
    SeriesSpec spec{SeriesKind::Phi2_1, {a, Q.pow(-n)}, {c}, arg, q, n};
    FieldElement rhs_den = q_pochhammer(c, Q, n);
    if (rhs_den.is_zero())
        throw DomainError("not-applicable: q-Chu-Vandermonde right side is undefined");
    FieldElement quotient = a.is_zero() ? FieldElement::one(f) : q_pochhammer(c / a, Q, n);
    FieldElement rhs = quotient / rhs_den;
    if (variant == QChuVariant::UnitArgument) rhs = rhs * a.pow(n);
    FieldElement lhs = evaluate_series(spec);
    if (lhs == rhs) return CheckResult::pass();
    return CheckResult::fail("q-Chu-Vandermonde fails: lhs = " + lhs.to_string() +
                             ", rhs = " + rhs.to_string());
}

CheckResult check_odd_even_regrouping(const std::vector<FieldElement>& fine,
                                      const std::vector<FieldElement>& coarse) {
    if (fine.size() < 2 || fine.size() % 2 != 0)
        throw DomainError("regrouping expects an even number (d+1, d odd) of fine summands");
    const size_t N = fine.size() / 2;
    if (coarse.size() != N + 1)
        throw DomainError("regrouping expects " + std::to_string(N + 1) + " coarse summands");

    auto mismatch = [&](size_t m, const FieldElement& got) {
        return CheckResult::fail("regrouping fails at coarse index " + std::to_string(m) +
                                 ": expected " + coarse[m].to_string() + ", paired sum " +
                                 got.to_string());
    };
    if (coarse[0] != fine[0]) return mismatch(0, fine[0]);
    for (size_t m = 1; m < N; ++m) {
        FieldElement paired = fine[2 * m] + fine[2 * m - 1];
        if (coarse[m] != paired) return mismatch(m, paired);
    }
    if (coarse[N] != fine[2 * N - 1]) return mismatch(N, fine[2 * N - 1]);
    return CheckResult::pass();
}

}  // namespace tdpoly
