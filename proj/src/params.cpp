#include "tdpoly/params.hpp"

#include <algorithm>

#include "tdpoly/brackets.hpp"
#include "tdpoly/polynomial.hpp"

namespace tdpoly {
namespace {

void require_distinct(std::span<const FieldElement> seq, const char* label) {
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] == seq[j])
                throw DomainError(std::string(label) + " entries are not mutually distinct (" +
                                  std::to_string(i) + " and " + std::to_string(j) + ")");
}

FieldElement half(const FieldElement& x) {
    FieldElement two = FieldElement::from_int(x.field(), 2);
    if (two.is_zero()) throw DomainError("cannot halve in characteristic 2");
    return x / two;
}

void check_char_constraint(const Field& f, TDType type, int d) {
    std::uint64_t ch = f.characteristic();
    if (type == TDType::II && ch != 0 && (ch == 2 || static_cast<int>(ch) <= d))
        throw DomainError("characteristic constraint violated: type II needs Char 0 or an odd prime > d");
    if (is_type_iii(type) && ch != 0 && (ch == 2 || 2 * static_cast<int>(ch) <= d))
        throw DomainError("characteristic constraint violated: type III needs Char 0 or an odd prime > d/2");
    if (type == TDType::IV && ch != 2)
        throw DomainError("type IV requires characteristic 2");
}

void check_type_data_invariants(const TypeData& td, int d) {
    switch (td.type) {
        case TDType::I: {
            if (!td.q) throw DomainError("data-not-in-field: type I requires an explicit q");
            if (td.q->is_zero()) throw DomainError("invalid-q: q = 0");
            FieldElement Q = *td.q * *td.q;
            for (int i = 1; i <= std::max(d, 1); ++i)
                if (Q.pow(i).is_one())
                    throw DomainError("invalid-q: q^" + std::to_string(2 * i) + " = 1");
            break;
        }
        case TDType::II:
            if (d >= 1 && (td.b.is_zero() || td.b_star.is_zero()))
                throw DomainError("type II with d >= 1 requires b != 0 and b* != 0");
            break;
        case TDType::IIIPlus:
        case TDType::IIIMinus:
            if ((td.type == TDType::IIIPlus) != (d % 2 == 0))
                throw DomainError("type III parity does not match the diameter");
            if (td.c.is_zero() || td.c_star.is_zero())
                throw DomainError("type III requires c != 0 and c* != 0");
            if (d % 2 == 1 && (td.b.is_zero() || td.b_star.is_zero()))
                throw DomainError("type III with odd d requires b != 0 and b* != 0");
            break;
        case TDType::IV: {
            if (d != 3) throw DomainError("type IV requires d = 3");
            auto nz = [](const FieldElement& x, const char* what) {
                if (x.is_zero()) throw DomainError(std::string("type IV requires ") + what + " != 0");
            };
            nz(td.a + td.b, "a+b");
            nz(td.a + td.b + td.c, "a+b+c");
            nz(td.c, "c");
            nz(td.a_star + td.b_star, "a*+b*");
            nz(td.a_star + td.b_star + td.c_star, "a*+b*+c*");
            nz(td.c_star, "c*");
            break;
        }
    }
}

}  // namespace

std::string type_to_string(TDType t) {
    switch (t) {
        case TDType::I: return "I";
        case TDType::II: return "II";
        case TDType::IIIPlus: return "III+";
        case TDType::IIIMinus: return "III-";
        case TDType::IV: return "IV";
    }
    return {};
}

TDType type_from_string(std::string_view s) {
    if (s == "I") return TDType::I;
    if (s == "II") return TDType::II;
    if (s == "III+") return TDType::IIIPlus;
    if (s == "III-") return TDType::IIIMinus;
    if (s == "IV") return TDType::IV;
    throw ParseError("bad type tag: " + std::string(s) + " (expected I, II, III+, III-, IV)");
}

FieldElement compute_base(std::span<const FieldElement> theta,
                          std::span<const FieldElement> theta_star) {
    int d = static_cast<int>(theta.size()) - 1;
    if (d < 3)
        throw DomainError("compute_base requires d >= 3; for smaller d the base must be supplied");
    if (theta_star.size() != theta.size()) throw DomainError("sequence length mismatch");

    std::optional<FieldElement> ratio;
    for (auto seq : {theta, theta_star}) {
        for (int i = 2; i <= d - 1; ++i) {
            FieldElement den = seq[static_cast<size_t>(i - 1)] - seq[static_cast<size_t>(i)];
            if (den.is_zero())
                throw DomainError("not-a-tridiagonal-eigenvalue-sequence: repeated eigenvalue");
            FieldElement r = (seq[static_cast<size_t>(i - 2)] - seq[static_cast<size_t>(i + 1)]) / den;
            if (!ratio)
                ratio = r;
            else if (*ratio != r)
                throw DomainError(
                    "not-a-tridiagonal-eigenvalue-sequence: three-term ratios disagree");
        }
    }
    return *ratio - FieldElement::one(theta[0].field());
}

TDType classify_type(const FieldElement& beta, const Field& field, int d) {
    if (field.characteristic() == 2) {
        if (beta.is_zero()) {
            if (d != 3) throw DomainError("type IV requires d = 3, got d = " + std::to_string(d));
            return TDType::IV;
        }
        return TDType::I;
    }
    FieldElement two = FieldElement::from_int(field, 2);
    if (beta == two) return TDType::II;
    if (beta == -two) return d % 2 == 0 ? TDType::IIIPlus : TDType::IIIMinus;
    return TDType::I;
}

ParameterArray::ParameterArray(const Field& field, int d, std::vector<FieldElement> theta,
                               std::vector<FieldElement> theta_star,
                               std::vector<FieldElement> zeta, const FieldElement& beta,
                               std::optional<FieldElement> q)
    : field_(field),
      d_(d),
      theta_(std::move(theta)),
      theta_star_(std::move(theta_star)),
      zeta_(std::move(zeta)),
      beta_(beta),
      q_(std::move(q)),
      type_(TDType::I) {
    if (d_ < 0) throw DomainError("diameter must be nonnegative");
    size_t n = static_cast<size_t>(d_) + 1;
    if (theta_.size() != n || theta_star_.size() != n || zeta_.size() != n)
        throw DomainError("theta, theta*, zeta must all have length d+1");
    for (const auto* seq : {&theta_, &theta_star_, &zeta_})
        for (const FieldElement& x : *seq)
            if (x.field() != field_) throw DomainError("field mismatch in parameter array");
    if (beta_.field() != field_) throw DomainError("field mismatch in base");

    require_distinct(theta_, "theta");
    require_distinct(theta_star_, "theta*");
    if (!zeta_[0].is_one()) throw DomainError("zeta_0 must be 1");

    if (d_ >= 3) {
        if (compute_base(theta_, theta_star_) != beta_)
            throw DomainError("stored base disagrees with the three-term eigenvalue ratios");
    } else if (beta_.is_zero() && field_.characteristic() != 2) {
        throw DomainError("for d <= 2 the base must be a nonzero scalar");
    } else if (d_ <= 2 && beta_.is_zero()) {
        // Characteristic 2 with beta = 0 would classify as type IV, which
        // forces d = 3.
        throw DomainError("type IV requires d = 3");
    }

    type_ = classify_type(beta_, field_, d_);

    if (q_) {
        if (q_->field() != field_) throw DomainError("field mismatch in q");
        if (q_->is_zero()) throw DomainError("invalid-q: q = 0");
        if (*q_ * *q_ + (*q_ * *q_).inverse() != beta_)
            throw DomainError("invalid-q: q^2 + q^{-2} differs from the stored base");
        FieldElement Q = *q_ * *q_;
        for (int i = 1; i <= d_; ++i)
            if (Q.pow(i).is_one()) throw DomainError("invalid-q: q^" + std::to_string(2 * i) + " = 1");
    }
}

std::vector<FieldElement> eigenvalues_from(const TypeData& td, int d, bool starred) {
    const FieldElement &a = starred ? td.a_star : td.a, &b = starred ? td.b_star : td.b,
                       &c = starred ? td.c_star : td.c;
    const Field& f = a.field();
    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(d) + 1);

    switch (td.type) {
        case TDType::I: {
            if (!td.q) throw DomainError("data-not-in-field: type I requires an explicit q");
            for (int i = 0; i <= d; ++i)
                out.push_back(a + b * td.q->pow(2 * i - d) + c * td.q->pow(d - 2 * i));
            break;
        }
        case TDType::II: {
            FieldElement dhalf = half(FieldElement::from_int(f, d));
            for (int i = 0; i <= d; ++i)
                out.push_back(a + b * (FieldElement::from_int(f, i) - dhalf) +
                              c * FieldElement::from_int(f, i * (d - i)));
            break;
        }
        case TDType::IIIPlus:
        case TDType::IIIMinus: {
            FieldElement dhalf = half(FieldElement::from_int(f, d));
            for (int i = 0; i <= d; ++i) {
                FieldElement lin = c * (FieldElement::from_int(f, i) - dhalf);
                out.push_back(i % 2 == 0 ? a + b + lin : a - b - lin);
            }
            break;
        }
        case TDType::IV: {
            if (d != 3) throw DomainError("type IV requires d = 3");
            out = {a, b + c, a + c, b};
            break;
        }
    }
    return out;
}

TypeData fit_type_data(std::span<const FieldElement> theta,
                       std::span<const FieldElement> theta_star, TDType type,
                       std::optional<FieldElement> q) {
    if (theta.empty() || theta.size() != theta_star.size())
        throw DomainError("fit-failure: bad sequence lengths");
    const Field& f = theta[0].field();
    const int d = static_cast<int>(theta.size()) - 1;
    FieldElement zero = FieldElement::zero(f);

    TypeData td{type, std::nullopt, zero, zero, zero, zero, zero, zero};

    // Fits one sequence; writes (a, b, c) through the given references.
    auto fit_one = [&](std::span<const FieldElement> seq, FieldElement& a, FieldElement& b,
                       FieldElement& c) {
        switch (type) {
            case TDType::I: {
                const FieldElement& qq = *td.q;
                if (d == 0) {
                    a = seq[0];
                    b = c = zero;
                } else if (d == 1) {
                    // Canonical completion c = 0.
                    c = zero;
                    b = (seq[1] - seq[0]) / (qq - qq.inverse());
                    a = seq[0] - b * qq.inverse();
                } else {
                    // Rows i = 0,1,2 of a + b q^{2i-d} + c q^{d-2i}; the 3x3
                    // system is nonsingular because q^2 and q^4 differ from 1.
                    FieldElement x1 = qq.pow(2 - d) - qq.pow(-d);   // column b, row1 - row0
                    FieldElement y1 = qq.pow(d - 2) - qq.pow(d);    // column c, row1 - row0
                    FieldElement x2 = qq.pow(4 - d) - qq.pow(-d);   // row2 - row0
                    FieldElement y2 = qq.pow(d - 4) - qq.pow(d);
                    FieldElement r1 = seq[1] - seq[0];
                    FieldElement r2 = seq[2] - seq[0];
                    FieldElement det = x1 * y2 - x2 * y1;
                    if (det.is_zero()) throw DomainError("fit-failure: singular type I system");
                    b = (r1 * y2 - r2 * y1) / det;
                    c = (x1 * r2 - x2 * r1) / det;
                    a = seq[0] - b * qq.pow(-d) - c * qq.pow(d);
                }
                break;
            }
            case TDType::II: {
                if (d == 0) {
                    a = seq[0];
                    b = c = zero;
                } else if (d == 1) {
                    c = zero;
                    b = seq[1] - seq[0];
                    a = half(seq[0] + seq[1]);
                } else {
                    FieldElement two = FieldElement::from_int(f, 2);
                    c = (two * seq[1] - seq[0] - seq[2]) / two;
                    b = seq[1] - seq[0] - c * FieldElement::from_int(f, d - 1);
                    a = seq[0] + b * half(FieldElement::from_int(f, d));
                }
                break;
            }
            case TDType::IIIPlus:
            case TDType::IIIMinus: {
                FieldElement two = FieldElement::from_int(f, 2);
                if (d == 0) {
                    c = two;
                    b = zero;
                    a = seq[0];
                } else if (d == 1) {
                    c = two;
                    a = half(seq[0] + seq[1]) + FieldElement::one(f);
                    b = half(seq[0] - seq[1]);
                } else {
                    c = half(seq[2] - seq[0]);
                    a = half(seq[0] + seq[1] + c);
                    b = half(seq[0] - seq[1] + c * FieldElement::from_int(f, d - 1));
                }
                break;
            }
            case TDType::IV: {
                if (d != 3) throw DomainError("type IV requires d = 3");
                a = seq[0];
                b = seq[3];
                c = seq[2] - seq[0];
                break;
            }
        }
    };

    if (type == TDType::I) {
        if (!q) throw DomainError("data-not-in-field: type I fitting requires an explicit q");
        td.q = q;
        check_type_data_invariants(TypeData{TDType::I, q, zero, FieldElement::one(f), zero, zero,
                                            FieldElement::one(f), zero},
                                   d);
    }

    fit_one(theta, td.a, td.b, td.c);
    fit_one(theta_star, td.a_star, td.b_star, td.c_star);

    // The fitted pack must reproduce both sequences exactly.
    for (bool starred : {false, true}) {
        std::vector<FieldElement> back = eigenvalues_from(td, d, starred);
        std::span<const FieldElement> want = starred ? theta_star : theta;
        for (int i = 0; i <= d; ++i)
            if (back[static_cast<size_t>(i)] != want[static_cast<size_t>(i)])
                throw DomainError("fit-failure: sequences are not of type " + type_to_string(type));
    }
    return td;
}

ParameterArray generate_parameter_array(const TypeData& td, int d,
                                        std::vector<FieldElement> zeta) {
    const Field& f = td.a.field();
    check_char_constraint(f, td.type, d);
    check_type_data_invariants(td, d);

    std::vector<FieldElement> theta = eigenvalues_from(td, d, false);
    std::vector<FieldElement> theta_star = eigenvalues_from(td, d, true);

    FieldElement beta = FieldElement::zero(f);
    switch (td.type) {
        case TDType::I: beta = *td.q * *td.q + (*td.q * *td.q).inverse(); break;
        case TDType::II: beta = FieldElement::from_int(f, 2); break;
        case TDType::IIIPlus:
        case TDType::IIIMinus: beta = FieldElement::from_int(f, -2); break;
        case TDType::IV: beta = FieldElement::zero(f); break;
    }
    return ParameterArray(f, d, std::move(theta), std::move(theta_star), std::move(zeta), beta,
                          td.type == TDType::I ? td.q : std::nullopt);
}

std::vector<FieldElement> zeta_down_sequence(const ParameterArray& pa) {
    const int d = pa.d();
    BracketContext ctx = bracket_context(pa);
    const FieldElement& t0 = pa.theta(0);
    const FieldElement& ts0 = pa.theta_star(0);

    std::vector<FieldElement> out;
    out.reserve(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        FieldElement acc = FieldElement::zero(pa.field());
        for (int h = 0; h <= i; ++h) {
            FieldElement w = bracket(h, i - h, d - i, ctx);
            // eta*_{d-h}(theta*_0) / eta*_{d-i}(theta*_0) telescopes to the
            // product over indices h+1..i; eta*_{d-i}(theta*_0) is nonzero
            // because the dual eigenvalues are distinct.
            for (int m = h + 1; m <= i; ++m) w *= ts0 - pa.theta_star(m);
            for (int m = d - (i - h) + 1; m <= d; ++m) w *= t0 - pa.theta(m);
            acc += w * pa.zeta(h);
        }
        out.push_back(acc);
    }
    return out;
}

namespace {

ParameterArray apply_star(const ParameterArray& pa) {
    return ParameterArray(pa.field(), pa.d(), pa.theta_star(), pa.theta(), pa.zeta(), pa.beta(),
                          pa.q());
}

ParameterArray apply_big_down(const ParameterArray& pa) {
    std::vector<FieldElement> theta(pa.theta().rbegin(), pa.theta().rend());
    return ParameterArray(pa.field(), pa.d(), std::move(theta), pa.theta_star(),
                          zeta_down_sequence(pa), pa.beta(), pa.q());
}

}  // namespace

ParameterArray d4_apply(const ParameterArray& pa, std::string_view word) {
    ParameterArray current = pa;
    for (char g : word) {
        switch (g) {
            case 's': current = apply_star(current); break;
            case 'D': current = apply_big_down(current); break;
            case 'd':
                // down = star Down star, from the relation down star = star Down.
                current = apply_star(apply_big_down(apply_star(current)));
                break;
            default:
                throw ParseError(std::string("bad D4 word letter '") + g + "' (alphabet: s, d, D)");
        }
    }
    return current;
}

namespace {

TypeData transform_star(TypeData td) {
    std::swap(td.a, td.a_star);
    std::swap(td.b, td.b_star);
    std::swap(td.c, td.c_star);
    return td;
}

TypeData transform_big_down(TypeData td) {
    switch (td.type) {
        case TDType::I: std::swap(td.b, td.c); break;
        case TDType::II:
        case TDType::IIIMinus: td.b = -td.b; break;
        case TDType::IIIPlus: td.c = -td.c; break;
        case TDType::IV: std::swap(td.a, td.b); break;
    }
    return td;
}

}  // namespace

TypeData d4_transform_type_data(const TypeData& td, std::string_view word) {
    TypeData current = td;
    for (char g : word) {
        switch (g) {
            case 's': current = transform_star(current); break;
            case 'D': current = transform_big_down(current); break;
            case 'd':
                current = transform_star(transform_big_down(transform_star(current)));
                break;
            default:
                throw ParseError(std::string("bad D4 word letter '") + g + "' (alphabet: s, d, D)");
        }
    }
    return current;
}

}  // namespace tdpoly
