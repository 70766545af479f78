#pragma once

#include <random>
#include <vector>

#include "tdpoly/leonard.hpp"
#include "tdpoly/params.hpp"

namespace tdpoly::testing {

/// Deterministic random data for the property suites. Every test pins a
/// seed, so failures reproduce exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    bool coin() { return uniform(0, 1) == 1; }

    FieldElement element(const Field& f) {
        switch (f.kind()) {
            case FieldKind::Rationals: {
                int num = uniform(-9, 9);
                int den = uniform(1, 6);
                return FieldElement::from_int(f, num) / FieldElement::from_int(f, den);
            }
            case FieldKind::Prime:
                return FieldElement::from_int(f, uniform(0, static_cast<int>(f.modulus()) - 1));
            case FieldKind::GF4: {
                static const char* names[] = {"0", "1", "w", "w+1"};
                return FieldElement::parse(f, names[uniform(0, 3)]);
            }
        }
        return FieldElement::zero(f);
    }

    FieldElement nonzero(const Field& f) {
        for (;;) {
            FieldElement x = element(f);
            if (!x.is_zero()) return x;
        }
    }

    /// A q usable for type I at desk scale: over Q any |q| not in {0, 1};
    /// over a prime field a unit whose square has order > max_power.
    FieldElement pick_q(const Field& f, int max_power) {
        if (f.kind() == FieldKind::Rationals) {
            static const char* pool[] = {"2", "3", "1/2", "5/2", "-2", "3/2", "-1/2", "7/3"};
            return FieldElement::parse(f, pool[uniform(0, 7)]);
        }
        for (;;) {
            FieldElement q = nonzero(f);
            FieldElement Q = q * q;
            bool ok = true;
            for (int i = 1; i <= max_power && ok; ++i)
                if (Q.pow(i).is_one()) ok = false;
            if (ok) return q;
        }
    }

private:
    std::mt19937_64 eng_;
};

inline std::vector<FieldElement> random_zeta(const Field& f, int d, Rng& rng) {
    std::vector<FieldElement> zeta{FieldElement::one(f)};
    for (int i = 1; i <= d; ++i) zeta.push_back(rng.element(f));
    return zeta;
}

/// Random admissible type data; retries until the produced eigenvalue
/// sequences are distinct.
inline TypeData random_type_data(TDType type, const Field& f, int d, Rng& rng) {
    for (int attempt = 0; attempt < 4096; ++attempt) {
        FieldElement zero = FieldElement::zero(f);
        TypeData td{type, std::nullopt, zero, zero, zero, zero, zero, zero};
        switch (type) {
            case TDType::I:
                td.q = rng.pick_q(f, std::max(d, 1));
                td.a = rng.element(f);
                td.b = rng.element(f);
                td.c = rng.element(f);
                td.a_star = rng.element(f);
                td.b_star = rng.element(f);
                td.c_star = rng.element(f);
                break;
            case TDType::II:
                td.a = rng.element(f);
                td.b = rng.nonzero(f);
                td.c = rng.element(f);
                td.a_star = rng.element(f);
                td.b_star = rng.nonzero(f);
                td.c_star = rng.element(f);
                break;
            case TDType::IIIPlus:
            case TDType::IIIMinus:
                td.a = rng.element(f);
                td.b = d % 2 == 1 ? rng.nonzero(f) : rng.element(f);
                td.c = rng.nonzero(f);
                td.a_star = rng.element(f);
                td.b_star = d % 2 == 1 ? rng.nonzero(f) : rng.element(f);
                td.c_star = rng.nonzero(f);
                break;
            case TDType::IV:
                td.a = rng.element(f);
                td.b = rng.element(f);
                td.c = rng.nonzero(f);
                td.a_star = rng.element(f);
                td.b_star = rng.element(f);
                td.c_star = rng.nonzero(f);
                break;
        }
        try {
            generate_parameter_array(td, d, random_zeta(f, d, rng));
            return td;
        } catch (const DomainError&) {
            continue;  // collision; redraw
        }
    }
    throw DomainError("random_type_data: no admissible draw found");
}

inline ParameterArray random_array(TDType type, const Field& f, int d, Rng& rng) {
    TypeData td = random_type_data(type, f, d, rng);
    return generate_parameter_array(td, d, random_zeta(f, d, rng));
}

/// The root-theorem subcases.
enum class LeonardCase {
    TypeIFull,   // b b* c c* != 0, psi in-field by construction
    TypeIDegT,   // b b* c c* = 0 with t != 0
    TypeIDegT0,  // b b* c c* = 0 with t = 0 (needs c c* != 0)
    TypeIIFull,  // c c* != 0, psi in-field by construction
    TypeIIDeg,   // c c* = 0
    TypeIII,     // type III-, odd d
    TypeIV,      // GF4, d = 3
};

/// Random Leonard data for a subcase; retries until all split-sequence
/// entries are nonzero and the induced eigenvalue sequences are distinct.
inline LeonardData random_leonard(LeonardCase which, const Field& f, int d, Rng& rng) {
    for (int attempt = 0; attempt < 8192; ++attempt) {
        FieldElement zero = FieldElement::zero(f);
        TypeData td{TDType::I, std::nullopt, zero, zero, zero, zero, zero, zero};
        FieldElement t = zero;
        std::optional<FieldElement> psi;
        try {
            switch (which) {
                case LeonardCase::TypeIFull: {
                    td.q = rng.pick_q(f, std::max(d, 1));
                    td.a = rng.element(f);
                    td.b = rng.nonzero(f);
                    td.c = rng.nonzero(f);
                    td.a_star = rng.element(f);
                    td.b_star = rng.nonzero(f);
                    td.c_star = rng.nonzero(f);
                    psi = rng.nonzero(f);
                    t = *psi + td.b * td.b_star * td.c * td.c_star / *psi;
                    break;
                }
                case LeonardCase::TypeIDegT:
                case LeonardCase::TypeIDegT0: {
                    td.q = rng.pick_q(f, std::max(d, 1));
                    td.a = rng.element(f);
                    td.b = rng.nonzero(f);
                    td.b_star = zero;  // makes b b* c c* vanish
                    td.c = rng.nonzero(f);
                    td.a_star = rng.element(f);
                    td.c_star = rng.nonzero(f);
                    t = which == LeonardCase::TypeIDegT ? rng.nonzero(f) : zero;
                    break;
                }
                case LeonardCase::TypeIIFull: {
                    td.type = TDType::II;
                    td.a = rng.element(f);
                    td.b = rng.nonzero(f);
                    td.c = rng.nonzero(f);
                    td.a_star = rng.element(f);
                    td.b_star = rng.nonzero(f);
                    td.c_star = rng.nonzero(f);
                    psi = rng.nonzero(f);
                    FieldElement sq = [&] {
                        FieldElement bc = td.b * td.c_star, cb = td.b_star * td.c;
                        return *psi * *psi - bc * bc - cb * cb;
                    }();
                    t = sq / (FieldElement::from_int(f, 4) * td.c * td.c_star);
                    break;
                }
                case LeonardCase::TypeIIDeg: {
                    td.type = TDType::II;
                    td.a = rng.element(f);
                    td.b = rng.nonzero(f);
                    td.c = zero;
                    td.a_star = rng.element(f);
                    td.b_star = rng.nonzero(f);
                    td.c_star = rng.coin() ? rng.nonzero(f) : zero;
                    t = rng.element(f);
                    break;
                }
                case LeonardCase::TypeIII: {
                    td.type = TDType::IIIMinus;
                    td.a = rng.element(f);
                    td.b = rng.nonzero(f);
                    td.c = rng.nonzero(f);
                    td.a_star = rng.element(f);
                    td.b_star = rng.nonzero(f);
                    td.c_star = rng.nonzero(f);
                    psi = rng.nonzero(f);
                    FieldElement bc = td.b * td.c_star, cb = td.b_star * td.c;
                    t = (*psi * *psi - bc * bc - cb * cb) / (td.c * td.c_star);
                    break;
                }
                case LeonardCase::TypeIV: {
                    // psi never lies in GF4 for admissible data, so the free
                    // scalar phi is drawn directly and psi stays absent.
                    td.type = TDType::IV;
                    td.a = rng.element(f);
                    td.b = rng.element(f);
                    td.c = rng.nonzero(f);
                    td.a_star = rng.element(f);
                    td.b_star = rng.element(f);
                    td.c_star = rng.nonzero(f);
                    t = rng.nonzero(f);
                    break;
                }
            }
            LeonardData ld = phi_from_params(td, d, t, psi);
            // The induced array must also exist (distinct eigenvalues etc.).
            generate_parameter_array(td, d, zeta_from_phi(ld.phi, f));
            return ld;
        } catch (const DomainError&) {
            continue;
        }
    }
    throw DomainError("random_leonard: no admissible draw found");
}

/// The parameter array a Leonard datum induces (zeta = running products).
inline ParameterArray leonard_array(const LeonardData& ld) {
    const Field& f = ld.td.a.field();
    return generate_parameter_array(ld.td, ld.d, zeta_from_phi(ld.phi, f));
}

}  // namespace tdpoly::testing
