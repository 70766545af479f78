#include "tdpoly/leonard.hpp"

#include <algorithm>
#include <cstdlib>

#include "tdpoly/drinfeld.hpp"

namespace tdpoly {
namespace {

FieldElement square(const FieldElement& x) { return x * x; }

// (d+1)/2 in the field; valid away from characteristic 2.
FieldElement midpoint_offset(const Field& f, int i, int d) {
    return FieldElement::from_int(f, i) -
           FieldElement::from_int(f, d + 1) / FieldElement::from_int(f, 2);
}

std::vector<FieldElement> gf4_elements(const Field& f) {
    return {FieldElement::parse(f, "0"), FieldElement::parse(f, "1"), FieldElement::parse(f, "w"),
            FieldElement::parse(f, "w+1")};
}

// Defining equation residual for psi; zero residual means psi is valid.
FieldElement psi_residual(const TypeData& td, const FieldElement& t_or_phi,
                          const FieldElement& psi) {
    const Field& f = td.a.field();
    switch (td.type) {
        case TDType::I: {
            if (psi.is_zero()) return FieldElement::one(f);  // psi must be invertible
            return psi + td.b * td.b_star * td.c * td.c_star / psi - t_or_phi;
        }
        case TDType::II:
            return square(psi) - FieldElement::from_int(f, 4) * t_or_phi * td.c * td.c_star -
                   square(td.b * td.c_star) - square(td.b_star * td.c);
        case TDType::IIIMinus:
            return square(psi) - t_or_phi * td.c * td.c_star - square(td.b * td.c_star) -
                   square(td.b_star * td.c);
        case TDType::IV: {
            FieldElement cc = td.c * td.c_star;
            FieldElement left = cc * t_or_phi;
            FieldElement right = (td.a * td.c_star + td.a_star * td.c + cc * psi) *
                                 (td.b * td.c_star + td.b_star * td.c + cc + cc * psi);
            return left - right;
        }
        default:
            throw DomainError("psi is not defined for type " + type_to_string(td.type));
    }
}

void require_vector_field(std::span<const FieldElement> v, const Field& f, const char* label) {
    for (const FieldElement& x : v)
        if (x.field() != f) throw DomainError(std::string("field mismatch in ") + label);
}

// Applies the alternating split-sequence word
// (A*-theta*_1)...(A*-theta*_i)(A-theta_{i-1})...(A-theta_0) to vec.
std::vector<FieldElement> apply_word(const Matrix& A, const Matrix& A_star,
                                     std::span<const FieldElement> theta,
                                     std::span<const FieldElement> theta_star, int i,
                                     std::vector<FieldElement> vec) {
    for (int j = 0; j <= i - 1; ++j) {
        std::vector<FieldElement> next = A.apply(vec);
        for (size_t k = 0; k < next.size(); ++k)
            next[k] -= theta[static_cast<size_t>(j)] * vec[k];
        vec = std::move(next);
    }
    for (int j = i; j >= 1; --j) {
        std::vector<FieldElement> next = A_star.apply(vec);
        for (size_t k = 0; k < next.size(); ++k)
            next[k] -= theta_star[static_cast<size_t>(j)] * vec[k];
        vec = std::move(next);
    }
    return vec;
}

// Primitive idempotents from the product formula
// E_i = prod_{j != i} (A - theta_j I) / (theta_i - theta_j).
std::vector<Matrix> primitive_idempotents(const Matrix& A, std::span<const FieldElement> theta) {
    const Field& f = A.field();
    const int n = A.rows();
    std::vector<Matrix> out;
    for (size_t i = 0; i < theta.size(); ++i) {
        Matrix e = Matrix::identity(f, n);
        for (size_t j = 0; j < theta.size(); ++j) {
            if (j == i) continue;
            FieldElement den = theta[i] - theta[j];
            if (den.is_zero()) throw DomainError("eigenvalues must be distinct");
            Matrix factor = A - Matrix::identity(f, n).scale(theta[j]);
            e = e * factor.scale(den.inverse());
        }
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

LeonardData phi_from_params(const TypeData& td, int d, const FieldElement& t_or_phi,
                            std::optional<FieldElement> psi) {
    const Field& f = td.a.field();
    if (td.type == TDType::IIIPlus)
        throw DomainError("no split-sequence parameterization is provided for type III+");
    if (psi && !psi_residual(td, t_or_phi, *psi).is_zero())
        throw DomainError("invalid-psi: psi does not satisfy its defining equation");

    std::vector<FieldElement> phi, phi2;
    for (int i = 1; i <= d; ++i) {
        FieldElement first = FieldElement::zero(f), second = FieldElement::zero(f);
        switch (td.type) {
            case TDType::I: {
                if (!td.q) throw DomainError("data-not-in-field: type I requires q");
                const FieldElement& q = *td.q;
                FieldElement pref =
                    (q.pow(i) - q.pow(-i)) * (q.pow(d - i + 1) - q.pow(i - d - 1));
                first = pref * (t_or_phi - td.b * td.b_star * q.pow(2 * i - d - 1) -
                                td.c * td.c_star * q.pow(d + 1 - 2 * i));
                second = pref * (t_or_phi - td.c * td.b_star * q.pow(2 * i - d - 1) -
                                 td.b * td.c_star * q.pow(d + 1 - 2 * i));
                break;
            }
            case TDType::II: {
                FieldElement pref = FieldElement::from_int(f, i * (d - i + 1));
                FieldElement off = midpoint_offset(f, i, d);
                FieldElement bb2 = td.b * td.b_star / FieldElement::from_int(f, 2);
                FieldElement quad = td.c * td.c_star * off * off;
                first = pref * (t_or_phi - bb2 +
                                (td.b * td.c_star + td.c * td.b_star) * off - quad);
                second = pref * (t_or_phi + bb2 +
                                 (td.c * td.b_star - td.b * td.c_star) * off - quad);
                break;
            }
            case TDType::IIIMinus: {
                if (i % 2 == 0) {
                    first = second = td.c * td.c_star * FieldElement::from_int(f, i * (d - i + 1));
                } else {
                    FieldElement off = midpoint_offset(f, i, d);
                    FieldElement two = FieldElement::from_int(f, 2);
                    FieldElement quad = td.c * td.c_star * off * off;
                    first = t_or_phi - two * td.b * td.b_star -
                            two * (td.b * td.c_star + td.c * td.b_star) * off - quad;
                    second = t_or_phi + two * td.b * td.b_star +
                             two * (td.b * td.c_star - td.c * td.b_star) * off - quad;
                }
                break;
            }
            case TDType::IV: {
                if (d != 3) throw DomainError("type IV requires d = 3");
                if (i == 1) {
                    first = t_or_phi;
                    second = t_or_phi + (td.a + td.b) * (td.a_star + td.b_star + td.c_star);
                } else if (i == 2) {
                    first = second = td.c * td.c_star;
                } else {
                    first = t_or_phi + (td.a + td.b) * td.c_star + td.c * (td.a_star + td.b_star);
                    second = t_or_phi + (td.a + td.b + td.c) * (td.a_star + td.b_star);
                }
                break;
            }
            default: break;
        }
        if (first.is_zero() || second.is_zero())
            throw DomainError("not-a-Leonard-system: split-sequence entry " + std::to_string(i) +
                              " vanishes");
        phi.push_back(first);
        phi2.push_back(second);
    }
    return LeonardData{td, d, t_or_phi, std::move(psi), std::move(phi), std::move(phi2)};
}

std::vector<FieldElement> zeta_from_phi(std::span<const FieldElement> phi, const Field& f) {
    require_vector_field(phi, f, "phi");
    std::vector<FieldElement> zeta{FieldElement::one(f)};
    for (const FieldElement& p : phi) {
        if (p.is_zero()) throw DomainError("not-a-Leonard-system: phi entry vanishes");
        zeta.push_back(zeta.back() * p);
    }
    return zeta;
}

std::vector<FieldElement> solve_psi(const TypeData& td, int /*d*/, const FieldElement& t_or_phi) {
    const Field& f = td.a.field();
    std::vector<FieldElement> out;
    auto push_unique = [&](const FieldElement& x) {
        if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
    };

    switch (td.type) {
        case TDType::I: {
            if (f.characteristic() == 2) {
                for (const FieldElement& cand : gf4_elements(f))
                    if (!cand.is_zero() && psi_residual(td, t_or_phi, cand).is_zero())
                        push_unique(cand);
                break;
            }
            // psi^2 - t psi + b b* c c* = 0.
            FieldElement disc = square(t_or_phi) -
                                FieldElement::from_int(f, 4) * td.b * td.b_star * td.c * td.c_star;
            if (auto s = sqrt_in_field(disc)) {
                FieldElement two = FieldElement::from_int(f, 2);
                for (const FieldElement& root : {(t_or_phi + *s) / two, (t_or_phi - *s) / two})
                    if (!root.is_zero()) push_unique(root);
            }
            break;
        }
        case TDType::II:
        case TDType::IIIMinus: {
            FieldElement rhs = td.type == TDType::II
                                   ? FieldElement::from_int(f, 4) * t_or_phi * td.c * td.c_star +
                                         square(td.b * td.c_star) + square(td.b_star * td.c)
                                   : t_or_phi * td.c * td.c_star + square(td.b * td.c_star) +
                                         square(td.b_star * td.c);
            if (auto s = sqrt_in_field(rhs)) {
                push_unique(*s);
                push_unique(-*s);
            }
            break;
        }
        case TDType::IV: {
            for (const FieldElement& cand : gf4_elements(f))
                if (psi_residual(td, t_or_phi, cand).is_zero()) push_unique(cand);
            break;
        }
        default:
            throw DomainError("psi is not defined for type " + type_to_string(td.type));
    }
    return out;
}

std::vector<FieldElement> leonard_roots(const LeonardData& ld) {
    const TypeData& td = ld.td;
    const Field& f = td.a.field();
    const int d = ld.d;
    std::vector<FieldElement> roots;

    switch (td.type) {
        case TDType::I: {
            const FieldElement& q = *td.q;
            FieldElement bbcc = td.b * td.b_star * td.c * td.c_star;
            if (!bbcc.is_zero()) {
                if (!ld.psi) throw DomainError("missing-psi: type I roots with b b* c c* != 0 need psi");
                for (int i = 1; i <= d; ++i)
                    roots.push_back(*ld.psi * q.pow(d + 1 - 2 * i) +
                                    bbcc * ld.psi->inverse() * q.pow(2 * i - d - 1));
            } else {
                for (int i = 1; i <= d; ++i) roots.push_back(ld.t * q.pow(d + 1 - 2 * i));
            }
            break;
        }
        case TDType::II: {
            if (!(td.c * td.c_star).is_zero()) {
                if (!ld.psi) throw DomainError("missing-psi: type II roots with c c* != 0 need psi");
                for (int i = 1; i <= d; ++i) {
                    FieldElement off = midpoint_offset(f, i, d);
                    roots.push_back(ld.t + *ld.psi * off + td.c * td.c_star * off * off);
                }
            } else {
                for (int i = 1; i <= d; ++i)
                    roots.push_back(ld.t + (td.b * td.c_star + td.c * td.b_star) *
                                               midpoint_offset(f, i, d));
            }
            break;
        }
        case TDType::IIIMinus: {
            if (!ld.psi) throw DomainError("missing-psi: type III- roots need psi");
            for (int i = 1; i <= d; i += 2) {
                FieldElement off = midpoint_offset(f, i, d);
                roots.push_back(ld.t + FieldElement::from_int(f, 2) * *ld.psi * off +
                                td.c * td.c_star * off * off);
            }
            break;
        }
        case TDType::IV: {
            if (!ld.psi)
                throw DomainError(
                    "missing-psi: type IV roots need psi, which lies in a quadratic "
                    "extension of GF4 for admissible data; check_type_iv_roots certifies "
                    "the root theorem without it");
            FieldElement cc = td.c * td.c_star;
            FieldElement ab = td.a * td.b_star + td.b * td.a_star;
            FieldElement f1 = cc * *ld.psi + td.a * td.c_star + td.b_star * td.c;
            FieldElement f2 = cc * *ld.psi + td.a_star * td.c + td.b * td.c_star;
            roots.push_back(ab + f1 * f2 / cc);
            roots.push_back(ab + (f1 + cc) * (f2 + cc) / cc);
            break;
        }
        default:
            throw DomainError("no closed-form roots for type " + type_to_string(td.type));
    }
    return roots;
}

CheckResult check_type_iv_roots(const TypeData& td, const FieldElement& phi_scalar) {
    if (td.type != TDType::IV) throw DomainError("certificate applies to type IV only");
    const Field& f = td.a.field();
    LeonardData ld = phi_from_params(td, 3, phi_scalar);
    ParameterArray pa = generate_parameter_array(td, 3, zeta_from_phi(ld.phi, f));
    Polynomial hat = normalized_drinfeld(pa, td);

    // psi's defining quadratic: (u + m psi)(v + m psi) = m phi, i.e.
    // m^2 psi^2 + m (u+v) psi + (u v - m phi) = 0, with
    // u = a c* + a* c, v = b c* + b* c + c c*, m = c c*.
    FieldElement m = td.c * td.c_star;
    FieldElement u = td.a * td.c_star + td.a_star * td.c;
    FieldElement v = td.b * td.c_star + td.b_star * td.c + m;
    Polynomial mu = Polynomial::from_coeffs(f, {u * v - m * phi_scalar, m * (u + v), m * m});

    // The two solutions of mu sum to (u+v)/m, which must be the stated gap.
    FieldElement gap = (td.a + td.b) / td.c + (td.a_star + td.b_star) / td.c_star +
                       FieldElement::one(f);
    if ((u + v) / m != gap)
        return CheckResult::fail("psi-pair gap mismatch: root sum " + ((u + v) / m).to_string() +
                                 " vs " + gap.to_string());

    // Reduce a polynomial in psi modulo the monic form of mu.
    Polynomial monic_mu = mu.scale((m * m).inverse());
    auto reduce = [&](Polynomial p) {
        while (p.degree() >= 2) {
            int k = p.degree();
            Polynomial shift = Polynomial::one(f);
            for (int j = 0; j < k - 2; ++j)
                shift = shift * Polynomial::from_coeffs(f, {FieldElement::zero(f),
                                                            FieldElement::one(f)});
            p = p - (shift * monic_mu).scale(p.coeff(k));
        }
        return p;
    };

    // The companion product equations (the defining one is mu itself):
    //   m phi_3 = (b c* + b* c + m psi)(a c* + a* c + m + m psi)
    //   m phi2_1 = (b c* + a* c + m psi)(a c* + b* c + m + m psi)
    //   m phi2_3 = (a c* + b* c + m psi)(b c* + a* c + m + m psi)
    // must hold as residues modulo mu.
    Polynomial psi_poly = Polynomial::from_coeffs(f, {FieldElement::zero(f), m});
    auto lin = [&](const FieldElement& c0) { return psi_poly + Polynomial::constant(c0); };
    FieldElement bc = td.b * td.c_star, bsc = td.b_star * td.c;
    FieldElement ac = td.a * td.c_star, asc = td.a_star * td.c;
    struct ProductEq {
        const char* name;
        FieldElement lhs;
        FieldElement first, second;  // constants of the two linear factors
    };
    for (const ProductEq& eq : std::initializer_list<ProductEq>{
             {"phi_3", ld.phi[2], bc + bsc, ac + asc + m},
             {"phi2_1", ld.phi2[0], bc + asc, ac + bsc + m},
             {"phi2_3", ld.phi2[2], ac + bsc, bc + asc + m}}) {
        Polynomial residue = reduce(lin(eq.first) * lin(eq.second) -
                                    Polynomial::constant(m * eq.lhs));
        if (!residue.is_zero())
            return CheckResult::fail(std::string("product equation for ") + eq.name +
                                     " fails: residue " + residue.to_string());
    }

    // Root expressions as linear-plus-quadratic polynomials in psi.
    FieldElement ab = td.a * td.b_star + td.b * td.a_star;
    Polynomial f1 = lin(ac + bsc);
    Polynomial f2 = lin(asc + bc);
    Polynomial cshift = Polynomial::constant(m);
    std::vector<Polynomial> root_exprs = {
        Polynomial::constant(ab) + (f1 * f2).scale(m.inverse()),
        Polynomial::constant(ab) + ((f1 + cshift) * (f2 + cshift)).scale(m.inverse()),
    };
    int index = 0;
    for (const Polynomial& z : root_exprs) {
        ++index;
        // hat(z) in GF4[psi]/(mu): Horner with reduction at every step.
        Polynomial acc = Polynomial::zero(f);
        for (int k = hat.degree(); k >= 0; --k)
            acc = reduce(acc * z + Polynomial::constant(hat.coeff(k)));
        if (!acc.is_zero())
            return CheckResult::fail("root expression " + std::to_string(index) +
                                     " does not annihilate P-hat: residue " + acc.to_string());
    }
    return CheckResult::pass();
}

MatrixPair realize_matrices(std::span<const FieldElement> theta,
                            std::span<const FieldElement> theta_star,
                            std::span<const FieldElement> phi) {
    if (theta.empty() || theta.size() != theta_star.size() || phi.size() + 1 != theta.size())
        throw DomainError("realization needs |theta| = |theta*| = |phi| + 1 >= 1");
    const Field& f = theta[0].field();
    require_vector_field(theta_star, f, "theta*");
    require_vector_field(phi, f, "phi");
    const int n = static_cast<int>(theta.size());

    Matrix A(f, n, n), A_star(f, n, n);
    for (int i = 0; i < n; ++i) {
        A.at(i, i) = theta[static_cast<size_t>(i)];
        A_star.at(i, i) = theta_star[static_cast<size_t>(i)];
    }
    for (int i = 1; i < n; ++i) {
        A.at(i, i - 1) = FieldElement::one(f);
        const FieldElement& p = phi[static_cast<size_t>(i - 1)];
        if (p.is_zero()) throw DomainError("not-a-Leonard-system: phi entry vanishes");
        A_star.at(i - 1, i) = p;
    }
    return MatrixPair{std::move(A), std::move(A_star)};
}

std::vector<FieldElement> oracle_zeta(const Matrix& A, const Matrix& A_star,
                                      std::span<const FieldElement> theta,
                                      std::span<const FieldElement> theta_star) {
    const Field& f = A.field();
    const int n = A.rows();
    const int d = static_cast<int>(theta.size()) - 1;
    if (n != d + 1 || A.cols() != n || A_star.rows() != n || A_star.cols() != n)
        throw DomainError("not-sharp/not-Leonard: matrices must be (d+1) x (d+1)");

    std::vector<Matrix> E = primitive_idempotents(A, theta);
    std::vector<Matrix> E_star = primitive_idempotents(A_star, theta_star);

    // U_i = (E*_0 V + ... + E*_i V) /\ (E_i V + ... + E_d V).
    std::vector<std::vector<std::vector<FieldElement>>> u_bases;
    std::vector<std::vector<FieldElement>> lower;  // grows with i
    for (int i = 0; i <= d; ++i) {
        for (const auto& col : column_space(E_star[static_cast<size_t>(i)])) lower.push_back(col);
        lower = span_basis(f, lower);

        std::vector<std::vector<FieldElement>> upper;
        for (int j = i; j <= d; ++j)
            for (const auto& col : column_space(E[static_cast<size_t>(j)])) upper.push_back(col);
        upper = span_basis(f, upper);

        auto u = intersect_spans(f, lower, upper);
        if (u.size() != 1)
            throw DomainError("not-sharp/not-Leonard: U_" + std::to_string(i) +
                              " has dimension " + std::to_string(u.size()));
        u_bases.push_back(std::move(u));
    }

    // Directness: the one-dimensional summands must fill the space.
    std::vector<std::vector<FieldElement>> all;
    for (const auto& u : u_bases) all.push_back(u[0]);
    if (static_cast<int>(span_basis(f, all).size()) != n)
        throw DomainError("not-sharp/not-Leonard: the split sum is not direct");

    const std::vector<FieldElement>& u0 = u_bases[0][0];
    int anchor = 0;
    while (u0[static_cast<size_t>(anchor)].is_zero()) ++anchor;

    std::vector<FieldElement> zeta;
    for (int i = 0; i <= d; ++i) {
        std::vector<FieldElement> w = apply_word(A, A_star, theta, theta_star, i, u0);
        FieldElement scalar = w[static_cast<size_t>(anchor)] / u0[static_cast<size_t>(anchor)];
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k] != scalar * u0[k])
                throw DomainError("not-split-consistent: operator word leaves the U_0 line at i=" +
                                  std::to_string(i));
        zeta.push_back(scalar);
    }
    return zeta;
}

std::vector<FieldElement> oracle_split_sequence(const MatrixPair& mp,
                                                std::span<const FieldElement> theta,
                                                std::span<const FieldElement> theta_star) {
    const Field& f = mp.A.field();
    const int n = mp.A.rows();
    const int d = n - 1;
    if (static_cast<int>(theta.size()) != n || static_cast<int>(theta_star.size()) != n)
        throw DomainError("spectrum length mismatch");

    // Validate the split-basis convention before trusting e_0.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const FieldElement& a = mp.A.at(i, j);
            const FieldElement& b = mp.A_star.at(i, j);
            if (i == j) {
                if (a != theta[static_cast<size_t>(i)] || b != theta_star[static_cast<size_t>(i)])
                    throw DomainError("not-split-consistent: diagonal disagrees with the spectra");
            } else if (i == j + 1) {
                if (!a.is_one()) throw DomainError("not-split-consistent: subdiagonal of A must be 1");
                if (!b.is_zero()) throw DomainError("not-split-consistent: A* must be upper bidiagonal");
            } else if (j == i + 1) {
                if (!a.is_zero()) throw DomainError("not-split-consistent: A must be lower bidiagonal");
                if (b.is_zero()) throw DomainError("not-split-consistent: superdiagonal of A* vanishes");
            } else if (!a.is_zero() || !b.is_zero()) {
                throw DomainError("not-split-consistent: matrices are not bidiagonal");
            }
        }

    std::vector<FieldElement> e0(static_cast<size_t>(n), FieldElement::zero(f));
    e0[0] = FieldElement::one(f);

    std::vector<FieldElement> zeta;
    for (int i = 0; i <= d; ++i) {
        std::vector<FieldElement> w = apply_word(mp.A, mp.A_star, theta, theta_star, i, e0);
        for (size_t k = 1; k < w.size(); ++k)
            if (!w[k].is_zero())
                throw DomainError("not-split-consistent: operator word does not return to U_0");
        zeta.push_back(w[0]);
    }

    // Cross-check against the generic idempotent path.
    std::vector<FieldElement> generic = oracle_zeta(mp.A, mp.A_star, theta, theta_star);
    for (int i = 0; i <= d; ++i)
        if (generic[static_cast<size_t>(i)] != zeta[static_cast<size_t>(i)])
            throw DomainError("oracle paths disagree at i=" + std::to_string(i));
    return zeta;
}

TridiagReport check_tridiagonal_relations(const Matrix& A, const Matrix& A_star,
                                          std::span<const FieldElement> theta,
                                          std::span<const FieldElement> theta_star) {
    const Field& f = A.field();
    const int n = A.rows();
    const int d = static_cast<int>(theta.size()) - 1;
    if (n != d + 1 || A_star.rows() != n)
        throw DomainError("matrices must be (d+1) x (d+1)");

    TridiagReport report;
    std::vector<Matrix> E = primitive_idempotents(A, theta);
    std::vector<Matrix> E_star = primitive_idempotents(A_star, theta_star);

    Matrix ident = Matrix::identity(f, n);
    for (const auto* family : {&E, &E_star}) {
        Matrix sum(f, n, n);
        for (const Matrix& e : *family) sum = sum + e;
        if (sum != ident) report.idempotents_ok = false;
        for (size_t i = 0; i < family->size() && report.idempotents_ok; ++i)
            for (size_t j = 0; j < family->size(); ++j) {
                Matrix prod = (*family)[i] * (*family)[j];
                if (i == j ? prod != (*family)[i] : !prod.is_zero()) {
                    report.idempotents_ok = false;
                    break;
                }
            }
    }

    std::vector<Matrix> A_pows{ident}, As_pows{ident};
    for (int k = 1; k <= d; ++k) {
        A_pows.push_back(A_pows.back() * A);
        As_pows.push_back(As_pows.back() * A_star);
    }
    for (int i = 0; i <= d && report.triple_products_ok; ++i)
        for (int j = 0; j <= d && report.triple_products_ok; ++j)
            for (int k = 0; k < std::abs(i - j); ++k) {
                bool star_ok = (E_star[static_cast<size_t>(i)] * A_pows[static_cast<size_t>(k)] *
                                E_star[static_cast<size_t>(j)])
                                   .is_zero();
                bool plain_ok = (E[static_cast<size_t>(i)] * As_pows[static_cast<size_t>(k)] *
                                 E[static_cast<size_t>(j)])
                                    .is_zero();
                if (!star_ok || !plain_ok) {
                    report.triple_products_ok = false;
                    report.detail = "triple product nonzero at (i,j,k) = (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")";
                    break;
                }
            }

    for (const Matrix& e : E) report.shape.push_back(e.rank());
    for (const Matrix& e : E_star) report.shape_star.push_back(e.rank());
    for (int i = 0; i <= d; ++i) {
        if (report.shape[static_cast<size_t>(i)] != report.shape[static_cast<size_t>(d - i)] ||
            report.shape_star[static_cast<size_t>(i)] != report.shape_star[static_cast<size_t>(d - i)])
            report.shape_symmetric = false;
    }
    return report;
}

}  // namespace tdpoly
