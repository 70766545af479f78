#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdpoly/check.hpp"
#include "tdpoly/field.hpp"

namespace tdpoly {

/// Supported terminating series shapes. Ordinary kinds use rising
/// factorials (a)_k; basic kinds use (a;q^2)_k — base q^2 is the
/// convention of every basic series in this library, so the q parameter
/// here is squared internally.
enum class SeriesKind { F3_2, F2_1, F1_0, Phi3_2, Phi2_1 };

std::string series_kind_to_string(SeriesKind k);
SeriesKind series_kind_from_string(std::string_view s);

/// A terminating (basic) hypergeometric sum: numerator and denominator
/// parameter lists, the argument, q for basic kinds, and the termination
/// order n certified by a numerator parameter equal to -n (ordinary) or
/// q^{-2n} (basic).
struct SeriesSpec {
    SeriesKind kind;
    std::vector<FieldElement> num;
    std::vector<FieldElement> den;
    FieldElement arg;
    std::optional<FieldElement> q;
    int termination = 0;
};

/// Validates parameter counts, the termination certificate, and q
/// requirements; throws DomainError on violation.
void validate_series_spec(const SeriesSpec& spec);

/// The exact finite sum of the first termination+1 terms. A denominator
/// Pochhammer factor vanishing before termination is an undefined-series
/// error.
FieldElement evaluate_series(const SeriesSpec& spec);

/// Rising factorial (a)_k = a (a+1) ... (a+k-1).
FieldElement rising_factorial(const FieldElement& a, int k);

/// Saalschuetz: 3F2[-n, a, b; c, 1+a+b-c-n; 1]
///   = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n).
CheckResult check_saalschutz(int n, const FieldElement& a, const FieldElement& b,
                             const FieldElement& c);

/// Chu-Vandermonde: 2F1[-n, a; c; 1] = (c-a)_n / (c)_n.
CheckResult check_chu_vandermonde(int n, const FieldElement& a, const FieldElement& c);

/// q-Saalschuetz in base Q = q^2:
/// 3phi2[a, b, Q^{-n}; c, a b Q^{1-n}/c; Q, Q]
///   = (c/a;Q)_n (c/b;Q)_n / ((c;Q)_n (c/(ab);Q)_n).
CheckResult check_q_saalschutz(int n, const FieldElement& a, const FieldElement& b,
                               const FieldElement& c, const FieldElement& q);

/// The two q-Chu-Vandermonde forms used in the root computations, base Q = q^2.
enum class QChuVariant {
    BalancedArgument,  // 2phi1[a, Q^{-n}; c; Q, c Q^n / a] = (c/a;Q)_n / (c;Q)_n
    UnitArgument,      // 2phi1[a, Q^{-n}; c; Q, Q]        = a^n (c/a;Q)_n / (c;Q)_n
};

CheckResult check_q_chu_vandermonde(int n, const FieldElement& a, const FieldElement& c,
                                    const FieldElement& q, QChuVariant variant);

/// The odd/even pairing that turns the 2N-term normalized sum of a type
/// III- Leonard system into an (N+1)-term 3F2: coarse_0 = fine_0,
/// coarse_m = fine_{2m} + fine_{2m-1} for 0 < m < N, coarse_N = fine_{2N-1}.
/// Verifies the pairing term by term (and hence equality of the totals).
CheckResult check_odd_even_regrouping(const std::vector<FieldElement>& fine,
                                      const std::vector<FieldElement>& coarse);

}  // namespace tdpoly
