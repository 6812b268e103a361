#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wk/correlators.hpp"
#include "wk/report.hpp"

namespace wk {

// ---------------------------------------------------------------- generating-function checks

/// D(0,z) = exp(z^3 h/24).
VerificationReport verify_d_boundary(const Series& d);

/// "d-ode": the D-equation residual vanishes; "d-symmetry": D(w,z) = D(z,w).
ReportList verify_d_ode(const Series& d);

/// The three-point equation on the h^g slice, with E read from the engine.
VerificationReport verify_e_ode(CorrelatorEngine& engine, int g);

/// The F-equation residual vanishes for the closed-form F.
VerificationReport verify_f_ode(const Series& f, const Series& d);

/// "product-collapse": D(w,z) exp(-w^3 h/24) equals
/// exp(z^3 h/24) sum_n n!/(2n+1)! [wz(w+z) h/2]^n;
/// "z-exponent-bound": its h^g part only has powers z^m with m >= g.
ReportList verify_product_collapse(const Series& d);

// ---------------------------------------------------------------- tau identities

/// sum_{h=0}^{g} (-1)^{g-h} / (24^{g-h} (g-h)!) <tau_0 tau_{3h-g+k} tau_{g-k}>_h = 0.
VerificationReport verify_telescope(CorrelatorEngine& engine, int g, int k);

/// sum_{h=1}^{g} (-1)^{g-h} / (24^{g-h} (g-h)!) <tau_{3h-g} tau_{g-1}>_h = 1/(24^g g!),
/// directly ("eq4") and through the chain of string-equation shifts
/// ("eq4-shift", "eq4-endpoint", "eq4-binomial").
ReportList verify_identity4(CorrelatorEngine& engine, int g);

/// sum_{j=0}^{2g-2} (-1)^j <tau_{2g-2-j} tau_j tau_{g-1}> = g!/(2^{g-2} (2g)!),
/// from the solved three-point tables (route=E) and from the coefficient of
/// w^{g-1} z^{2g-2} h^{g-1} in F (route=F).
ReportList verify_identity5(CorrelatorEngine& engine, const Series& f, int g);

/// Terms of the tau-rewriting of kappa_{g-2}[kappa_{2g-1} + boundary]:
///   two_point - one_point + delta0 + delta_i.
struct Eq3Assembly {
    Rational two_point;  ///< <tau_{g-1} tau_{2g}>
    Rational one_point;  ///< <tau_{3g-2}>, entering with a minus sign
    Rational delta0;     ///< 1/2 sum_j (-1)^j <tau_{2g-2-j} tau_j tau_{g-1}>
    Rational delta_i;    ///< 1/2 sum_h [ ... ] over the separating divisors

    Rational total() const { return two_point - one_point + delta0 + delta_i; }
};

/// Throws std::domain_error for g < 2.
Eq3Assembly assemble_eq3(CorrelatorEngine& engine, int g);
Rational assemble_eq3_lhs(CorrelatorEngine& engine, int g);

/// The separating-divisor sum after substituting one-point values:
/// sum_{h=1}^{g-1} (-1)^{g-h} / (24^{g-h} (g-h)!) <tau_{3h-g} tau_{g-1}>_h.
Rational delta_i_reduced(CorrelatorEngine& engine, int g);

/// assemble_eq3_lhs(g) = g!/(2^{g-1} (2g)!).
VerificationReport verify_eq3(CorrelatorEngine& engine, int g);

/// Bridge factor times the assembled left side equals
/// |b_{2g}| (g-1)! / (2^g (2g)!).
VerificationReport verify_lemma2(CorrelatorEngine& engine, int g);

// ---------------------------------------------------------------- engine consistency

/// <tau_0 tau_a tau_b>_g = <tau_{a-1} tau_b>_g + <tau_a tau_{b-1}>_g for a+b = 3g.
VerificationReport verify_string_closure(CorrelatorEngine& engine, int g);

/// Re-runs the one-sided two-point recursion and checks P_k = P_{3g-1-k}.
VerificationReport verify_two_point_palindrome(CorrelatorEngine& engine, int g);

/// Zero-index entries of the genus-g three-point table equal the
/// coefficients of D.
VerificationReport verify_cross_oracle(CorrelatorEngine& engine, int g);

/// Coefficient of w^a z^m h^g in F equals sum_{b+c=m} (-1)^c <tau_a tau_b tau_c>_g.
VerificationReport verify_f_consistency(CorrelatorEngine& engine, const Series& f, int g);

// ---------------------------------------------------------------- suites

enum class Suite { d_ode, e_ode, f_ode, boundary, telescope, eq4, eq5, eq3, lemma2, string, cross, all };

std::optional<Suite> parse_suite(std::string_view name);
std::string_view suite_name(Suite s);
const std::vector<Suite>& individual_suites();

/// Runs a suite over its natural genus range up to `max_genus` (the engine
/// must reach that genus). Each suite stops at its first failing report; the
/// failing report is the last one returned.
ReportList run_suite(CorrelatorEngine& engine, Suite suite, int max_genus);

}  // namespace wk
