#pragma once

#include <array>
#include <map>
#include <set>
#include <shared_mutex>
#include <vector>

#include "wk/rational.hpp"
#include "wk/series.hpp"
#include "wk/tau_word.hpp"

namespace wk {

// ----------------------------------------------------------------------------
// Closed-form generating functions. Both live over {w, z, h} with the
// standard truncation for `max_genus` (see Context::for_genus).

/// D(w,z) = <tau_0 tau(w) tau(z)>
///        = exp((w^3+z^3) h/24) sum_n n!/(2n+1)! [wz(w+z) h/2]^n.
Series d_series(int max_genus);

/// F(w,z) = E(w,z,-z)
///        = exp(w^3 h/24) sum_{a,b} (w^3)^a (wz^2)^b h^{a+b}
///            (a+b)! / (2^{a+b-1} (2a+2b+2)!) * C(a+b+1, 2a+1).
Series f_series(int max_genus);

// ----------------------------------------------------------------------------
// KdV-translated differential equations, written as LHS - RHS. A correct
// generating function makes each residual the zero series.

/// (2w d/dw + 1)((w+z) D) - [w D + (w+z)^3 w D h/4 + D(w,0) z D(0,z) + 2w D(w,0) D(0,z)].
/// `d` must be over variables {w, z, h}.
Series d_equation_residual(const Series& d);

/// The part of the three-point equation linear in the unrestricted E:
/// (2x d/dx + 1)((x+y+z)^2 E) - x (x+y+z) E.
/// `e` must be over variables {x, y, z, h}.
Series e_equation_linear_part(const Series& e);

/// The remaining right-hand side terms: boundary products of restrictions
/// of E plus the genus-lowering term (x+y+z)^4 x E h/4.
Series e_equation_source(const Series& e);

/// e_equation_linear_part(e) - e_equation_source(e).
Series e_equation_residual(const Series& e);

/// 4w^2 F + 2w^3 dF/dw - w^5 F h/4 - [w(2w+z) D(w,z) D(0,-z) + w(2w-z) D(w,-z) D(0,z)].
/// Both series over {w, z, h} with the same context.
Series f_equation_residual(const Series& f, const Series& d);

// ----------------------------------------------------------------------------

/// Ordered triple (a, b, c) -> <tau_a tau_b tau_c>_g.
using ThreePointTable = std::map<std::array<int, 3>, Rational>;

/// Intersection numbers with one, two or three insertions up to a fixed
/// maximal genus.
///
/// Every value is served from a memo table keyed by TauWord; the table is
/// filled on demand and guarded by a reader/writer lock, so one engine can be
/// shared between threads. Values computed twice by racing threads are equal,
/// and the first insertion wins.
class CorrelatorEngine {
public:
    explicit CorrelatorEngine(int max_genus);
    CorrelatorEngine(const CorrelatorEngine&) = delete;
    CorrelatorEngine& operator=(const CorrelatorEngine&) = delete;

    int max_genus() const { return max_genus_; }

    /// D(w,z) truncated at the engine's genus.
    const Series& d_series() const { return d_; }

    /// <tau_{3g-2}>_g = 1/(24^g g!). Throws std::domain_error for g < 1.
    Rational one_point(int g);

    /// Coefficient of w^a z^b h^g in D(w,z), i.e. <tau_0 tau_a tau_b>_g.
    Rational three_point_with_zero(int a, int b, int g);

    /// <tau_a tau_b>_g via the string equation
    /// P_k = <tau_0 tau_k tau_{3g-k}>_g - P_{k-1}, P_{-1} = 0.
    Rational two_point(int a, int b, int g);

    /// Full table of genus-g three-point numbers: entries with a zero index
    /// come from D; the rest solve the three-point equation at order h^g.
    /// Throws OdeInconsistent / OdeUnderdetermined if the system fails.
    ThreePointTable e_solve(int g);

    /// Dispatcher: 0 if the dimension constraint fails; throws
    /// UnsupportedArity for n = 0 or n >= 4 and TruncationExceeded beyond
    /// max_genus.
    Rational correlator(const TauWord& t);

    /// Like correlator(), but negative indices read as 0.
    Rational correlator(int genus, const std::vector<int>& indices);

    /// Evaluates a genus-free bracket at its unique admissible genus (0 if none).
    Rational bracket(const std::vector<int>& indices);
    Rational evaluate(const SignedTauCombination& combination);

    /// Replaces a memoized value. Intended for mutation tests of the
    /// verification harness.
    void override_value(const TauWord& t, const Rational& value);

    /// E(x,y,z) over {x, y, z, h} for all genera <= max_genus, read from the
    /// memo table (solving as needed).
    Series e_series(int max_genus);

private:
    std::optional<Rational> lookup(const TauWord& t) const;
    void store(const TauWord& t, const Rational& value);
    Rational compute(const TauWord& t);
    void solve_two_point_row(int g);
    void require_genus(int g) const;

    int max_genus_;
    Series d_;
    mutable std::shared_mutex mutex_;
    std::map<TauWord, Rational> cache_;
    std::set<int> solved_three_point_;
};

}  // namespace wk
