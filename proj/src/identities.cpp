#include "wk/identities.hpp"

#include <stdexcept>

#include "wk/bernoulli.hpp"
#include "wk/errors.hpp"

namespace wk {

namespace {

std::string genus_param(int g)
{
    return "g=" + std::to_string(g);
}

/// (-1)^m / (24^m m!)
Rational alternating_weight(int m)
{
    Rational w = Rational(1) / (Rational(24).pow(m) * Rational(factorial(m)));
    return m % 2 == 0 ? w : -w;
}

Rational sign(int exponent)
{
    return exponent % 2 == 0 ? Rational(1) : Rational(-1);
}

Series swap_variables(const Series& s, std::string_view a, std::string_view b)
{
    const auto ia = s.context()->index_of(a);
    const auto ib = s.context()->index_of(b);
    Series out(s.context());
    for (const auto& [m, c] : s.terms()) {
        Monomial swapped = m;
        std::swap(swapped[ia], swapped[ib]);
        out.accumulate(swapped, c);
    }
    return out;
}

void require_genus_at_least(int g, int min, const char* what)
{
    if (g < min)
        throw std::domain_error(std::string(what) + ": genus must be at least " + std::to_string(min));
}

}  // namespace

// ---------------------------------------------------------------- generating-function checks

VerificationReport verify_d_boundary(const Series& d)
{
    const Series boundary = restrict_zero(d, "w");
    const auto& ctx = boundary.context();
    const Series z = Series::variable(ctx, "z");
    const Series h = Series::variable(ctx, "h");
    const Series expected = exp(z * z * z * h * Rational(1, 24));
    return VerificationReport::vanishing("d-boundary", "G=" + std::to_string(ctx->grading_cap()),
                                         boundary - expected);
}

ReportList verify_d_ode(const Series& d)
{
    const std::string param = "G=" + std::to_string(d.context()->grading_cap());
    return {
        VerificationReport::vanishing("d-ode", param, d_equation_residual(d)),
        VerificationReport::vanishing("d-symmetry", param, d - swap_variables(d, "w", "z")),
    };
}

VerificationReport verify_e_ode(CorrelatorEngine& engine, int g)
{
    std::optional<Series> e;
    try {
        e.emplace(engine.e_series(g));
    } catch (const OdeInconsistent& ex) {
        return VerificationReport::vanishing("e-ode", genus_param(g), false, ex.what());
    } catch (const OdeUnderdetermined& ex) {
        return VerificationReport::vanishing("e-ode", genus_param(g), false, ex.what());
    }
    return VerificationReport::vanishing("e-ode", genus_param(g), grading_slice(e_equation_residual(*e), g));
}

VerificationReport verify_f_ode(const Series& f, const Series& d)
{
    return VerificationReport::vanishing("f-ode", "G=" + std::to_string(f.context()->grading_cap()),
                                         f_equation_residual(f, d));
}

ReportList verify_product_collapse(const Series& d)
{
    const auto& ctx = d.context();
    const int max_genus = ctx->grading_cap();
    const Series w = Series::variable(ctx, "w");
    const Series z = Series::variable(ctx, "z");
    const Series h = Series::variable(ctx, "h");

    const Series product = d * exp(-(w * w * w * h * Rational(1, 24)));

    Series sum(ctx);
    const Series kernel = w * z * (w + z) * h * Rational(1, 2);
    Series power = Series::constant(ctx, 1);
    for (int n = 0; n <= max_genus; ++n) {
        sum += power * (Rational(factorial(n)) / Rational(factorial(2 * n + 1)));
        power = power * kernel;
    }
    const Series expected = exp(z * z * z * h * Rational(1, 24)) * sum;

    const auto iz = ctx->index_of("z");
    const auto ih = ctx->grading_index();
    Series low_z(ctx);
    for (const auto& [m, c] : product.terms())
        if (m[iz] < m[ih])
            low_z.accumulate(m, c);

    const std::string param = "G=" + std::to_string(max_genus);
    return {
        VerificationReport::vanishing("product-collapse", param, product - expected),
        VerificationReport::vanishing("z-exponent-bound", param, low_z),
    };
}

// ---------------------------------------------------------------- tau identities

VerificationReport verify_telescope(CorrelatorEngine& engine, int g, int k)
{
    if (g < 1 || k < 1 || k > g)
        throw std::domain_error("verify_telescope: need 1 <= k <= g");
    Rational sum(0);
    for (int h = 0; h <= g; ++h)
        sum += alternating_weight(g - h) * engine.correlator(h, {0, 3 * h - g + k, g - k});
    return VerificationReport::equality("telescope", genus_param(g) + ",k=" + std::to_string(k), 0, sum);
}

ReportList verify_identity4(CorrelatorEngine& engine, int g)
{
    require_genus_at_least(g, 1, "verify_identity4");
    const Rational rhs = Rational(1) / (Rational(24).pow(g) * Rational(factorial(g)));
    ReportList out;

    Rational direct(0);
    for (int h = 1; h <= g; ++h)
        direct += alternating_weight(g - h) * engine.correlator(h, {3 * h - g, g - 1});
    out.push_back(VerificationReport::equality("eq4", genus_param(g), rhs, direct));

    // S_s = sum_h w_{g-h} <tau_{3h-g+s} tau_{g-1-s}>_h; the string equation
    // gives S_s + S_{s+1} = 0, so S_0 = (-1)^{g-1} S_{g-1}.
    std::vector<Rational> shifted(static_cast<std::size_t>(g));
    for (int s = 0; s < g; ++s)
        for (int h = 0; h <= g; ++h)
            shifted[static_cast<std::size_t>(s)] +=
                alternating_weight(g - h) * engine.correlator(h, {3 * h - g + s, g - 1 - s});
    for (int s = 0; s + 1 < g; ++s)
        out.push_back(VerificationReport::equality("eq4-shift", genus_param(g) + ",s=" + std::to_string(s), 0,
                                                   shifted[static_cast<std::size_t>(s)] +
                                                       shifted[static_cast<std::size_t>(s + 1)]));

    Rational binomial_sum(0);
    for (int h = 1; h <= g; ++h)
        binomial_sum += sign(h + 1) * Rational(binomial(g, h));
    out.push_back(VerificationReport::equality("eq4-endpoint", genus_param(g), rhs * binomial_sum,
                                               sign(g - 1) * shifted[static_cast<std::size_t>(g - 1)]));
    out.push_back(VerificationReport::equality("eq4-binomial", genus_param(g), 1, binomial_sum));
    return out;
}

ReportList verify_identity5(CorrelatorEngine& engine, const Series& f, int g)
{
    require_genus_at_least(g, 1, "verify_identity5");
    const Rational rhs = Rational(factorial(g)) * Rational(2).pow(2 - g) / Rational(factorial(2 * g));

    Rational via_e(0);
    for (int j = 0; j <= 2 * g - 2; ++j)
        via_e += sign(j) * engine.correlator(g - 1, {2 * g - 2 - j, j, g - 1});

    const Rational via_f = f.coefficient({g - 1, 2 * g - 2, g - 1});

    return {
        VerificationReport::equality("eq5", genus_param(g) + ",route=E", rhs, via_e),
        VerificationReport::equality("eq5", genus_param(g) + ",route=F", rhs, via_f),
    };
}

Eq3Assembly assemble_eq3(CorrelatorEngine& engine, int g)
{
    require_genus_at_least(g, 2, "assemble_eq3");
    Eq3Assembly out;

    const auto kappa = kappa_pair_to_tau(g - 2, 2 * g - 1);
    for (const auto& term : kappa.terms()) {
        const Rational value = engine.bracket(term.bracket.indices);
        if (term.sign > 0)
            out.two_point += value;
        else
            out.one_point += value;
    }

    for (int j = 0; j <= 2 * g - 2; ++j)
        out.delta0 += sign(j) * engine.bracket({2 * g - 2 - j, j, g - 1});
    out.delta0 *= Rational(1, 2);

    for (int h = 1; h <= g - 1; ++h) {
        out.delta_i += sign(g - h) * engine.bracket({3 * h - g, g - 1}) * engine.bracket({3 * (g - h) - 2});
        out.delta_i += sign(h) * engine.bracket({3 * h - 2}) * engine.bracket({3 * (g - h) - g, g - 1});
    }
    out.delta_i *= Rational(1, 2);
    return out;
}

Rational assemble_eq3_lhs(CorrelatorEngine& engine, int g)
{
    return assemble_eq3(engine, g).total();
}

Rational delta_i_reduced(CorrelatorEngine& engine, int g)
{
    require_genus_at_least(g, 2, "delta_i_reduced");
    Rational sum(0);
    for (int h = 1; h <= g - 1; ++h)
        sum += alternating_weight(g - h) * engine.correlator(h, {3 * h - g, g - 1});
    return sum;
}

VerificationReport verify_eq3(CorrelatorEngine& engine, int g)
{
    return VerificationReport::equality("eq3", genus_param(g), eq3_target(g), assemble_eq3_lhs(engine, g));
}

VerificationReport verify_lemma2(CorrelatorEngine& engine, int g)
{
    return VerificationReport::equality("lemma2", genus_param(g), lemma2_target(g),
                                        lemma2_bridge_factor(g) * assemble_eq3_lhs(engine, g));
}

// ---------------------------------------------------------------- engine consistency

VerificationReport verify_string_closure(CorrelatorEngine& engine, int g)
{
    require_genus_at_least(g, 1, "verify_string_closure");
    auto ctx = Context::for_genus({"w", "z"}, g);
    Series residual(ctx);
    for (int a = 0; a <= 3 * g; ++a) {
        const int b = 3 * g - a;
        Rational diff = engine.correlator(g, {0, a, b}) - engine.correlator(g, {a - 1, b}) -
                        engine.correlator(g, {a, b - 1});
        residual.accumulate({a, b, g}, diff);
    }
    return VerificationReport::vanishing("string-closure", genus_param(g), residual);
}

VerificationReport verify_two_point_palindrome(CorrelatorEngine& engine, int g)
{
    require_genus_at_least(g, 1, "verify_two_point_palindrome");
    const int top = 3 * g - 1;
    std::vector<Rational> row;
    Rational previous(0);
    for (int k = 0; k <= top; ++k) {
        previous = engine.three_point_with_zero(k, 3 * g - k, g) - previous;
        row.push_back(previous);
    }
    auto ctx = Context::for_genus({"w", "z"}, g);
    Series residual(ctx);
    for (int k = 0; k <= top; ++k)
        residual.accumulate({k, top - k, g},
                            row[static_cast<std::size_t>(k)] - row[static_cast<std::size_t>(top - k)]);
    // The recursion's values must also be what the engine serves.
    for (int k = 0; k <= top; ++k)
        residual.accumulate({k, top - k, g}, row[static_cast<std::size_t>(k)] - engine.two_point(k, top - k, g));
    return VerificationReport::vanishing("two-point-palindrome", genus_param(g), residual);
}

VerificationReport verify_cross_oracle(CorrelatorEngine& engine, int g)
{
    const auto table = engine.e_solve(g);
    const Series& d = engine.d_series();
    Series residual(d.context());
    for (const auto& [abc, value] : table) {
        const auto& [a, b, c] = abc;
        if (a == 0)
            residual.accumulate({b, c, g}, value - d.coefficient({b, c, g}));
    }
    return VerificationReport::vanishing("cross-oracle", genus_param(g), residual);
}

VerificationReport verify_f_consistency(CorrelatorEngine& engine, const Series& f, int g)
{
    Series residual(f.context());
    for (int a = 0; a <= 3 * g; ++a) {
        const int m = 3 * g - a;
        Rational sum(0);
        for (int c = 0; c <= m; ++c)
            sum += sign(c) * engine.correlator(g, {a, m - c, c});
        residual.accumulate({a, m, g}, f.coefficient({a, m, g}) - sum);
    }
    return VerificationReport::vanishing("f-consistency", genus_param(g), residual);
}

// ---------------------------------------------------------------- suites

namespace {

struct SuiteSpec {
    Suite suite;
    std::string_view name;
};

constexpr SuiteSpec suite_table[] = {
    {Suite::d_ode, "d-ode"},         {Suite::e_ode, "e-ode"},   {Suite::f_ode, "f-ode"},
    {Suite::boundary, "boundary"},   {Suite::telescope, "telescope"}, {Suite::eq4, "eq4"},
    {Suite::eq5, "eq5"},             {Suite::eq3, "eq3"},       {Suite::lemma2, "lemma2"},
    {Suite::string, "string"},       {Suite::cross, "cross"},   {Suite::all, "all"},
};

class FailFast {
public:
    bool add(VerificationReport r)
    {
        if (failed_)
            return false;
        failed_ = !r.passed();
        out_.push_back(std::move(r));
        return !failed_;
    }
    bool add(ReportList rs)
    {
        for (auto& r : rs)
            if (!add(std::move(r)))
                return false;
        return true;
    }
    ReportList take() { return std::move(out_); }

private:
    ReportList out_;
    bool failed_ = false;
};

}  // namespace

std::optional<Suite> parse_suite(std::string_view name)
{
    for (const auto& s : suite_table)
        if (s.name == name)
            return s.suite;
    return std::nullopt;
}

std::string_view suite_name(Suite s)
{
    for (const auto& entry : suite_table)
        if (entry.suite == s)
            return entry.name;
    return "unknown";
}

const std::vector<Suite>& individual_suites()
{
    static const std::vector<Suite> suites = {Suite::boundary, Suite::d_ode,     Suite::e_ode,  Suite::f_ode,
                                              Suite::telescope, Suite::string,   Suite::cross,  Suite::eq4,
                                              Suite::eq5,       Suite::eq3,      Suite::lemma2};
    return suites;
}

ReportList run_suite(CorrelatorEngine& engine, Suite suite, int max_genus)
{
    if (max_genus < 0)
        throw std::invalid_argument("run_suite: negative genus");
    if (max_genus > engine.max_genus())
        throw std::invalid_argument("run_suite: engine does not reach genus " + std::to_string(max_genus));

    if (suite == Suite::all) {
        ReportList out;
        for (Suite s : individual_suites()) {
            auto part = run_suite(engine, s, max_genus);
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return out;
    }

    // Generating functions are rebuilt at exactly max_genus so reports carry
    // the requested order.
    const Series d = max_genus == engine.max_genus() ? engine.d_series() : d_series(max_genus);
    FailFast run;
    switch (suite) {
    case Suite::boundary:
        run.add(verify_d_boundary(d));
        break;
    case Suite::d_ode:
        run.add(verify_d_ode(d));
        break;
    case Suite::e_ode:
        for (int g = 0; g <= max_genus && run.add(verify_e_ode(engine, g)); ++g) {
        }
        break;
    case Suite::f_ode:
        run.add(verify_f_ode(f_series(max_genus), d));
        break;
    case Suite::telescope:
        if (run.add(verify_product_collapse(d)))
            for (int g = 1; g <= max_genus; ++g)
                for (int k = 1; k <= g; ++k)
                    if (!run.add(verify_telescope(engine, g, k)))
                        return run.take();
        break;
    case Suite::string:
        for (int g = 1; g <= max_genus; ++g)
            if (!run.add(verify_string_closure(engine, g)) || !run.add(verify_two_point_palindrome(engine, g)))
                break;
        break;
    case Suite::cross: {
        const Series f = f_series(max_genus);
        for (int g = 0; g <= max_genus; ++g)
            if (!run.add(verify_cross_oracle(engine, g)) || !run.add(verify_f_consistency(engine, f, g)))
                break;
        break;
    }
    case Suite::eq4:
        for (int g = 1; g <= max_genus && run.add(verify_identity4(engine, g)); ++g) {
        }
        break;
    case Suite::eq5: {
        const Series f = f_series(max_genus);
        for (int g = 1; g <= max_genus && run.add(verify_identity5(engine, f, g)); ++g) {
        }
        break;
    }
    case Suite::eq3:
        for (int g = 2; g <= max_genus && run.add(verify_eq3(engine, g)); ++g) {
        }
        break;
    case Suite::lemma2:
        for (int g = 2; g <= max_genus && run.add(verify_lemma2(engine, g)); ++g) {
        }
        break;
    case Suite::all:
        break;
    }
    return run.take();
}

}  // namespace wk
