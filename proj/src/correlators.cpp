#include "wk/correlators.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "wk/bernoulli.hpp"
#include "wk/errors.hpp"
#include "wk/linear_algebra.hpp"

namespace wk {

namespace {

Series var(const Series& like, std::string_view name)
{
    return Series::variable(like.context(), name);
}

/// s with every variable in `vars` set to zero, kept in the original context.
Series at_zero(const Series& s, std::initializer_list<std::string_view> vars)
{
    Series r = s;
    for (auto v : vars)
        r = restrict_zero(r, v);
    return embed(r, s.context());
}

}  // namespace

// ---------------------------------------------------------------- generating functions

Series d_series(int max_genus)
{
    auto ctx = Context::for_genus({"w", "z"}, max_genus);
    const Series one = Series::constant(ctx, 1);
    const Series w = Series::variable(ctx, "w");
    const Series z = Series::variable(ctx, "z");
    const Series h = Series::variable(ctx, "h");

    Series exponential = exp((w * w * w + z * z * z) * h * Rational(1, 24));
    Series kernel = w * z * (w + z) * h * Rational(1, 2);

    Series sum(ctx);
    Series power = one;
    for (int n = 0; n <= max_genus; ++n) {
        sum += power * (Rational(factorial(n)) / Rational(factorial(2 * n + 1)));
        power = power * kernel;
    }
    return exponential * sum;
}

Series f_series(int max_genus)
{
    auto ctx = Context::for_genus({"w", "z"}, max_genus);
    const Series w = Series::variable(ctx, "w");
    const Series h = Series::variable(ctx, "h");

    Series sum(ctx);
    for (int a = 0; a <= max_genus; ++a) {
        for (int b = 0; a + b <= max_genus; ++b) {
            const int s = a + b;
            Rational c = Rational(factorial(s)) * Rational(2).pow(1 - s) / Rational(factorial(2 * s + 2)) *
                         Rational(binomial(s + 1, 2 * a + 1));
            sum.accumulate({3 * a + b, 2 * b, s}, c);
        }
    }
    return exp(w * w * w * h * Rational(1, 24)) * sum;
}

// ---------------------------------------------------------------- equations

Series d_equation_residual(const Series& d)
{
    const Series w = var(d, "w");
    const Series z = var(d, "z");
    const Series h = var(d, "h");
    const Series w_plus_z = w + z;

    Series shifted = w_plus_z * d;
    Series lhs = Rational(2) * (w * partial_derivative(shifted, "w")) + shifted;

    const Series d_w0 = at_zero(d, {"z"});
    const Series d_0z = at_zero(d, {"w"});
    Series rhs = w * d;
    rhs += (pow(w_plus_z, 3) * w * h * Rational(1, 4)) * d;
    rhs += (z * d_w0) * d_0z;
    rhs += (Rational(2) * (w * d_w0)) * d_0z;
    return lhs - rhs;
}

Series e_equation_linear_part(const Series& e)
{
    const Series x = var(e, "x");
    const Series s = x + var(e, "y") + var(e, "z");
    Series t = (s * s) * e;
    return Rational(2) * (x * partial_derivative(t, "x")) + t - (x * s) * e;
}

Series e_equation_source(const Series& e)
{
    const Series x = var(e, "x");
    const Series y = var(e, "y");
    const Series z = var(e, "z");
    const Series h = var(e, "h");
    const Series s = x + y + z;
    const Series y_plus_z = y + z;

    const Series e_x00 = at_zero(e, {"y", "z"});
    const Series e_0yz = at_zero(e, {"x"});
    const Series e_xy0 = at_zero(e, {"z"});
    const Series e_00z = at_zero(e, {"x", "y"});
    const Series e_x0z = at_zero(e, {"y"});
    const Series e_0y0 = at_zero(e, {"x", "z"});

    Series src = (y_plus_z * y_plus_z * e_x00) * e_0yz;
    src += (x * z * e_xy0) * e_00z;
    src += (x * y * e_x0z) * e_0y0;
    src += (Rational(2) * (x * y_plus_z) * e_x00) * e_0yz;
    src += (Rational(2) * (x * (x + y)) * e_xy0) * e_00z;
    src += (Rational(2) * (x * (x + z)) * e_x0z) * e_0y0;
    src += (pow(s, 4) * x * h * Rational(1, 4)) * e;
    return src;
}

Series e_equation_residual(const Series& e)
{
    return e_equation_linear_part(e) - e_equation_source(e);
}

Series f_equation_residual(const Series& f, const Series& d)
{
    const Series w = var(f, "w");
    const Series z = var(f, "z");
    const Series h = var(f, "h");
    const Series w2 = w * w;
    const Series w3 = w2 * w;

    Series lhs = Rational(4) * (w2 * f) + Rational(2) * (w3 * partial_derivative(f, "w")) -
                 (w3 * w2 * h * Rational(1, 4)) * f;

    const Series d_0z = at_zero(d, {"w"});
    const Series d_0mz = substitute_sign(d_0z, "z");
    const Series d_wmz = substitute_sign(d, "z");
    Series rhs = (w * (Rational(2) * w + z) * d) * d_0mz;
    rhs += (w * (Rational(2) * w - z) * d_wmz) * d_0z;
    return lhs - rhs;
}

// ---------------------------------------------------------------- engine

CorrelatorEngine::CorrelatorEngine(int max_genus) : max_genus_(max_genus), d_(wk::d_series(std::max(max_genus, 0)))
{
    if (max_genus < 0)
        throw std::invalid_argument("CorrelatorEngine: negative genus");
}

void CorrelatorEngine::require_genus(int g) const
{
    if (g > max_genus_)
        throw TruncationExceeded("genus " + std::to_string(g) + " beyond the engine's maximal genus " +
                                 std::to_string(max_genus_));
}

std::optional<Rational> CorrelatorEngine::lookup(const TauWord& t) const
{
    std::shared_lock lock(mutex_);
    auto it = cache_.find(t);
    if (it == cache_.end())
        return std::nullopt;
    return it->second;
}

void CorrelatorEngine::store(const TauWord& t, const Rational& value)
{
    std::unique_lock lock(mutex_);
    cache_.try_emplace(t, value);
}

void CorrelatorEngine::override_value(const TauWord& t, const Rational& value)
{
    std::unique_lock lock(mutex_);
    cache_.insert_or_assign(t, value);
}

Rational CorrelatorEngine::correlator(const TauWord& t)
{
    if (t.arity() == 0 || t.arity() > 3)
        throw UnsupportedArity("unsupported arity " + std::to_string(t.arity()) + " for " + t.to_string());
    if (!dimension_ok(t))
        return 0;
    require_genus(t.genus());
    if (auto v = lookup(t))
        return *v;
    Rational value = compute(t);
    store(t, value);
    return *lookup(t);
}

Rational CorrelatorEngine::correlator(int genus, const std::vector<int>& indices)
{
    if (indices.empty() || indices.size() > 3)
        throw UnsupportedArity("unsupported arity " + std::to_string(indices.size()));
    if (genus < 0 || std::any_of(indices.begin(), indices.end(), [](int d) { return d < 0; }))
        return 0;
    return correlator(TauWord(genus, indices));
}

Rational CorrelatorEngine::compute(const TauWord& t)
{
    const int g = t.genus();
    const auto& idx = t.indices();
    switch (t.arity()) {
    case 1:
        return Rational(1) / (Rational(24).pow(g) * Rational(factorial(g)));
    case 2:
        solve_two_point_row(g);
        return *lookup(t);
    default:
        if (idx[0] == 0)
            return d_.coefficient({idx[1], idx[2], g});
        e_solve(g);
        return *lookup(t);
    }
}

void CorrelatorEngine::solve_two_point_row(int g)
{
    const int top = 3 * g - 1;
    std::vector<Rational> row(static_cast<std::size_t>(top + 1));
    Rational previous(0);
    for (int k = 0; k <= top; ++k) {
        row[static_cast<std::size_t>(k)] = three_point_with_zero(k, 3 * g - k, g) - previous;
        previous = row[static_cast<std::size_t>(k)];
    }
    for (int k = 0; k <= top; ++k) {
        if (row[static_cast<std::size_t>(k)] != row[static_cast<std::size_t>(top - k)])
            throw std::logic_error("two-point recursion is not palindromic in genus " + std::to_string(g) +
                                   " at index " + std::to_string(k));
    }
    for (int k = 0; k <= top; ++k)
        store(TauWord(g, {k, top - k}), row[static_cast<std::size_t>(k)]);
}

Rational CorrelatorEngine::one_point(int g)
{
    if (g < 1)
        throw std::domain_error("one_point: no one-point correlator in genus " + std::to_string(g));
    return correlator(TauWord(g, {3 * g - 2}));
}

Rational CorrelatorEngine::three_point_with_zero(int a, int b, int g)
{
    return correlator(g, {0, a, b});
}

Rational CorrelatorEngine::two_point(int a, int b, int g)
{
    return correlator(g, {a, b});
}

ThreePointTable CorrelatorEngine::e_solve(int g)
{
    if (g < 0)
        throw std::invalid_argument("e_solve: negative genus");
    require_genus(g);

    bool solved;
    {
        std::shared_lock lock(mutex_);
        solved = solved_three_point_.count(g) != 0;
    }
    if (!solved && g > 0) {
        auto ctx = Context::for_genus({"x", "y", "z"}, g);

        // Everything already determined: lower genera and the zero-index
        // entries of genus g.
        Series known(ctx);
        for (int gg = 0; gg <= g; ++gg)
            for (int a = 0; a <= 3 * gg; ++a)
                for (int b = 0; a + b <= 3 * gg; ++b) {
                    const int c = 3 * gg - a - b;
                    if (gg == g && std::min({a, b, c}) > 0)
                        continue;
                    known.accumulate({a, b, c, gg}, correlator(gg, {a, b, c}));
                }

        // The unknowns sit in order h^g with no zero index, so every
        // restriction and the h-shifted term annihilate them: only the
        // linear part sees them.
        std::vector<std::array<int, 3>> unknowns;
        for (int a = 1; 3 * a <= 3 * g; ++a)
            for (int b = a; a + 2 * b <= 3 * g; ++b)
                unknowns.push_back({a, b, 3 * g - a - b});

        std::map<Monomial, std::size_t> row_of;
        std::vector<SparseVector> rows;
        std::vector<Rational> rhs;
        auto row_for = [&](const Monomial& m) {
            auto [it, inserted] = row_of.try_emplace(m, rows.size());
            if (inserted) {
                rows.emplace_back();
                rhs.emplace_back(0);
            }
            return it->second;
        };

        for (std::size_t j = 0; j < unknowns.size(); ++j) {
            auto perm = unknowns[j];
            Series symmetric(ctx);
            do {
                symmetric.accumulate({perm[0], perm[1], perm[2], g}, 1);
            } while (std::next_permutation(perm.begin(), perm.end()));
            const Series column = e_equation_linear_part(symmetric);
            for (const auto& [m, c] : column.terms())
                rows[row_for(m)][j] = c;
        }
        const Series known_residual = grading_slice(e_equation_residual(known), g);
        for (const auto& [m, c] : known_residual.terms())
            rhs[row_for(m)] = -c;

        auto solution = solve_exact(rows, rhs, unknowns.size());
        if (solution.status == LinearSolution::Status::inconsistent)
            throw OdeInconsistent("three-point equation has no solution in genus " + std::to_string(g));
        if (solution.status == LinearSolution::Status::underdetermined)
            throw OdeUnderdetermined("three-point equation does not determine genus " + std::to_string(g));

        for (std::size_t j = 0; j < unknowns.size(); ++j)
            store(TauWord(g, {unknowns[j][0], unknowns[j][1], unknowns[j][2]}), solution.values[j]);
    }
    if (!solved) {
        std::unique_lock lock(mutex_);
        solved_three_point_.insert(g);
    }

    ThreePointTable table;
    for (int a = 0; a <= 3 * g; ++a)
        for (int b = 0; a + b <= 3 * g; ++b)
            table[{a, b, 3 * g - a - b}] = correlator(g, {a, b, 3 * g - a - b});
    return table;
}

Series CorrelatorEngine::e_series(int max_genus)
{
    auto ctx = Context::for_genus({"x", "y", "z"}, max_genus);
    Series e(ctx);
    for (int g = 0; g <= max_genus; ++g)
        for (const auto& [abc, value] : e_solve(g))
            e.accumulate({abc[0], abc[1], abc[2], g}, value);
    return e;
}

Rational CorrelatorEngine::bracket(const std::vector<int>& indices)
{
    auto g = admissible_genus(indices);
    if (!g)
        return 0;
    return correlator(*g, indices);
}

Rational CorrelatorEngine::evaluate(const SignedTauCombination& combination)
{
    Rational total(0);
    for (const auto& term : combination.terms())
        total += Rational(term.sign) * bracket(term.bracket.indices);
    return total;
}

}  // namespace wk
