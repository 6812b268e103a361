#include "wk/hodge.hpp"

#include <algorithm>
#include <stdexcept>

#include "wk/bernoulli.hpp"
#include "wk/linear_algebra.hpp"
#include "wk/series.hpp"

namespace wk {

namespace {

// Monomials of one weight in lambda_1..lambda_g, with coordinates.
class DegreePart {
public:
    DegreePart(int genus, int degree) : genus_(genus), degree_(degree)
    {
        LambdaPoly::Exponents e(static_cast<std::size_t>(genus), 0);
        enumerate(e, genus, degree);
        for (std::size_t i = 0; i < basis_.size(); ++i)
            index_.emplace(basis_[i], i);
    }

    const std::vector<LambdaPoly::Exponents>& basis() const { return basis_; }

    SparseVector coordinates(const LambdaPoly& p) const
    {
        SparseVector v;
        for (const auto& [e, c] : p.terms())
            v.emplace(index_.at(e), c);
        return v;
    }

    LambdaPoly polynomial(const SparseVector& v) const
    {
        LambdaPoly p(genus_);
        for (const auto& [i, c] : v)
            p.accumulate(basis_[i], c);
        return p;
    }

    /// Degree part of the ideal: span of monomial multiples of generators.
    EchelonBasis span(const GradedIdeal& ideal) const
    {
        EchelonBasis basis;
        for (const auto& r : ideal.generators()) {
            const int k = *r.degree();
            if (k > degree_)
                continue;
            DegreePart multipliers(genus_, degree_ - k);
            for (const auto& m : multipliers.basis()) {
                LambdaPoly mono(genus_);
                mono.accumulate(m, 1);
                basis.insert(coordinates(mono * r));
            }
        }
        return basis;
    }

private:
    // Fill exponents of lambda_1..lambda_top with total weight `remaining`.
    void enumerate(LambdaPoly::Exponents& e, int top, int remaining)
    {
        if (top == 0) {
            if (remaining == 0)
                basis_.push_back(e);
            return;
        }
        for (int k = 0; k * top <= remaining; ++k) {
            e[static_cast<std::size_t>(top - 1)] = k;
            enumerate(e, top - 1, remaining - k * top);
        }
        e[static_cast<std::size_t>(top - 1)] = 0;
    }

    int genus_;
    int degree_;
    std::vector<LambdaPoly::Exponents> basis_;
    std::map<LambdaPoly::Exponents, std::size_t> index_;
};

std::string genus_param(int g)
{
    return "g=" + std::to_string(g);
}

/// ch_1 .. ch_max_j in one logarithm.
std::vector<LambdaPoly> chern_characters(int g, int max_j)
{
    // Variables t, l1..lg; t carries the degree, so its cap bounds everything.
    std::vector<std::string> names{"t"};
    std::vector<int> caps{max_j};
    for (int i = 1; i <= g; ++i) {
        names.push_back("l" + std::to_string(i));
        caps.push_back(max_j / i);
    }
    auto ctx = Context::make(names, "t", caps);

    Series total_chern = Series::constant(ctx, 1);
    for (int i = 1; i <= g; ++i) {
        Monomial m(ctx->size(), 0);
        m[0] = i;
        m[static_cast<std::size_t>(i)] = 1;
        total_chern.accumulate(m, 1);
    }
    const Series logarithm = log(total_chern);

    std::vector<LambdaPoly> out(static_cast<std::size_t>(max_j + 1), LambdaPoly(g));
    for (const auto& [m, c] : logarithm.terms()) {
        const int j = m[0];
        LambdaPoly::Exponents e(m.begin() + 1, m.end());
        out[static_cast<std::size_t>(j)].accumulate(e, c);
    }
    for (int j = 1; j <= max_j; ++j) {
        Rational scale = Rational(1) / Rational(factorial(j - 1));
        out[static_cast<std::size_t>(j)] *= (j % 2 == 1 ? scale : -scale);
    }
    return out;
}

}  // namespace

GradedIdeal mumford_generators(int g)
{
    if (g < 1)
        throw std::invalid_argument("mumford_generators: genus must be at least 1");
    std::vector<LambdaPoly> gens;
    for (int d = 1; d <= 2 * g; ++d) {
        LambdaPoly component(g);
        for (int i = std::max(0, d - g); i <= std::min(d, g); ++i) {
            const int j = d - i;
            LambdaPoly term = LambdaPoly::lambda(g, i) * LambdaPoly::lambda(g, j);
            component += j % 2 == 0 ? term : Rational(-1) * term;
        }
        if (!component.is_zero())
            gens.push_back(std::move(component));
    }
    return GradedIdeal(g, std::move(gens));
}

LambdaPoly chern_character(int g, int j)
{
    if (g < 1 || j < 1)
        throw std::invalid_argument("chern_character: need g >= 1 and j >= 1");
    return chern_characters(g, j)[static_cast<std::size_t>(j)];
}

int membership_degree_bound(int g)
{
    return std::max(3 * g, 2 * g + 2);
}

LambdaPoly ideal_remainder(const LambdaPoly& p, const GradedIdeal& ideal)
{
    if (p.genus() != ideal.genus())
        throw std::invalid_argument("ideal_remainder: genus mismatch");
    if (!p.is_homogeneous())
        throw std::invalid_argument("ideal_remainder: polynomial is not homogeneous");
    if (p.is_zero())
        return p;
    const int d = *p.degree();
    if (d > membership_degree_bound(p.genus()))
        throw std::invalid_argument("ideal_remainder: degree " + std::to_string(d) + " beyond the working bound");
    DegreePart part(p.genus(), d);
    return part.polynomial(part.span(ideal).reduce(part.coordinates(p)));
}

bool ideal_member(const LambdaPoly& p, const GradedIdeal& ideal)
{
    return ideal_remainder(p, ideal).is_zero();
}

VerificationReport verify_eq2(int g)
{
    if (g < 1)
        throw std::invalid_argument("verify_eq2: genus must be at least 1");
    LambdaPoly lhs = Rational(factorial(2 * g - 1)) * chern_character(g, 2 * g - 1);
    LambdaPoly top = LambdaPoly::lambda(g, g - 1) * LambdaPoly::lambda(g, g);
    LambdaPoly difference = lhs - (g % 2 == 1 ? top : Rational(-1) * top);
    const LambdaPoly rem = ideal_remainder(difference, mumford_generators(g));
    return VerificationReport::vanishing("eq2", genus_param(g), rem.is_zero(), "remainder " + rem.to_string());
}

ReportList verify_ch_vanishing(int g)
{
    if (g < 1)
        throw std::invalid_argument("verify_ch_vanishing: genus must be at least 1");
    const auto ideal = mumford_generators(g);
    const auto ch = chern_characters(g, 2 * g + 2);
    ReportList out;
    for (int j = 2 * g; j <= 2 * g + 2; ++j) {
        const LambdaPoly rem = ideal_remainder(ch[static_cast<std::size_t>(j)], ideal);
        out.push_back(VerificationReport::vanishing("ch-vanish", genus_param(g) + ",j=" + std::to_string(j),
                                                    rem.is_zero(), "remainder " + rem.to_string()));
    }
    return out;
}

VerificationReport verify_even_ch_equivalence(int g)
{
    if (g < 1)
        throw std::invalid_argument("verify_even_ch_equivalence: genus must be at least 1");
    const auto mumford = mumford_generators(g);
    const auto ch = chern_characters(g, 2 * g);
    std::vector<LambdaPoly> even;
    for (int k = 1; 2 * k <= 2 * g; ++k)
        if (!ch[static_cast<std::size_t>(2 * k)].is_zero())
            even.push_back(ch[static_cast<std::size_t>(2 * k)]);
    const GradedIdeal even_ideal(g, std::move(even));

    for (int d = 1; d <= 2 * g; ++d) {
        DegreePart part(g, d);
        const auto a = part.span(mumford);
        const auto b = part.span(even_ideal);
        auto contained = [](const EchelonBasis& small, const EchelonBasis& big) -> std::optional<SparseVector> {
            for (const auto& [pivot, row] : small.rows()) {
                auto rem = big.reduce(row);
                if (!rem.empty())
                    return rem;
            }
            return std::nullopt;
        };
        if (auto rem = contained(a, b))
            return VerificationReport::vanishing("ch-equivalence", genus_param(g), false,
                                                 "degree " + std::to_string(d) + ": Mumford element outside, remainder " +
                                                     part.polynomial(*rem).to_string());
        if (auto rem = contained(b, a))
            return VerificationReport::vanishing("ch-equivalence", genus_param(g), false,
                                                 "degree " + std::to_string(d) + ": ch element outside, remainder " +
                                                     part.polynomial(*rem).to_string());
    }
    return VerificationReport::vanishing("ch-equivalence", genus_param(g), true, "");
}

VerificationReport verify_lambda_top_square(int g)
{
    if (g < 1)
        throw std::invalid_argument("verify_lambda_top_square: genus must be at least 1");
    const LambdaPoly top = LambdaPoly::lambda(g, g);
    const LambdaPoly rem = ideal_remainder(top * top, mumford_generators(g));
    return VerificationReport::vanishing("top-square", genus_param(g), rem.is_zero(), "remainder " + rem.to_string());
}

std::optional<HodgeCheck> parse_hodge_check(std::string_view name)
{
    if (name == "eq2")
        return HodgeCheck::eq2;
    if (name == "ch-vanish")
        return HodgeCheck::ch_vanish;
    if (name == "equiv")
        return HodgeCheck::equiv;
    if (name == "top-square")
        return HodgeCheck::top_square;
    if (name == "all")
        return HodgeCheck::all;
    return std::nullopt;
}

ReportList run_hodge_checks(int g, HodgeCheck check)
{
    ReportList out;
    const bool all = check == HodgeCheck::all;
    if (all || check == HodgeCheck::eq2)
        out.push_back(verify_eq2(g));
    if (all || check == HodgeCheck::ch_vanish)
        for (auto& r : verify_ch_vanishing(g))
            out.push_back(std::move(r));
    if (all || check == HodgeCheck::equiv)
        out.push_back(verify_even_ch_equivalence(g));
    if (all || check == HodgeCheck::top_square)
        out.push_back(verify_lambda_top_square(g));
    return out;
}

}  // namespace wk
