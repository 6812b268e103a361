#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wk/rational.hpp"

namespace wk {

/// Exponent vector, one entry per variable of the owning context.
using Monomial = std::vector<int>;

/// Ordered variable names plus truncation caps.
///
/// One variable is the grading counter (the genus parameter, usually "h");
/// its cap is the maximal degree kept. Every variable carries its own cap and
/// an optional cap bounds the total degree of the non-grading variables. The
/// monomials violating any cap form an ideal, so truncated products are exact
/// in the quotient ring.
class Context {
public:
    static std::shared_ptr<const Context> make(std::vector<std::string> names, std::string_view grading,
                                               std::vector<int> caps, std::optional<int> total_cap = std::nullopt);

    /// Standard context for a computation up to genus `max_genus`: the given
    /// variables followed by "h", per-variable caps 3G+2 and total cap 3G+4.
    static std::shared_ptr<const Context> for_genus(const std::vector<std::string>& names, int max_genus);

    const std::vector<std::string>& names() const { return names_; }
    std::size_t size() const { return names_.size(); }
    std::size_t grading_index() const { return grading_; }
    const std::string& grading_name() const { return names_[grading_]; }
    int grading_cap() const { return caps_[grading_]; }
    const std::vector<int>& caps() const { return caps_; }
    const std::optional<int>& total_cap() const { return total_cap_; }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index_of(std::string_view name) const;  // throws UnknownVariable

    bool admits(const Monomial& m) const;

    /// Same context with one variable removed (never the grading variable).
    std::shared_ptr<const Context> without(std::string_view name) const;

    friend bool operator==(const Context& a, const Context& b);

private:
    Context() = default;
    std::vector<std::string> names_;
    std::size_t grading_ = 0;
    std::vector<int> caps_;
    std::optional<int> total_cap_;
};

using ContextPtr = std::shared_ptr<const Context>;

/// Truncated multivariate formal power series with exact coefficients.
/// Sparse: only nonzero coefficients are stored.
class Series {
public:
    explicit Series(ContextPtr ctx);

    static Series constant(ContextPtr ctx, const Rational& c);
    static Series variable(ContextPtr ctx, std::string_view name);
    static Series monomial(ContextPtr ctx, const Monomial& m, const Rational& c = Rational(1));

    const ContextPtr& context() const { return ctx_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of `m`; 0 if absent. Throws TruncationExceeded if `m`
    /// lies outside the caps.
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;

    /// Adds `c` to the coefficient of `m`; monomials beyond the caps are dropped.
    void accumulate(const Monomial& m, const Rational& c);

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Rational& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }
    friend Series operator*(const Series& a, const Series& b);
    Series operator-() const;

    friend bool operator==(const Series& a, const Series& b);

    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::map<Monomial, Rational> terms_;
};

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series pow(const Series& s, int k);

/// exp(s) for s without constant term.
Series exp(const Series& s);
/// Formal logarithm of s with constant term 1.
Series log(const Series& s);

/// Formal derivative. The v^cap coefficient of the result is not determined
/// by a truncated input and is always 0; callers pick caps with slack.
Series partial_derivative(const Series& s, std::string_view v);

/// v -> -v.
Series substitute_sign(const Series& s, std::string_view v);

/// Sets v = 0 and removes v from the context.
Series restrict_zero(const Series& s, std::string_view v);

/// Keeps only the terms with grading degree `degree`; same context.
Series grading_slice(const Series& s, int degree);

/// Reinterprets `s` in a context containing all of its variables (matched by
/// name). Terms beyond the target caps are dropped.
Series embed(const Series& s, ContextPtr target);

}  // namespace wk
