#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wk/rational.hpp"
#include "wk/report.hpp"

namespace wk {

/// Polynomial in lambda_1 .. lambda_g; exponent vector index i-1 holds the
/// power of lambda_i. Graded by deg lambda_i = i.
class LambdaPoly {
public:
    using Exponents = std::vector<int>;

    explicit LambdaPoly(int genus);

    /// lambda_i in genus g: lambda_0 = 1, lambda_i = 0 for i > g.
    static LambdaPoly lambda(int genus, int i);
    static LambdaPoly constant(int genus, const Rational& c);

    int genus() const { return genus_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static int weight(const Exponents& e);
    bool is_homogeneous() const;
    /// Degree of a nonzero homogeneous polynomial.
    std::optional<int> degree() const;

    void accumulate(const Exponents& e, const Rational& c);

    LambdaPoly& operator+=(const LambdaPoly& rhs);
    LambdaPoly& operator-=(const LambdaPoly& rhs);
    LambdaPoly& operator*=(const Rational& c);
    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(LambdaPoly a, const Rational& c) { return a *= c; }
    friend LambdaPoly operator*(const Rational& c, LambdaPoly a) { return a *= c; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

    std::string to_string() const;

private:
    int genus_;
    std::map<Exponents, Rational> terms_;
};

/// Ideal given by homogeneous nonzero generators.
class GradedIdeal {
public:
    GradedIdeal(int genus, std::vector<LambdaPoly> generators);

    int genus() const { return genus_; }
    const std::vector<LambdaPoly>& generators() const { return generators_; }

private:
    int genus_;
    std::vector<LambdaPoly> generators_;
};

/// Nonzero homogeneous components of (sum lambda_i t^i)(sum (-1)^i lambda_i t^i) - 1.
GradedIdeal mumford_generators(int g);

/// ch_j = (-1)^{j+1}/(j-1)! [t^j] log(sum_{i=0}^{g} lambda_i t^i).
LambdaPoly chern_character(int g, int j);

/// Largest degree ideal_member accepts in genus g: max(3g, 2g+2).
int membership_degree_bound(int g);

/// Remainder of p modulo the degree-d part of the ideal (d = deg p), in a
/// fixed monomial basis; zero iff p is a member. Throws std::invalid_argument
/// for inhomogeneous input or a degree beyond the working bound.
LambdaPoly ideal_remainder(const LambdaPoly& p, const GradedIdeal& ideal);
bool ideal_member(const LambdaPoly& p, const GradedIdeal& ideal);

/// (2g-1)! ch_{2g-1} - (-1)^{g-1} lambda_{g-1} lambda_g lies in the ideal.
VerificationReport verify_eq2(int g);
/// ch_j lies in the ideal for j = 2g, 2g+1, 2g+2.
ReportList verify_ch_vanishing(int g);
/// Per degree d <= 2g, the ideal generated by the even ch_{2k} has the same
/// degree-d part as the Mumford ideal.
VerificationReport verify_even_ch_equivalence(int g);
/// lambda_g^2 lies in the ideal.
VerificationReport verify_lambda_top_square(int g);

enum class HodgeCheck { eq2, ch_vanish, equiv, top_square, all };
std::optional<HodgeCheck> parse_hodge_check(std::string_view name);
ReportList run_hodge_checks(int g, HodgeCheck check);

}  // namespace wk
