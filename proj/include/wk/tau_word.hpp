#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace wk {

/// <tau_{d_1} ... tau_{d_n}>_g with the indices kept sorted (correlators are
/// symmetric). Indices are non-negative.
class TauWord {
public:
    TauWord(int genus, std::vector<int> indices);

    int genus() const { return genus_; }
    const std::vector<int>& indices() const { return indices_; }
    std::size_t arity() const { return indices_.size(); }
    int index_sum() const;

    std::string to_string() const;

    friend auto operator<=>(const TauWord&, const TauWord&) = default;
    friend bool operator==(const TauWord&, const TauWord&) = default;

private:
    int genus_;
    std::vector<int> indices_;
};

/// Dimension constraint: sum of indices = 3g - 3 + n, with the unstable
/// genus-0 cases (n < 3) excluded.
bool dimension_ok(const TauWord& t);

/// The unique genus at which a bracket with these indices can be nonzero,
/// if any. Negative indices give no genus.
std::optional<int> admissible_genus(const std::vector<int>& indices);

/// Genus-free bracket, as written without a subscript; indices sorted and
/// possibly negative (a negative index makes the bracket vanish).
struct TauBracket {
    std::vector<int> indices;

    explicit TauBracket(std::vector<int> idx);
    std::string to_string() const;
    friend auto operator<=>(const TauBracket&, const TauBracket&) = default;
    friend bool operator==(const TauBracket&, const TauBracket&) = default;
};

/// Signed sum of genus-free brackets; no bracket appears twice.
class SignedTauCombination {
public:
    struct Term {
        int sign;
        TauBracket bracket;
    };

    /// Adds `sign * bracket`; throws std::invalid_argument if the bracket is
    /// already present.
    void add(int sign, TauBracket bracket);
    const std::vector<Term>& terms() const { return terms_; }
    std::string to_string() const;

private:
    std::vector<Term> terms_;
};

/// kappa_a kappa_b -> <tau_{a+1} tau_{b+1}> - <tau_{a+b+1}>.
SignedTauCombination kappa_pair_to_tau(int a, int b);

}  // namespace wk
