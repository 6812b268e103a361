#include "wk/tau_word.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wk {

namespace {

std::string join_taus(const std::vector<int>& indices)
{
    std::string out = "<";
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (i != 0)
            out += ' ';
        out += "tau_" + std::to_string(indices[i]);
    }
    return out + ">";
}

}  // namespace

TauWord::TauWord(int genus, std::vector<int> indices) : genus_(genus), indices_(std::move(indices))
{
    if (genus_ < 0)
        throw std::invalid_argument("TauWord: negative genus");
    if (std::any_of(indices_.begin(), indices_.end(), [](int d) { return d < 0; }))
        throw std::invalid_argument("TauWord: negative tau index");
    std::sort(indices_.begin(), indices_.end());
}

int TauWord::index_sum() const
{
    return std::accumulate(indices_.begin(), indices_.end(), 0);
}

std::string TauWord::to_string() const
{
    return join_taus(indices_) + "_" + std::to_string(genus_);
}

bool dimension_ok(const TauWord& t)
{
    const int n = static_cast<int>(t.arity());
    if (t.genus() == 0 && n < 3)
        return false;
    return t.index_sum() == 3 * t.genus() - 3 + n;
}

std::optional<int> admissible_genus(const std::vector<int>& indices)
{
    if (indices.empty() || std::any_of(indices.begin(), indices.end(), [](int d) { return d < 0; }))
        return std::nullopt;
    const int n = static_cast<int>(indices.size());
    const int shifted = std::accumulate(indices.begin(), indices.end(), 0) + 3 - n;
    if (shifted < 0 || shifted % 3 != 0)
        return std::nullopt;
    const int g = shifted / 3;
    if (!dimension_ok(TauWord(g, indices)))
        return std::nullopt;
    return g;
}

TauBracket::TauBracket(std::vector<int> idx) : indices(std::move(idx))
{
    std::sort(indices.begin(), indices.end());
}

std::string TauBracket::to_string() const
{
    return join_taus(indices);
}

void SignedTauCombination::add(int sign, TauBracket bracket)
{
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("SignedTauCombination: sign must be +1 or -1");
    for (const auto& t : terms_)
        if (t.bracket == bracket)
            throw std::invalid_argument("SignedTauCombination: duplicate bracket " + bracket.to_string());
    terms_.push_back({sign, std::move(bracket)});
}

std::string SignedTauCombination::to_string() const
{
    std::string out;
    for (const auto& t : terms_) {
        if (!out.empty())
            out += ' ';
        out += t.sign > 0 ? "+" : "-";
        out += t.bracket.to_string();
    }
    return out;
}

SignedTauCombination kappa_pair_to_tau(int a, int b)
{
    if (a < 0 || b < 0)
        throw std::invalid_argument("kappa_pair_to_tau: negative kappa index");
    SignedTauCombination out;
    out.add(+1, TauBracket({a + 1, b + 1}));
    out.add(-1, TauBracket({a + b + 1}));
    return out;
}

}  // namespace wk
