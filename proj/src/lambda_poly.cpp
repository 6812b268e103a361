#include <sstream>
#include <stdexcept>

#include "wk/hodge.hpp"

namespace wk {

LambdaPoly::LambdaPoly(int genus) : genus_(genus)
{
    if (genus < 1)
        throw std::invalid_argument("LambdaPoly: genus must be at least 1");
}

LambdaPoly LambdaPoly::lambda(int genus, int i)
{
    LambdaPoly p(genus);
    if (i == 0)
        p.accumulate(Exponents(static_cast<std::size_t>(genus), 0), 1);
    else if (i > 0 && i <= genus) {
        Exponents e(static_cast<std::size_t>(genus), 0);
        e[static_cast<std::size_t>(i - 1)] = 1;
        p.accumulate(e, 1);
    } else if (i < 0)
        throw std::invalid_argument("LambdaPoly: negative lambda index");
    return p;
}

LambdaPoly LambdaPoly::constant(int genus, const Rational& c)
{
    LambdaPoly p(genus);
    p.accumulate(Exponents(static_cast<std::size_t>(genus), 0), c);
    return p;
}

int LambdaPoly::weight(const Exponents& e)
{
    int w = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
        w += static_cast<int>(i + 1) * e[i];
    return w;
}

bool LambdaPoly::is_homogeneous() const
{
    if (terms_.empty())
        return true;
    const int d = weight(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (weight(e) != d)
            return false;
    return true;
}

std::optional<int> LambdaPoly::degree() const
{
    if (terms_.empty() || !is_homogeneous())
        return std::nullopt;
    return weight(terms_.begin()->first);
}

void LambdaPoly::accumulate(const Exponents& e, const Rational& c)
{
    if (e.size() != static_cast<std::size_t>(genus_))
        throw std::invalid_argument("LambdaPoly: exponent vector length differs from the genus");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& rhs)
{
    if (rhs.genus_ != genus_)
        throw std::invalid_argument("LambdaPoly: genus mismatch");
    for (const auto& [e, c] : rhs.terms_)
        accumulate(e, c);
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& rhs)
{
    if (rhs.genus_ != genus_)
        throw std::invalid_argument("LambdaPoly: genus mismatch");
    for (const auto& [e, c] : rhs.terms_)
        accumulate(e, -c);
    return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& c)
{
    if (c.is_zero())
        terms_.clear();
    for (auto& [e, v] : terms_)
        v *= c;
    return *this;
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b)
{
    if (a.genus_ != b.genus_)
        throw std::invalid_argument("LambdaPoly: genus mismatch");
    LambdaPoly out(a.genus_);
    LambdaPoly::Exponents e(static_cast<std::size_t>(a.genus_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.accumulate(e, ca * cb);
        }
    return out;
}

std::string LambdaPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (!mono.empty())
                mono += '*';
            mono += "l" + std::to_string(i + 1);
            if (e[i] > 1)
                mono += '^' + std::to_string(e[i]);
        }
        if (mono.empty())
            os << c;
        else if (c == Rational(1))
            os << mono;
        else
            os << c << '*' << mono;
    }
    return os.str();
}

GradedIdeal::GradedIdeal(int genus, std::vector<LambdaPoly> generators)
    : genus_(genus), generators_(std::move(generators))
{
    for (const auto& r : generators_) {
        if (r.genus() != genus_)
            throw std::invalid_argument("GradedIdeal: generator genus mismatch");
        if (r.is_zero() || !r.is_homogeneous())
            throw std::invalid_argument("GradedIdeal: generators must be nonzero and homogeneous");
    }
}

}  // namespace wk
