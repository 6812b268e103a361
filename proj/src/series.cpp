#include "wk/series.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wk/errors.hpp"

namespace wk {

// ---------------------------------------------------------------- Context

ContextPtr Context::make(std::vector<std::string> names, std::string_view grading, std::vector<int> caps,
                         std::optional<int> total_cap)
{
    if (names.size() != caps.size())
        throw std::invalid_argument("Context: one cap per variable required");
    if (std::set<std::string>(names.begin(), names.end()).size() != names.size())
        throw std::invalid_argument("Context: variable names must be distinct");
    if (std::any_of(caps.begin(), caps.end(), [](int c) { return c < 0; }))
        throw std::invalid_argument("Context: caps must be non-negative");
    auto it = std::find(names.begin(), names.end(), grading);
    if (it == names.end())
        throw UnknownVariable("Context: grading variable '" + std::string(grading) + "' not among the variables");

    auto ctx = std::shared_ptr<Context>(new Context());
    ctx->grading_ = static_cast<std::size_t>(it - names.begin());
    ctx->names_ = std::move(names);
    ctx->caps_ = std::move(caps);
    ctx->total_cap_ = total_cap;
    return ctx;
}

ContextPtr Context::for_genus(const std::vector<std::string>& names, int max_genus)
{
    if (max_genus < 0)
        throw std::invalid_argument("Context: negative genus");
    std::vector<std::string> all = names;
    all.emplace_back("h");
    std::vector<int> caps(names.size(), 3 * max_genus + 2);
    caps.push_back(max_genus);
    return make(std::move(all), "h", std::move(caps), 3 * max_genus + 4);
}

std::optional<std::size_t> Context::find(std::string_view name) const
{
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Context::index_of(std::string_view name) const
{
    if (auto i = find(name))
        return *i;
    throw UnknownVariable("unknown variable '" + std::string(name) + "'");
}

bool Context::admits(const Monomial& m) const
{
    if (m.size() != names_.size())
        return false;
    int total = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0 || m[i] > caps_[i])
            return false;
        if (i != grading_)
            total += m[i];
    }
    return !total_cap_ || total <= *total_cap_;
}

ContextPtr Context::without(std::string_view name) const
{
    std::size_t idx = index_of(name);
    if (idx == grading_)
        throw std::invalid_argument("Context: cannot remove the grading variable");
    auto names = names_;
    auto caps = caps_;
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(idx));
    caps.erase(caps.begin() + static_cast<std::ptrdiff_t>(idx));
    return make(std::move(names), names_[grading_], std::move(caps), total_cap_);
}

bool operator==(const Context& a, const Context& b)
{
    return a.names_ == b.names_ && a.grading_ == b.grading_ && a.caps_ == b.caps_ && a.total_cap_ == b.total_cap_;
}

// ---------------------------------------------------------------- Series

namespace {

void require_same_context(const Series& a, const Series& b)
{
    if (a.context() != b.context() && !(*a.context() == *b.context()))
        throw ContextMismatch("series over different variable contexts");
}

std::string monomial_string(const Context& ctx, const Monomial& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += ctx.names()[i];
        if (m[i] > 1)
            out += '^' + std::to_string(m[i]);
    }
    return out;
}

}  // namespace

Series::Series(ContextPtr ctx) : ctx_(std::move(ctx))
{
    if (!ctx_)
        throw std::invalid_argument("Series: null context");
}

Series Series::constant(ContextPtr ctx, const Rational& c)
{
    Series s(std::move(ctx));
    s.accumulate(Monomial(s.ctx_->size(), 0), c);
    return s;
}

Series Series::variable(ContextPtr ctx, std::string_view name)
{
    Monomial m(ctx->size(), 0);
    m[ctx->index_of(name)] = 1;
    return monomial(std::move(ctx), m);
}

Series Series::monomial(ContextPtr ctx, const Monomial& m, const Rational& c)
{
    if (m.size() != ctx->size())
        throw std::invalid_argument("Series: monomial length does not match the context");
    Series s(std::move(ctx));
    s.accumulate(m, c);
    return s;
}

Rational Series::coefficient(const Monomial& m) const
{
    if (!ctx_->admits(m))
        throw TruncationExceeded("coefficient requested beyond the computed order");
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Series::constant_term() const
{
    return coefficient(Monomial(ctx_->size(), 0));
}

void Series::accumulate(const Monomial& m, const Rational& c)
{
    if (c.is_zero() || !ctx_->admits(m))
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Series& Series::operator+=(const Series& rhs)
{
    require_same_context(*this, rhs);
    for (const auto& [m, c] : rhs.terms_)
        accumulate(m, c);
    return *this;
}

Series& Series::operator-=(const Series& rhs)
{
    require_same_context(*this, rhs);
    for (const auto& [m, c] : rhs.terms_)
        accumulate(m, -c);
    return *this;
}

Series& Series::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_)
        v *= c;
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    require_same_context(a, b);
    Series out(a.ctx_);
    Monomial m(a.ctx_->size());
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i)
                m[i] = ma[i] + mb[i];
            out.accumulate(m, ca * cb);
        }
    }
    return out;
}

Series Series::operator-() const
{
    Series out = *this;
    for (auto& [m, v] : out.terms_)
        v = -v;
    return out;
}

bool operator==(const Series& a, const Series& b)
{
    return *a.ctx_ == *b.ctx_ && a.terms_ == b.terms_;
}

std::string Series::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        auto mono = monomial_string(*ctx_, m);
        if (mono.empty())
            os << c;
        else if (c == Rational(1))
            os << mono;
        else
            os << c << '*' << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------- free functions

Series add(const Series& a, const Series& b)
{
    return a + b;
}

Series mul(const Series& a, const Series& b)
{
    return a * b;
}

Series pow(const Series& s, int k)
{
    if (k < 0)
        throw std::invalid_argument("pow: negative exponent");
    Series result = Series::constant(s.context(), 1);
    Series base = s;
    while (k > 0) {
        if (k & 1)
            result = result * base;
        k >>= 1;
        if (k > 0)
            base = base * base;
    }
    return result;
}

Series exp(const Series& s)
{
    if (!s.constant_term().is_zero())
        throw std::domain_error("exp: argument has a nonzero constant term");
    // Nilpotent in the truncated ring, so the sum terminates.
    Series result = Series::constant(s.context(), 1);
    Series term = result;
    for (int k = 1;; ++k) {
        term = term * s;
        term *= Rational(1, k);
        if (term.is_zero())
            break;
        result += term;
    }
    return result;
}

Series log(const Series& s)
{
    if (s.constant_term() != Rational(1))
        throw std::domain_error("log: constant term must be 1");
    Series u = s - Series::constant(s.context(), 1);
    Series result(s.context());
    Series power = u;
    for (int k = 1; !power.is_zero(); ++k) {
        result += power * Rational(k % 2 == 1 ? 1 : -1, k);
        power = power * u;
    }
    return result;
}

Series partial_derivative(const Series& s, std::string_view v)
{
    std::size_t idx = s.context()->index_of(v);
    Series out(s.context());
    for (const auto& [m, c] : s.terms()) {
        if (m[idx] == 0)
            continue;
        Monomial d = m;
        --d[idx];
        out.accumulate(d, c * Rational(m[idx]));
    }
    return out;
}

Series substitute_sign(const Series& s, std::string_view v)
{
    std::size_t idx = s.context()->index_of(v);
    Series out(s.context());
    for (const auto& [m, c] : s.terms())
        out.accumulate(m, m[idx] % 2 == 0 ? c : -c);
    return out;
}

Series restrict_zero(const Series& s, std::string_view v)
{
    std::size_t idx = s.context()->index_of(v);
    Series out(s.context()->without(v));
    for (const auto& [m, c] : s.terms()) {
        if (m[idx] != 0)
            continue;
        Monomial r = m;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(idx));
        out.accumulate(r, c);
    }
    return out;
}

Series grading_slice(const Series& s, int degree)
{
    std::size_t idx = s.context()->grading_index();
    Series out(s.context());
    for (const auto& [m, c] : s.terms())
        if (m[idx] == degree)
            out.accumulate(m, c);
    return out;
}

Series embed(const Series& s, ContextPtr target)
{
    const auto& src = *s.context();
    if (src.grading_name() != target->grading_name())
        throw ContextMismatch("embed: grading variables differ");
    std::vector<std::size_t> slot(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        auto j = target->find(src.names()[i]);
        if (!j)
            throw ContextMismatch("embed: target lacks variable '" + src.names()[i] + "'");
        slot[i] = *j;
    }
    Series out(target);
    Monomial t(target->size());
    for (const auto& [m, c] : s.terms()) {
        std::fill(t.begin(), t.end(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            t[slot[i]] = m[i];
        out.accumulate(t, c);
    }
    return out;
}

}  // namespace wk
