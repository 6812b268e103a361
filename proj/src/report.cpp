#include "wk/report.hpp"

#include <algorithm>
#include <cctype>

namespace wk {

VerificationReport::VerificationReport(std::string check, std::string param, std::string expected,
                                       std::string computed)
    : check_(std::move(check)),
      param_(std::move(param)),
      expected_(std::move(expected)),
      computed_(std::move(computed)),
      passed_(expected_ == computed_)
{
}

VerificationReport VerificationReport::equality(std::string check, std::string param, const Rational& expected,
                                                const Rational& computed)
{
    return {std::move(check), std::move(param), expected.to_string(), computed.to_string()};
}

VerificationReport VerificationReport::vanishing(std::string check, std::string param, const Series& residual)
{
    std::string witness;
    if (!residual.is_zero()) {
        const auto& [m, c] = *residual.terms().begin();
        witness = "nonzero(" + std::to_string(residual.size()) + " terms; first " +
                  Series::monomial(residual.context(), m, c).to_string() + ")";
    }
    return vanishing(std::move(check), std::move(param), residual.is_zero(), witness);
}

VerificationReport VerificationReport::vanishing(std::string check, std::string param, bool is_zero,
                                                 const std::string& witness)
{
    std::string computed = is_zero ? std::string(zero_series) : witness;
    if (!is_zero && (computed.empty() || computed == zero_series))
        computed = "nonzero";
    return {std::move(check), std::move(param), zero_series, std::move(computed)};
}

bool all_passed(const ReportList& reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
}

namespace {

// "g=2,k=10" < "g=10,k=1": digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b)
{
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
            std::size_t ei = i, ej = j;
            while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei])))
                ++ei;
            while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej])))
                ++ej;
            auto na = std::stoull(a.substr(i, ei - i));
            auto nb = std::stoull(b.substr(j, ej - j));
            if (na != nb)
                return na < nb;
            i = ei;
            j = ej;
        } else {
            if (a[i] != b[j])
                return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    return a.size() - i < b.size() - j;
}

}  // namespace

void sort_reports(ReportList& reports)
{
    std::stable_sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        if (a.check() != b.check())
            return a.check() < b.check();
        return natural_less(a.param(), b.param());
    });
}

}  // namespace wk
