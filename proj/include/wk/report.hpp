#pragma once

#include <string>
#include <vector>

#include "wk/rational.hpp"
#include "wk/series.hpp"

namespace wk {

/// Outcome of one named check. `passed` is true exactly when the expected and
/// computed strings agree, and both are exact renderings (canonical Rational
/// strings, or "zero-series" for residual checks), so string equality is
/// exact equality.
class VerificationReport {
public:
    static constexpr const char* zero_series = "zero-series";

    static VerificationReport equality(std::string check, std::string param, const Rational& expected,
                                       const Rational& computed);

    /// Passes iff `residual` is the zero series. A nonzero residual is
    /// summarized by its term count and first term.
    static VerificationReport vanishing(std::string check, std::string param, const Series& residual);

    /// Same, for residuals that are not Series (e.g. ideal remainders).
    static VerificationReport vanishing(std::string check, std::string param, bool is_zero,
                                        const std::string& witness);

    const std::string& check() const { return check_; }
    const std::string& param() const { return param_; }
    const std::string& expected() const { return expected_; }
    const std::string& computed() const { return computed_; }
    bool passed() const { return passed_; }

private:
    VerificationReport(std::string check, std::string param, std::string expected, std::string computed);

    std::string check_;
    std::string param_;
    std::string expected_;
    std::string computed_;
    bool passed_;
};

using ReportList = std::vector<VerificationReport>;

bool all_passed(const ReportList& reports);

/// Canonical order: by check name, then parameter (digit runs compared numerically).
void sort_reports(ReportList& reports);

}  // namespace wk
