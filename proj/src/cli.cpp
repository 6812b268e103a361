#include "wk/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wk/bernoulli.hpp"
#include "wk/correlators.hpp"
#include "wk/errors.hpp"
#include "wk/hodge.hpp"
#include "wk/identities.hpp"

namespace wk::cli {

namespace {

using nlohmann::json;

const std::map<std::string, Format> format_names{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

std::string join(const std::vector<int>& v, const char* sep)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0)
            out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

void emit_reports(const ReportList& reports, Format format, std::ostream& out)
{
    switch (format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : reports)
            arr.push_back({{"check", r.check()},
                           {"param", r.param()},
                           {"expected", r.expected()},
                           {"computed", r.computed()},
                           {"passed", r.passed()}});
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "check,param,expected,computed,passed\n";
        for (const auto& r : reports)
            out << r.check() << ",\"" << r.param() << "\"," << r.expected() << ",\"" << r.computed() << "\","
                << (r.passed() ? "true" : "false") << '\n';
        break;
    case Format::text: {
        std::size_t passed = 0;
        for (const auto& r : reports) {
            passed += r.passed() ? 1 : 0;
            out << (r.passed() ? "PASS " : "FAIL ") << r.check() << ' ' << r.param() << "  expected=" << r.expected()
                << " computed=" << r.computed() << '\n';
        }
        out << passed << '/' << reports.size() << " checks passed\n";
        break;
    }
    }
}

struct TableRow {
    int genus;
    std::vector<int> indices;
    Rational value;
};

std::vector<TableRow> correlator_table(int max_genus)
{
    CorrelatorEngine engine(max_genus);
    std::vector<TableRow> rows;
    auto push = [&](int g, std::vector<int> idx) {
        TauWord t(g, std::move(idx));
        rows.push_back({g, t.indices(), engine.correlator(t)});
    };
    for (int g = 0; g <= max_genus; ++g) {
        if (g >= 1) {
            push(g, {3 * g - 2});
            for (int a = 0; 2 * a <= 3 * g - 1; ++a)
                push(g, {a, 3 * g - 1 - a});
        }
        for (int a = 0; 3 * a <= 3 * g; ++a)
            for (int b = a; a + 2 * b <= 3 * g; ++b)
                push(g, {a, b, 3 * g - a - b});
    }
    return rows;
}

void emit_table(const std::vector<TableRow>& rows, Format format, std::ostream& out)
{
    switch (format) {
    case Format::json: {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"genus", r.genus}, {"indices", r.indices}, {"value", r.value.to_string()}});
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "genus,indices,value\n";
        for (const auto& r : rows)
            out << r.genus << ',' << join(r.indices, " ") << ',' << r.value << '\n';
        break;
    case Format::text:
        for (const auto& r : rows)
            out << TauWord(r.genus, r.indices).to_string() << " = " << r.value << '\n';
        break;
    }
}

int run_tau(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    if (config.table) {
        emit_table(correlator_table(config.max_genus), config.format, out);
        return 0;
    }
    if (config.indices.empty() || config.indices.size() > 3) {
        err << "error: --indices takes one to three comma-separated indices\n";
        return 2;
    }
    TauWord word(config.genus, config.indices);
    CorrelatorEngine engine(config.genus);
    const Rational value = engine.correlator(word);
    switch (config.format) {
    case Format::json:
        out << json{{"genus", config.genus}, {"indices", word.indices()}, {"value", value.to_string()}}.dump()
            << '\n';
        break;
    case Format::csv:
        out << "genus,indices,value\n" << config.genus << ',' << join(word.indices(), " ") << ',' << value << '\n';
        break;
    case Format::text:
        out << value << '\n';
        break;
    }
    return 0;
}

int run_bernoulli(const CliConfig& config, std::ostream& out)
{
    switch (config.format) {
    case Format::json: {
        json arr = json::array();
        for (int k = 0; k <= config.bernoulli_max; ++k)
            arr.push_back({{"k", k}, {"value", bernoulli(k).to_string()}});
        out << arr.dump(2) << '\n';
        break;
    }
    case Format::csv:
        out << "k,value\n";
        for (int k = 0; k <= config.bernoulli_max; ++k)
            out << k << ',' << bernoulli(k) << '\n';
        break;
    case Format::text:
        for (int k = 0; k <= config.bernoulli_max; ++k)
            out << k << ' ' << bernoulli(k) << '\n';
        break;
    }
    return 0;
}

}  // namespace

std::variant<CliConfig, UsageError> parse(const std::vector<std::string>& args)
{
    CliConfig config;
    CLI::App app{"Exact Witten-Kontsevich correlators and identity verification", "wkcheck"};
    app.require_subcommand(1);

    auto format_option = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "Output format")
            ->transform(CLI::CheckedTransformer(format_names, CLI::ignore_case));
    };

    auto* tau = app.add_subcommand("tau", "Evaluate one correlator, or export the table");
    tau->add_option("--genus", config.genus, "Genus");
    tau->add_option("--indices", config.indices, "Comma-separated tau indices")->delimiter(',');
    tau->add_flag("--table", config.table, "Emit every correlator with at most three insertions");
    tau->add_option("--max-genus", config.max_genus, "Largest genus for --table");
    format_option(tau);

    auto* table = app.add_subcommand("table", "Emit every correlator with at most three insertions");
    table->add_option("--max-genus", config.max_genus, "Largest genus");
    format_option(table);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::vector<std::string> suite_names;
    for (Suite s : individual_suites())
        suite_names.emplace_back(suite_name(s));
    suite_names.emplace_back("all");
    verify->add_option("--suite", config.suite, "Suite to run")->check(CLI::IsMember(suite_names));
    verify->add_option("--max-genus", config.max_genus, "Largest genus");
    format_option(verify);

    auto* hodge = app.add_subcommand("hodge", "Lambda-class checks in one genus");
    hodge->add_option("--genus", config.genus, "Genus")->required();
    hodge->add_option("--check", config.check, "Check to run")
        ->check(CLI::IsMember({"eq2", "ch-vanish", "equiv", "top-square", "all"}));
    format_option(hodge);

    auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers b_0..b_K");
    bern->add_option("--max", config.bernoulli_max, "Largest index K")->required();
    format_option(bern);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return UsageError{0, app.help()};
    } catch (const CLI::CallForAllHelp&) {
        return UsageError{0, app.help("", CLI::AppFormatMode::All)};
    } catch (const CLI::ParseError& e) {
        return UsageError{2, e.what()};
    }

    if (tau->parsed())
        config.command = Command::tau;
    else if (table->parsed()) {
        config.command = Command::table;
        config.table = true;
    } else if (verify->parsed())
        config.command = Command::verify;
    else if (hodge->parsed())
        config.command = Command::hodge;
    else
        config.command = Command::bernoulli;

    if (config.genus < 0 || config.max_genus < 0 || config.min_genus < 0 || config.min_genus > config.max_genus)
        return UsageError{2, "genus bounds must satisfy 0 <= min <= max"};
    if (config.bernoulli_max < 0)
        return UsageError{2, "--max must be non-negative"};
    if (std::any_of(config.indices.begin(), config.indices.end(), [](int d) { return d < 0; }))
        return UsageError{2, "tau indices must be non-negative"};
    if (config.command == Command::tau && !config.table && (config.indices.empty() || config.indices.size() > 3))
        return UsageError{2, "--indices takes one to three comma-separated indices"};
    if (config.command == Command::hodge && config.genus < 1)
        return UsageError{2, "hodge checks need genus >= 1"};
    return config;
}

int run(const CliConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        switch (config.command) {
        case Command::tau:
        case Command::table:
            return run_tau(config, out, err);
        case Command::bernoulli:
            return run_bernoulli(config, out);
        case Command::verify: {
            auto suite = parse_suite(config.suite);
            if (!suite) {
                err << "error: unknown suite '" << config.suite << "'\n";
                return 2;
            }
            CorrelatorEngine engine(config.max_genus);
            auto reports = run_suite(engine, *suite, config.max_genus);
            emit_reports(reports, config.format, out);
            return all_passed(reports) ? 0 : 1;
        }
        case Command::hodge: {
            auto check = parse_hodge_check(config.check);
            if (!check || config.genus < 1) {
                err << "error: bad hodge check or genus\n";
                return 2;
            }
            auto reports = run_hodge_checks(config.genus, *check);
            emit_reports(reports, config.format, out);
            return all_passed(reports) ? 0 : 1;
        }
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        // A failed solve or palindrome check means the verification failed.
        err << "verification error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    auto parsed = parse(args);
    if (auto* usage = std::get_if<UsageError>(&parsed)) {
        (usage->exit_code == 0 ? out : err) << usage->message << '\n';
        return usage->exit_code;
    }
    return run(std::get<CliConfig>(parsed), out, err);
}

}  // namespace wk::cli
