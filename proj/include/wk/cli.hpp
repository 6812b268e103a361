#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace wk::cli {

enum class Command { tau, verify, hodge, bernoulli, table };
enum class Format { text, json, csv };

struct CliConfig {
    Command command = Command::tau;
    int genus = 0;
    int min_genus = 0;
    int max_genus = 6;
    std::vector<int> indices;
    bool table = false;
    std::string suite = "all";
    std::string check = "all";
    int bernoulli_max = 0;
    Format format = Format::text;
};

struct UsageError {
    int exit_code;  // 0 for --help, 2 otherwise
    std::string message;
};

/// Parses arguments (without the program name).
std::variant<CliConfig, UsageError> parse(const std::vector<std::string>& args);

/// Executes a parsed configuration. Returns 0 on success, 1 if any
/// verification failed, 2 on malformed input.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

/// parse + run.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wk::cli
