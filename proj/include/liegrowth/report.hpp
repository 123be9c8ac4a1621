#pragma once

// Command implementations behind the `liegrowth` executable. Each command
// returns a Report that serializes to JSON or CSV with identical content.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "liegrowth/cocharacter.hpp"
#include "liegrowth/spanning.hpp"

namespace liegrowth {

enum class RunMethod { brute, formula, both };
enum class OutputFormat { json, csv };

struct RunConfig {
    std::string command = "am";
    std::string family = "sl2-z2";
    int n = 2;
    int k = 1;
    int m_max = 6;
    RunMethod method = RunMethod::formula;
    OutputFormat format = OutputFormat::json;
    std::string output = "-";
    bool fix_first = false;
    std::uint64_t word_cap = 1'000'000;
    bool timings = false;
    bool assoc = false;
    std::string shape;

    /// Throws UsageError on an invalid combination.
    void validate() const;
    nlohmann::ordered_json to_json() const;
};

struct Report {
    nlohmann::ordered_json config;
    std::vector<std::string> columns;
    std::vector<nlohmann::ordered_json> rows;
    std::optional<FitReport> fit;
    std::vector<std::pair<std::string, double>> timings_ms;
    /// 0 = all checks pass, 1 = mismatch or unstable fit.
    int exit_code = 0;

    std::string to_json() const;
    std::string to_csv() const;
    std::string render(OutputFormat format) const;
};

std::string method_name(RunMethod m);
RunMethod parse_method(const std::string& text);
OutputFormat parse_format(const std::string& text);

/// Exact integers become JSON numbers when they fit in 64 bits, else strings.
nlohmann::ordered_json integer_json(const Integer& v);

Report cmd_am(const RunConfig& config, MemoStore* memo = nullptr);
Report cmd_fit(const RunConfig& config, MemoStore* memo = nullptr);
Report cmd_schur(const RunConfig& config);
Report cmd_sln(const RunConfig& config, MemoStore* memo = nullptr);
/// Brute force against the closed form over the built-in configuration
/// matrix; `config.m_max` caps the degree range when positive.
Report cmd_verify(const RunConfig& config, MemoStore* memo = nullptr);

/// Built-in verification matrix: (family, k, m_first, m_last).
struct VerifyCase {
    std::string family;
    int k;
    int m_first;
    int m_last;
};
std::vector<VerifyCase> verify_matrix();

}  // namespace liegrowth
