#include "liegrowth/report.hpp"

#include <chrono>
#include <limits>
#include <sstream>

namespace liegrowth {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string csv_cell(const nlohmann::ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

SpanOptions span_options(const RunConfig& config, MemoStore* memo) {
    SpanOptions opts;
    opts.fix_first = config.fix_first;
    opts.word_cap = config.word_cap;
    opts.memo = memo;
    return opts;
}

GradingSpec spec_of(const RunConfig& config) {
    try {
        return GradingSpec::from_name(config.family, config.n);
    } catch (const UnsupportedFamily& e) {
        throw UsageError(e.what());
    }
}

/// Refuses the run up front if any multidegree exceeds the word cap.
void guard_word_count(const GradingSpec& spec, int k, int m_max, const SpanOptions& opts) {
    const Integer cap(std::to_string(opts.word_cap));
    for (int m = 2; m <= m_max; ++m) {
        for (const auto& md : multidegrees(spec, k, m)) {
            const Integer words = word_count(md, opts.fix_first);
            if (words > cap) {
                throw ResourceLimit("refusing: multidegree " + md.key() + " at m=" + std::to_string(m) + " has " +
                                    words.get_str() + " words, above the word cap of " +
                                    std::to_string(opts.word_cap) + " (raise it with --word-cap)");
            }
        }
    }
}

}  // namespace

std::string method_name(RunMethod m) {
    switch (m) {
    case RunMethod::brute: return "brute";
    case RunMethod::formula: return "formula";
    case RunMethod::both: return "both";
    }
    return "?";
}

RunMethod parse_method(const std::string& text) {
    if (text == "brute") return RunMethod::brute;
    if (text == "formula") return RunMethod::formula;
    if (text == "both") return RunMethod::both;
    throw UsageError("unknown method '" + text + "' (expected brute, formula or both)");
}

OutputFormat parse_format(const std::string& text) {
    if (text == "json") return OutputFormat::json;
    if (text == "csv") return OutputFormat::csv;
    throw UsageError("unknown format '" + text + "' (expected json or csv)");
}

nlohmann::ordered_json integer_json(const Integer& v) {
    if (v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64) {
        if (v.fits_ulong_p()) return static_cast<std::uint64_t>(v.get_ui());
    }
    return v.get_str();
}

void RunConfig::validate() const {
    if (command == "schur") {
        if (k < 1) throw UsageError("--k must be >= 1");
        return;
    }
    if (k < 1) throw UsageError("--k must be >= 1");
    if (command != "verify" && m_max < 1) throw UsageError("--m-max must be >= 1");
    if (family == "sln" || command == "sln") {
        if (n < 2) throw UsageError("--n must be >= 2");
    }
    if (family != "sl2-z2" && family != "sl2-z2xz2" && family != "sl2-z" && family != "sln") {
        throw UsageError("unknown family '" + family + "' (expected sl2-z2, sl2-z2xz2, sl2-z or sln)");
    }
    if (family == "sln" && (method == RunMethod::formula || method == RunMethod::both) &&
        (command == "am" || command == "fit")) {
        throw UsageError("no closed-form a_m exists for sl_n; use --method brute");
    }
    if (word_cap == 0) throw UsageError("--word-cap must be positive");
}

nlohmann::ordered_json RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    if (command == "schur") {
        j["shape"] = shape;
        j["k"] = k;
    } else {
        j["family"] = family;
        if (family == "sln" || command == "sln") j["n"] = n;
        j["k"] = k;
        j["m_max"] = m_max;
        if (command == "am" || command == "fit") j["method"] = method_name(method);
        j["fix_first"] = fix_first;
        j["word_cap"] = word_cap;
        if (command == "sln") j["assoc"] = assoc;
    }
    j["format"] = format == OutputFormat::json ? "json" : "csv";
    return j;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["config"] = config;
    j["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows) j["rows"].push_back(r);
    if (fit) {
        nlohmann::ordered_json f;
        f["degree"] = fit->degree;
        f["window"] = {fit->window_first, fit->window_last};
        f["stride"] = fit->stride;
        f["stable"] = fit->stable;
        j["fit"] = f;
    }
    nlohmann::ordered_json t = nlohmann::ordered_json::object();
    for (const auto& [label, ms] : timings_ms) t[label] = ms;
    j["timings"] = t;
    return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < columns.size(); ++i) {
            os << (i ? "," : "") << (r.contains(columns[i]) ? csv_cell(r[columns[i]]) : "");
        }
        os << '\n';
    }
    return os.str();
}

std::string Report::render(OutputFormat format) const {
    return format == OutputFormat::json ? to_json() : to_csv();
}

Report cmd_am(const RunConfig& config, MemoStore* memo) {
    config.validate();
    Report report;
    report.config = config.to_json();
    const GradingSpec spec = spec_of(config);
    const SpanOptions opts = span_options(config, memo);
    const bool brute = config.method != RunMethod::formula;
    const bool formula = config.method != RunMethod::brute;
    if (formula && !spec.is_sl2_family()) throw UsageError("no closed-form a_m exists for sl_n");
    if (brute) guard_word_count(spec, config.k, config.m_max, opts);

    report.columns = {"m"};
    if (brute) report.columns.push_back("brute");
    if (formula) report.columns.push_back("formula");
    if (brute && formula) report.columns.push_back("match");

    for (int m = 1; m <= config.m_max; ++m) {
        const auto start = Clock::now();
        nlohmann::ordered_json row;
        row["m"] = m;
        Integer b, f;
        if (brute) {
            b = Integer(std::to_string(a_m_bruteforce(spec, config.k, m, opts)));
            row["brute"] = integer_json(b);
        }
        if (formula) {
            f = m == 1 ? degree_one_count(spec.family, config.k) : a_m_formula(spec.family, config.k, m);
            row["formula"] = integer_json(f);
        }
        if (brute && formula) {
            row["match"] = b == f;
            if (b != f) report.exit_code = 1;
        }
        report.rows.push_back(std::move(row));
        if (config.timings) report.timings_ms.emplace_back("m=" + std::to_string(m), elapsed_ms(start));
    }
    return report;
}

Report cmd_fit(const RunConfig& config, MemoStore* memo) {
    config.validate();
    if (config.method == RunMethod::both) throw UsageError("fit takes --method brute or --method formula");
    Report report;
    report.config = config.to_json();
    const GradingSpec spec = spec_of(config);
    const SpanOptions opts = span_options(config, memo);
    if (config.method == RunMethod::brute) guard_word_count(spec, config.k, config.m_max, opts);

    report.columns = {"m", "a_m", "g"};
    std::vector<std::pair<int, Integer>> samples;
    Integer g = 0;
    for (int m = 1; m <= config.m_max; ++m) {
        const auto start = Clock::now();
        Integer a;
        if (config.method == RunMethod::brute) {
            a = Integer(std::to_string(a_m_bruteforce(spec, config.k, m, opts)));
        } else {
            a = m == 1 ? degree_one_count(spec.family, config.k) : a_m_formula(spec.family, config.k, m);
        }
        g += a;
        samples.emplace_back(m, g);
        nlohmann::ordered_json row;
        row["m"] = m;
        row["a_m"] = integer_json(a);
        row["g"] = integer_json(g);
        report.rows.push_back(std::move(row));
        if (config.timings) report.timings_ms.emplace_back("m=" + std::to_string(m), elapsed_ms(start));
    }
    try {
        report.fit = fit_degree(samples);
    } catch (const InsufficientData& e) {
        throw UsageError(std::string(e.what()) + "; increase --m-max");
    }
    if (!report.fit->stable) report.exit_code = 1;
    return report;
}

Report cmd_schur(const RunConfig& config) {
    config.validate();
    const Partition shape = Partition::parse(config.shape);
    Report report;
    report.config = config.to_json();
    report.columns = {"shape", "k", "count", "closed_form", "equal"};

    const auto start = Clock::now();
    nlohmann::ordered_json row;
    row["shape"] = shape.to_string();
    row["k"] = config.k;
    const Integer count = ssyt_count(shape, config.k);
    row["count"] = integer_json(count);
    if (shape.rows() <= 2) {
        const Integer closed = shape.rows() <= 1 ? schur_dim_one_row(shape.part(0), config.k)
                                                 : schur_dim_two_row(shape.part(0), shape.part(1), config.k);
        row["closed_form"] = integer_json(closed);
        row["equal"] = closed == count;
        if (closed != count) report.exit_code = 1;
    }
    report.rows.push_back(std::move(row));
    if (config.timings) report.timings_ms.emplace_back("schur", elapsed_ms(start));
    return report;
}

Report cmd_sln(const RunConfig& config, MemoStore* memo) {
    RunConfig c = config;
    c.family = "sln";
    c.validate();
    Report report;
    report.config = c.to_json();
    const GradingSpec spec = GradingSpec::sln_vasilovsky(c.n);
    const SpanOptions opts = span_options(c, memo);
    guard_word_count(spec, c.k, c.m_max, opts);
    if (c.assoc) {
        const Integer total(spec.n * c.k);
        Integer words;
        mpz_pow_ui(words.get_mpz_t(), total.get_mpz_t(), static_cast<unsigned long>(c.m_max));
        if (words > Integer(std::to_string(c.word_cap))) {
            throw ResourceLimit("refusing: " + words.get_str() + " associative words at m=" + std::to_string(c.m_max) +
                                ", above the word cap of " + std::to_string(c.word_cap));
        }
    }

    report.columns = {"m", "multidegree", "lie"};
    if (c.assoc) {
        report.columns.push_back("assoc_m");
        report.columns.push_back("assoc_full");
    }
    for (int m = 1; m <= c.m_max; ++m) {
        const auto start = Clock::now();
        std::map<MultiDegree, std::size_t> filtered, full;
        if (c.assoc) {
            filtered = assoc_dims(spec, c.k, m, true);
            full = assoc_dims(spec, c.k, m, false);
        }
        for (const auto& md : multidegrees(spec, c.k, m)) {
            nlohmann::ordered_json row;
            row["m"] = m;
            row["multidegree"] = md.key();
            row["lie"] = component_dim(spec, c.k, md, opts);
            if (c.assoc) {
                auto f = filtered.find(md);
                row["assoc_m"] = f == filtered.end() ? 0 : f->second;
                auto a = full.find(md);
                row["assoc_full"] = a == full.end() ? 0 : a->second;
            }
            report.rows.push_back(std::move(row));
        }
        if (c.timings) report.timings_ms.emplace_back("m=" + std::to_string(m), elapsed_ms(start));
    }
    return report;
}

std::vector<VerifyCase> verify_matrix() {
    return {
        {"sl2-z2", 1, 2, 8},    {"sl2-z2", 2, 2, 8},
        {"sl2-z2xz2", 1, 2, 7}, {"sl2-z2xz2", 2, 2, 7},
        {"sl2-z", 1, 2, 7},     {"sl2-z", 2, 2, 7},
    };
}

Report cmd_verify(const RunConfig& config, MemoStore* memo) {
    if (config.m_max < 0) throw UsageError("--m-max must be >= 0");
    Report report;
    report.config = config.to_json();
    report.columns = {"family", "k", "m", "brute", "formula", "match"};
    const SpanOptions opts = span_options(config, memo);
    for (const auto& vc : verify_matrix()) {
        const GradingSpec spec = GradingSpec::from_name(vc.family);
        const int last = config.m_max > 0 ? std::min(vc.m_last, config.m_max) : vc.m_last;
        for (int m = vc.m_first; m <= last; ++m) {
            const auto start = Clock::now();
            const Integer b(std::to_string(a_m_bruteforce(spec, vc.k, m, opts)));
            const Integer f = a_m_formula(spec.family, vc.k, m);
            nlohmann::ordered_json row;
            row["family"] = vc.family;
            row["k"] = vc.k;
            row["m"] = m;
            row["brute"] = integer_json(b);
            row["formula"] = integer_json(f);
            row["match"] = b == f;
            if (b != f) report.exit_code = 1;
            report.rows.push_back(std::move(row));
            if (config.timings) {
                report.timings_ms.emplace_back(vc.family + "/k=" + std::to_string(vc.k) + "/m=" + std::to_string(m),
                                               elapsed_ms(start));
            }
        }
    }
    return report;
}

}  // namespace liegrowth
