// liegrowth: growth of graded polynomial identities of sl_2 and sl_n.
//
//   liegrowth am     --family sl2-z2 --k 1 --m-max 6 --method both
//   liegrowth fit    --family sl2-z2 --k 2 --m-max 60
//   liegrowth schur  --shape 2,1 --k 3
//   liegrowth sln    --n 3 --k 2 --m-max 4 [--assoc]
//   liegrowth verify
//
// Exit status: 0 all checks pass, 1 mismatch or unstable fit, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "liegrowth/report.hpp"

namespace {

using namespace liegrowth;

constexpr int kExitUsage = 2;

struct Options {
    RunConfig config;
    std::string method = "formula";
    std::string format = "json";
};

void add_output_flags(CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", o.config.output, "output path, '-' for stdout");
    sub->add_flag("--timings", o.config.timings, "record per-m wall-clock times");
}

void add_span_flags(CLI::App* sub, Options& o) {
    sub->add_flag("--fix-first", o.config.fix_first, "only enumerate words starting with the smallest letter");
    sub->add_option("--word-cap", o.config.word_cap, "maximum words per multidegree");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Growth of graded polynomial identities of graded Lie algebras"};
    app.require_subcommand(1);
    Options o;

    auto* am = app.add_subcommand("am", "table of a_m for m = 1..m_max");
    am->add_option("--family", o.config.family, "sl2-z2, sl2-z2xz2, sl2-z or sln")->required();
    am->add_option("--n", o.config.n, "matrix size for sln");
    am->add_option("--k", o.config.k, "generators per degree");
    am->add_option("--m-max", o.config.m_max, "largest total degree");
    am->add_option("--method", o.method, "brute, formula or both");
    add_span_flags(am, o);
    add_output_flags(am, o);

    auto* fit = app.add_subcommand("fit", "fit the polynomial degree of g(m)");
    fit->add_option("--family", o.config.family)->required();
    fit->add_option("--n", o.config.n);
    fit->add_option("--k", o.config.k);
    fit->add_option("--m-max", o.config.m_max);
    fit->add_option("--method", o.method, "brute or formula");
    add_span_flags(fit, o);
    add_output_flags(fit, o);

    auto* schur = app.add_subcommand("schur", "semistandard tableau count against the closed form");
    schur->add_option("--shape", o.config.shape, "comma separated parts, e.g. 2,1")->required();
    schur->add_option("--k", o.config.k);
    add_output_flags(schur, o);

    auto* sln = app.add_subcommand("sln", "component dimensions for the Z_n-graded sl_n model");
    sln->add_option("--n", o.config.n)->required();
    sln->add_option("--k", o.config.k);
    sln->add_option("--m-max", o.config.m_max);
    sln->add_flag("--assoc", o.config.assoc, "add associative dimensions");
    add_span_flags(sln, o);
    add_output_flags(sln, o);

    auto* verify = app.add_subcommand("verify", "brute force against the closed form on built-in configs");
    int verify_m_max = 0;
    verify->add_option("--m-max", verify_m_max, "cap the degree range (0 = built-in)");
    add_span_flags(verify, o);
    add_output_flags(verify, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const auto dir = MemoStore::directory_from_environment();
    MemoStore memo(dir);
    try {
        o.config.method = parse_method(o.method);
        o.config.format = parse_format(o.format);
        Report report;
        if (am->parsed()) {
            o.config.command = "am";
            report = cmd_am(o.config, &memo);
        } else if (fit->parsed()) {
            o.config.command = "fit";
            report = cmd_fit(o.config, &memo);
        } else if (schur->parsed()) {
            o.config.command = "schur";
            report = cmd_schur(o.config);
        } else if (sln->parsed()) {
            o.config.command = "sln";
            report = cmd_sln(o.config, &memo);
        } else {
            o.config.command = "verify";
            o.config.m_max = verify_m_max;
            report = cmd_verify(o.config, &memo);
        }
        memo.flush();

        const std::string text = report.render(o.config.format);
        if (o.config.output == "-") {
            std::cout << text;
        } else {
            std::ofstream out(o.config.output, std::ios::binary | std::ios::trunc);
            if (!out) {
                std::cerr << "error: cannot write " << o.config.output << "\n";
                return kExitUsage;
            }
            out << text;
        }
        for (const auto& row : report.rows) {
            if (row.contains("match") && !row["match"].get<bool>()) std::cerr << "mismatch: " << row.dump() << "\n";
        }
        if (report.fit && !report.fit->stable) std::cerr << "fit is not stable\n";
        return report.exit_code;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
    } catch (const ResourceLimit& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
    } catch (const InvalidShape& e) {
        std::cerr << "invalid shape: " << e.what() << "\n";
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kExitUsage;
}
