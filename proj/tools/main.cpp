#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stratmorse/run.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morse pairs of a function germ on a stratified space"};

    std::string input_path;
    std::string format;
    unsigned random_l = 0;
    unsigned coeff_bound = 0;
    std::uint64_t seed = 0;
    std::uint32_t oracle_degree = 0;
    bool check_only = false;

    app.add_option("input", input_path, "germ description file")
        ->required()
        ->check(CLI::ExistingFile);
    auto* format_opt = app.add_option("--format", format, "output format")
                           ->check(CLI::IsMember({"text", "structured"}));
    auto* random_opt =
        app.add_option("--random-l", random_l, "random linear form attempts when l is absent");
    auto* bound_opt =
        app.add_option("--coeff-bound", coeff_bound, "coefficient bound for random linear forms")
            ->check(CLI::PositiveNumber);
    auto* seed_opt = app.add_option("--seed", seed, "seed for the random linear form draw");
    auto* oracle_opt =
        app.add_option("--oracle-degree", oracle_degree, "truncation degree for the smooth-case oracle")
            ->check(CLI::Range(2u, 64u));
    app.add_flag("--check-only", check_only, "run the genericity checks and exit");

    CLI11_PARSE(app, argc, argv);

    try {
        stratmorse::JobSpec job = stratmorse::parse_input(read_file(input_path));
        if (*format_opt) job.options.output_format = format;
        if (*random_opt) {
            job.options.random_l_attempts = random_l;
            job.l.reset();  // an explicit attempt count asks for the random draw
        }
        if (*bound_opt) job.options.coefficient_bound = coeff_bound;
        if (*seed_opt) job.options.seed = seed;
        if (*oracle_opt) job.options.oracle_degree_bound = oracle_degree;
        if (!job.l && job.options.random_l_attempts == 0) {
            std::cerr << "error: l missing and random_l_attempts is 0\n";
            return 2;
        }

        stratmorse::Report report = stratmorse::run(job);
        if (check_only) {
            if (job.options.output_format == "structured")
                std::cout << stratmorse::render_structured(report);
            else
                std::cout << stratmorse::render_checks_text(report);
            bool checks_ok = !report.error;
            for (const auto& s : report.strata)
                for (const auto& c : s.checks) checks_ok = checks_ok && c.passed;
            return checks_ok ? 0 : 1;
        }
        std::cout << stratmorse::render_report(report, job.options.output_format);
        return report.all_ok ? 0 : 1;
    } catch (const stratmorse::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
