#include "stratmorse/run.hpp"

#include <algorithm>
#include <random>

#include "stratmorse/milnor.hpp"
#include "stratmorse/polar.hpp"

namespace stratmorse {

std::vector<Polynomial> random_linear_forms(std::size_t nvars, unsigned attempts,
                                            unsigned coefficient_bound, std::uint64_t seed) {
    // raw modulo draws from a fixed engine: std::uniform_int_distribution is
    // implementation-defined, which would break byte-identical reports
    std::mt19937_64 engine(seed);
    const std::uint64_t span = 2 * static_cast<std::uint64_t>(coefficient_bound) + 1;
    std::vector<Polynomial> out;
    out.reserve(attempts);
    for (unsigned a = 0; a < attempts; ++a) {
        Polynomial l(nvars);
        while (l.is_zero()) {
            l = Polynomial(nvars);
            for (std::size_t i = 0; i < nvars; ++i) {
                long c = static_cast<long>(engine() % span) -
                         static_cast<long>(coefficient_bound);
                if (c != 0)
                    l += Polynomial::variable(nvars, i) * Rational(c);
            }
        }
        out.push_back(std::move(l));
    }
    return out;
}

Report run(const JobSpec& job) {
    const auto& germ = job.germ;
    const auto& names = germ.variables();

    Report report;
    report.variables = names;
    report.f = to_string(job.f, names);
    report.seed = job.options.seed;

    std::vector<Polynomial> candidates;
    if (job.l)
        candidates.push_back(*job.l);
    else
        candidates = random_linear_forms(germ.ambient_dim(), job.options.random_l_attempts,
                                         job.options.coefficient_bound, job.options.seed);

    std::vector<StratumOutcome> outcomes;
    Polynomial chosen(germ.ambient_dim());
    bool admissible = false;
    for (const auto& candidate : candidates) {
        outcomes = analyze(germ, job.f, candidate);
        chosen = candidate;
        admissible = std::all_of(outcomes.begin(), outcomes.end(),
                                 [](const StratumOutcome& o) { return o.ok(); });
        if (admissible) break;
    }
    if (!job.l && !admissible) report.error = "no admissible l found";
    report.l = chosen.is_zero() ? "" : to_string(chosen, names);

    for (const auto& o : outcomes) {
        ReportStratum s;
        s.name = o.name;
        s.dim = o.dim;
        for (const auto& g : o.polar_generators) s.polar_generators.push_back(to_string(g, names));
        s.mult_f = o.mult_f;
        s.mult_l = o.mult_l;
        s.morse_number = o.morse;
        for (const auto& c : o.checks) s.checks.push_back(ReportCheck{c.name, c.passed, c.detail});
        s.error = o.error;
        report.strata.push_back(std::move(s));
    }

    if (germ.is_smooth_ambient()) {
        std::uint32_t bound = std::max<std::uint32_t>(2, job.options.oracle_degree_bound);
        std::optional<unsigned long> mu;
        for (int escalation = 0; escalation < 4 && !mu; ++escalation, bound *= 2)
            mu = milnor_oracle(job.f, bound);
        if (mu) {
            bool agrees = report.strata.size() == 1 && report.strata[0].morse_number &&
                          *report.strata[0].morse_number == *mu;
            report.oracle = OracleReport{*mu, agrees};
        }
    }

    report.all_ok = !report.error &&
                    std::all_of(outcomes.begin(), outcomes.end(),
                                [](const StratumOutcome& o) { return o.ok(); });
    return report;
}

}  // namespace stratmorse
