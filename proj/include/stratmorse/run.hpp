#pragma once

#include "stratmorse/parse.hpp"
#include "stratmorse/report.hpp"

namespace stratmorse {

// Full pipeline for one job: choose or verify the linear form, analyze every
// positive-dimensional stratum, run the smooth-case oracle when the germ is
// a single smooth stratum, and assemble the deterministic report. Exit
// semantics: report.all_ok is true iff every stratum produced a Morse number
// and every genericity check passed.
Report run(const JobSpec& job);

// The linear form candidates a given seed produces, in draw order; exposed
// so tests can pin the deterministic sequence.
std::vector<Polynomial> random_linear_forms(std::size_t nvars, unsigned attempts,
                                            unsigned coefficient_bound, std::uint64_t seed);

}  // namespace stratmorse
