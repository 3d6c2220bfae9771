#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stratmorse/germ.hpp"
#include "stratmorse/ideal.hpp"

namespace stratmorse {

// Rows: the gradient of each closure generator, then of f, then of l.
// Columns indexed by the ambient variables.
std::vector<std::vector<Polynomial>> jacobian_matrix(std::span<const Polynomial> gens,
                                                     const Polynomial& f, const Polynomial& l);

// Ideal of all size×size minors, expanded exactly.
Ideal minors_ideal(const std::vector<std::vector<Polynomial>>& M, std::size_t size);

// The polar ideal of a positive-dimensional stratum V: for a curve stratum
// the closure itself; otherwise the closure plus the (N − dim V + 2)-minors
// of the Jacobian of (closure generators, f, l), saturated by the product of
// the closure ideals of all strictly lower-dimensional strata. The
// saturation removes components inside the boundary of V and any embedded
// component at the origin (the origin's maximal ideal is always a factor).
// When the minor size exceeds the matrix, no rank condition exists and the
// whole closure is polar, matching the curve-stratum convention.
Ideal polar_ideal(const StratifiedGerm& germ, const Stratum& V, const Polynomial& f,
                  const Polynomial& l);

struct MorseDiagnostics {
    unsigned long value = 0;   // the Morse number m_V = mult_f - mult_l
    unsigned long mult_f = 0;  // mult_0 of the polar curve against f = 0
    unsigned long mult_l = 0;  // mult_0 of the polar curve against l = 0
    bool empty_polar = false;  // polar germ empty at the origin, m_V = 0
};

// The per-stratum Morse number with its two multiplicities. Throws
// StratumError when the polar germ has dimension > 1 (NotGeneral) or a
// multiplicity is infinite or the difference would be negative
// (NotGeneralOrNotIsolated).
MorseDiagnostics morse_number(const StratifiedGerm& germ, const Stratum& V, const Polynomial& f,
                              const Polynomial& l);

struct MorsePair {
    std::string stratum;
    std::size_t dim = 0;
    unsigned long morse = 0;
    unsigned long mult_f = 0;
    unsigned long mult_l = 0;
    bool empty_polar = false;
    std::vector<Polynomial> polar_generators;  // reduced global basis
};

// Morse numbers for every positive-dimensional stratum, in ascending
// dimension order; the origin stratum carries none.
struct MorsePairSet {
    std::vector<MorsePair> pairs;
};

MorsePairSet morse_pairs(const StratifiedGerm& germ, const Polynomial& f, const Polynomial& l);

struct GenericityCheck {
    std::string stratum;
    std::string name;  // polar_dimension | finite_multiplicities | l_nonvanishing_on_curve
    bool passed = false;
    std::string detail;
};

struct GenericityReport {
    std::vector<GenericityCheck> checks;
    bool all_passed() const;
};

// Necessary (not sufficient) conditions for the chosen linear form: the
// polar germ of each positive-dimensional stratum has dimension at most 1
// or is empty, both multiplicities are finite, and l does not vanish
// identically on any curve stratum's closure. A failure is a report entry,
// never an exception.
GenericityReport genericity_check(const StratifiedGerm& germ, const Polynomial& f,
                                  const Polynomial& l);

// Tolerant per-stratum pipeline used by the driver: one record per
// positive-dimensional stratum carrying diagnostics, check outcomes and an
// error tag instead of an exception.
struct StratumOutcome {
    std::string name;
    std::size_t dim = 0;
    std::vector<Polynomial> polar_generators;
    bool empty_polar = false;
    std::optional<std::size_t> polar_dim;          // nullopt when empty at origin
    std::optional<unsigned long> mult_f, mult_l;   // nullopt means infinite
    std::optional<unsigned long> morse;            // set when the formula applied
    std::vector<GenericityCheck> checks;
    std::optional<std::string> error;              // NotGeneral | NotGeneralOrNotIsolated
    bool ok() const;
};

std::vector<StratumOutcome> analyze(const StratifiedGerm& germ, const Polynomial& f,
                                    const Polynomial& l);

}  // namespace stratmorse
