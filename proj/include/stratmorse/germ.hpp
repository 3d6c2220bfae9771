#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "stratmorse/ideal.hpp"

namespace stratmorse {

// A stratum of the input stratification: its name, its dimension, and the
// ideal of its closure. Strata are trusted input; regularity conditions
// along incidences are the user's responsibility.
struct Stratum {
    std::string name;
    std::size_t dim = 0;
    Ideal closure;
};

// Failure of a necessary genericity condition during the per-stratum
// pipeline, tagged with the stratum it occurred on.
class StratumError : public std::runtime_error {
public:
    enum class Kind {
        NotGeneral,               // polar germ has dimension > 1
        NotGeneralOrNotIsolated,  // an intersection multiplicity is infinite
    };

    StratumError(Kind kind, std::string stratum, const std::string& detail)
        : std::runtime_error("stratum '" + stratum + "': " + detail),
          kind_(kind),
          stratum_(std::move(stratum)) {}

    Kind kind() const { return kind_; }
    const std::string& stratum() const { return stratum_; }

private:
    Kind kind_;
    std::string stratum_;
};

// The input germ: ambient variable names plus a stratification that always
// contains the origin as its unique 0-dimensional stratum. Construction
// validates shape; strata are reordered ascending by dimension.
class StratifiedGerm {
public:
    StratifiedGerm(std::vector<std::string> variables, std::vector<Stratum> strata);

    const std::vector<std::string>& variables() const { return variables_; }
    std::size_t ambient_dim() const { return variables_.size(); }
    const std::vector<Stratum>& strata() const { return strata_; }

    // true when the only positive-dimensional stratum is the full ambient
    // space with zero closure ideal; enables the smooth-case oracle
    bool is_smooth_ambient() const;

private:
    std::vector<std::string> variables_;
    std::vector<Stratum> strata_;
};

}  // namespace stratmorse
