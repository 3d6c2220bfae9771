#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace stratmorse {

struct ReportCheck {
    std::string name;
    bool passed = false;
    std::string detail;

    bool operator==(const ReportCheck&) const = default;
};

struct ReportStratum {
    std::string name;
    std::size_t dim = 0;
    std::vector<std::string> polar_generators;     // canonical strings
    std::optional<unsigned long> mult_f, mult_l;   // nullopt means infinite
    std::optional<unsigned long> morse_number;     // nullopt means not produced
    std::vector<ReportCheck> checks;
    std::optional<std::string> error;

    bool operator==(const ReportStratum&) const = default;
};

struct OracleReport {
    unsigned long value = 0;
    bool agrees = false;

    bool operator==(const OracleReport&) const = default;
};

// The complete result of one run, fully serializable; field values are
// deterministic for a fixed job and seed.
struct Report {
    std::vector<std::string> variables;
    std::string f;  // canonical rendering
    std::string l;  // the linear form actually used; empty when none found
    std::uint64_t seed = 0;
    std::vector<ReportStratum> strata;  // ascending dimension
    std::optional<OracleReport> oracle;
    bool all_ok = false;
    std::optional<std::string> error;

    bool operator==(const Report&) const = default;
};

// Text table: one row per stratum (name dim mult_f mult_l m_V checks),
// followed by the set of Morse pairs.
std::string render_text(const Report& report);

// Per-check listing used by check-only runs.
std::string render_checks_text(const Report& report);

// Deterministic JSON document; the inverse of parse_structured.
std::string render_structured(const Report& report);
Report parse_structured(const std::string& text);

std::string render_report(const Report& report, const std::string& format);

}  // namespace stratmorse
