#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "stratmorse/germ.hpp"
#include "stratmorse/polynomial.hpp"

namespace stratmorse {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error(message), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct JobOptions {
    unsigned random_l_attempts = 5;
    unsigned coefficient_bound = 10;
    std::string output_format = "text";  // text | structured
    std::uint32_t oracle_degree_bound = 12;
    std::uint64_t seed = 0;
};

struct JobSpec {
    StratifiedGerm germ;
    Polynomial f;
    std::optional<Polynomial> l;
    JobOptions options;
};

// Grammar (whitespace-insensitive, '#' comments):
//   file    := "vars" ident+ stratum+ "f" poly ("l" poly)? option*
//   stratum := "stratum" ident "dim" integer "closure" poly ("," poly)*
//   option  := "option" ident "=" value
// Polynomials are signed sums of terms with rational coefficients,
// juxtaposition or '*' for products, '^' for powers, parentheses allowed.
JobSpec parse_input(const std::string& text);

// Parse one polynomial over the given variable names (test and binding
// convenience; same expression syntax as the file format).
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

}  // namespace stratmorse
