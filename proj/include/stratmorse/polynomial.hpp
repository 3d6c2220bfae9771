#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "stratmorse/monomial.hpp"
#include "stratmorse/rational.hpp"

namespace stratmorse {

// Sparse multivariate polynomial over the rationals. Terms are stored in a
// map keyed by monomial in descending degrevlex, with no zero coefficients,
// so the representation is canonical: two polynomials are equal iff their
// term maps are equal. Values are immutable in practice: every operation
// returns a fresh polynomial.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, DegRevLexGreater>;

    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial zero(std::size_t nvars) { return Polynomial(nvars); }
    static Polynomial constant(std::size_t nvars, const Rational& c);
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial term(const Monomial& m, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // 0 for the zero polynomial
    std::uint32_t total_degree() const;

    Rational coeff(const Monomial& m) const;
    Rational constant_term() const { return coeff(Monomial(nvars_)); }
    bool has_nonzero_constant_term() const { return constant_term() != 0; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    // this * (c * m), fused to keep reduction loops cheap
    Polynomial times_term(const Monomial& m, const Rational& c) const;

    bool operator==(const Polynomial& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    Polynomial derivative(std::size_t var_index) const;
    Rational evaluate(std::span<const Rational> point) const;
    Polynomial substitute(std::size_t var_index, const Polynomial& replacement) const;
    // simultaneous substitution x_i -> images[i]; images share a common ring
    Polynomial compose(std::span<const Polynomial> images) const;

    // mutating helper used by the builders in this module only
    void add_term(const Monomial& m, const Rational& c);

    // true linear homogeneous form: nonzero, every term of total degree 1
    bool is_linear_form() const;

private:
    void check_compatible(const Polynomial& other) const;

    std::size_t nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// Canonical text form: terms in descending degrevlex, denominators cleared
// by the smallest positive integer. A polynomial with integer coefficients
// renders as itself, so parse(to_string(p)) == p for those; signs are always
// preserved. Stable across runs, safe to freeze in golden files.
std::string to_string(const Polynomial& p, std::span<const std::string> names);

// Primitive integer form with positive leading coefficient: the canonical
// representative of the scalar class of p. May flip the sign of p.
Polynomial integer_normalized(const Polynomial& p);

}  // namespace stratmorse
