#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace stratmorse {

// Exact rational coefficients. mpq_class keeps values in lowest terms with a
// positive denominator once canonicalized, which is exactly the invariant we
// need; every helper that builds a Rational goes through canonicalization.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "3", "-7/2", "0". Whitespace is not tolerated here; callers trim.
inline Rational rational_from_string(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("malformed rational literal: " + text);
    if (mpq_sgn(q.get_mpq_t()) != 0 && mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("rational with zero denominator: " + text);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_pow(const Rational& base, std::uint32_t e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;  // base was canonical, so num^e/den^e already is
}

}  // namespace stratmorse
