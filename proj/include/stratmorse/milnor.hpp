#pragma once

#include <cstdint>
#include <optional>

#include "stratmorse/polynomial.hpp"

namespace stratmorse {

// Brute-force Milnor number for a germ on smooth ambient space, fully
// independent of the standard-basis engine: all computations happen in the
// finite-dimensional space of monomials of degree < degree_bound by exact
// rational row reduction. Spans the truncated monomial multiples of the
// partial derivatives, then certifies stabilization by checking that every
// monomial of degree exactly degree_bound - 1 already lies in the span;
// without that certificate the result is nullopt ("inconclusive") and the
// caller should retry with a larger bound.
std::optional<unsigned long> milnor_oracle(const Polynomial& f, std::uint32_t degree_bound);

}  // namespace stratmorse
