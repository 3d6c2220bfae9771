#pragma once

#include <span>
#include <vector>

#include "stratmorse/ordering.hpp"
#include "stratmorse/polynomial.hpp"

namespace stratmorse {

Polynomial make_monic(const Polynomial& p, const MonomialOrdering& ord);

// spoly(f,g) = (lcm/lt f)*f - (lcm/lt g)*g over the lcm of the leading
// monomials; zero iff inputs are zero or proportional leading terms cancel
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrdering& ord);

// Weak normal form in the sense of Mora: u*f = sum q_i b_i + h for some unit
// u of the localization, with LM(h) not divisible by any LM(b_i). For a
// global ordering u = 1 and every term of h is irreducible (full division).
// Membership test: f lies in the ideal of a standard basis iff this is zero.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrdering& ord);

// Buchberger completion with the product and chain criteria. Global and
// block orderings run directly; the local ordering is handled by
// homogenizing the generators, completing under homogenized_local(), and
// setting the extra variable to 1, which is both guaranteed to terminate
// and far faster than completion through the weak normal form. Output is
// monic and deterministic for a fixed generator sequence.
std::vector<Polynomial> standard_basis(std::span<const Polynomial> gens,
                                       const MonomialOrdering& ord);

// Minimal basis (no leading monomial divides another), monic, inter-reduced
// as far as the ordering allows, sorted descending by leading monomial.
// Under a global ordering elements are replaced by their normal form
// against the rest until nothing changes, so a standard-basis input yields
// the unique reduced basis and any input is inter-reduced. Under a local
// ordering full inter-reduction may leave the polynomial ring (the true
// canonical form can be a power series); the input is expected to be a
// standard basis, redundant leading monomials are dropped, each element is
// replaced by its leading monomial when that monomial already lies in the
// ideal, and tail terms lying in the ideal are removed. Those membership
// tests run under a fixed work budget, so pathological tails are kept
// rather than chased; leading monomials are exact in every case.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrdering& ord);

// Minimal generators of the leading monomial ideal of a standard basis.
std::vector<Monomial> leading_ideal(std::span<const Polynomial> basis,
                                    const MonomialOrdering& ord);

}  // namespace stratmorse
