#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "stratmorse/monomial.hpp"
#include "stratmorse/polynomial.hpp"

namespace stratmorse {

enum class OrderKind { GlobalDegRevLex, LocalNegDegRevLex, Block, HomogenizedLocal };

// A monomial ordering usable with both global and local standard basis
// computation. Block orders compare a prefix of elim_count variables by
// degrevlex first, then fall back to the inner order on the remaining
// variables; eliminating the prefix block is how intersections and
// quotients are computed.
class MonomialOrdering {
public:
    static MonomialOrdering global_degrevlex();
    static MonomialOrdering local_negdegrevlex();
    static MonomialOrdering block(std::size_t elim_count, const MonomialOrdering& inner);
    // Global order on a ring extended by a homogenizing variable in the last
    // position: total degree first, then the local order on the other
    // variables. For a homogeneous ideal its leading monomials project onto
    // the local leading monomials of the dehomogenization, which is what
    // makes local standard bases computable by ordinary Buchberger.
    static MonomialOrdering homogenized_local();

    OrderKind kind() const { return kind_; }
    std::size_t elim_count() const { return elim_count_; }
    OrderKind inner_kind() const { return inner_kind_; }

    // a global order is a well-order with 1 as the smallest monomial;
    // a block order is global iff its inner order is
    bool is_global() const;

    // -1 if a < b, 0 if equal, +1 if a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    // stable key for caching standard bases per ordering
    std::string cache_key() const;

    bool operator==(const MonomialOrdering& other) const {
        return kind_ == other.kind_ && elim_count_ == other.elim_count_ &&
               inner_kind_ == other.inner_kind_;
    }

private:
    MonomialOrdering(OrderKind kind, std::size_t elim_count, OrderKind inner_kind)
        : kind_(kind), elim_count_(elim_count), inner_kind_(inner_kind) {}

    OrderKind kind_;
    std::size_t elim_count_;  // meaningful for Block only
    OrderKind inner_kind_;    // meaningful for Block only
};

// Leading data with respect to an arbitrary ordering; throws
// std::invalid_argument on the zero polynomial.
const Monomial& leading_monomial(const Polynomial& p, const MonomialOrdering& ord);
Rational leading_coeff(const Polynomial& p, const MonomialOrdering& ord);
Polynomial leading_term(const Polynomial& p, const MonomialOrdering& ord);

// total_degree(p) - degree(leading_monomial(p)); the driver of the local
// normal form loop, zero for every nonzero polynomial under a global order
std::uint32_t ecart(const Polynomial& p, const MonomialOrdering& ord);

}  // namespace stratmorse
