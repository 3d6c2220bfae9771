#include "stratmorse/ordering.hpp"

#include <stdexcept>

namespace stratmorse {

namespace {

// degrevlex on the exponent range [lo, hi): higher total degree wins, ties
// broken at the last differing position where the smaller exponent wins
int degrevlex_cmp_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i > lo; --i) {
        std::uint32_t ea = a[i - 1], eb = b[i - 1];
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

// negdegrevlex: lower total degree wins, same revlex tie-break; 1 is the
// largest monomial, making this the standard local order
int negdegrevlex_cmp_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? 1 : -1;
    for (std::size_t i = hi; i > lo; --i) {
        std::uint32_t ea = a[i - 1], eb = b[i - 1];
        if (ea != eb) return ea > eb ? -1 : 1;
    }
    return 0;
}

}  // namespace

MonomialOrdering MonomialOrdering::global_degrevlex() {
    return MonomialOrdering(OrderKind::GlobalDegRevLex, 0, OrderKind::GlobalDegRevLex);
}

MonomialOrdering MonomialOrdering::local_negdegrevlex() {
    return MonomialOrdering(OrderKind::LocalNegDegRevLex, 0, OrderKind::LocalNegDegRevLex);
}

MonomialOrdering MonomialOrdering::block(std::size_t elim_count, const MonomialOrdering& inner) {
    if (inner.kind_ != OrderKind::GlobalDegRevLex && inner.kind_ != OrderKind::LocalNegDegRevLex)
        throw std::invalid_argument("block orders only nest over the plain orders");
    if (elim_count == 0) throw std::invalid_argument("block order needs a nonempty prefix");
    return MonomialOrdering(OrderKind::Block, elim_count, inner.kind_);
}

MonomialOrdering MonomialOrdering::homogenized_local() {
    return MonomialOrdering(OrderKind::HomogenizedLocal, 0, OrderKind::LocalNegDegRevLex);
}

bool MonomialOrdering::is_global() const {
    switch (kind_) {
        case OrderKind::GlobalDegRevLex: return true;
        case OrderKind::LocalNegDegRevLex: return false;
        case OrderKind::Block: return inner_kind_ == OrderKind::GlobalDegRevLex;
        case OrderKind::HomogenizedLocal: return true;
    }
    return false;
}

int MonomialOrdering::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument("monomials live in different rings");
    std::size_t n = a.nvars();
    switch (kind_) {
        case OrderKind::GlobalDegRevLex: return degrevlex_cmp_range(a, b, 0, n);
        case OrderKind::LocalNegDegRevLex: return negdegrevlex_cmp_range(a, b, 0, n);
        case OrderKind::Block: {
            if (elim_count_ > n)
                throw std::invalid_argument("block prefix exceeds variable count");
            int c = degrevlex_cmp_range(a, b, 0, elim_count_);
            if (c != 0) return c;
            if (inner_kind_ == OrderKind::GlobalDegRevLex)
                return degrevlex_cmp_range(a, b, elim_count_, n);
            return negdegrevlex_cmp_range(a, b, elim_count_, n);
        }
        case OrderKind::HomogenizedLocal: {
            if (n == 0) return 0;
            std::uint64_t da = a.degree(), db = b.degree();
            if (da != db) return da < db ? -1 : 1;
            return negdegrevlex_cmp_range(a, b, 0, n - 1);
        }
    }
    return 0;
}

std::string MonomialOrdering::cache_key() const {
    switch (kind_) {
        case OrderKind::GlobalDegRevLex: return "dp";
        case OrderKind::LocalNegDegRevLex: return "ds";
        case OrderKind::Block:
            return "block:" + std::to_string(elim_count_) +
                   (inner_kind_ == OrderKind::GlobalDegRevLex ? ":dp" : ":ds");
        case OrderKind::HomogenizedLocal: return "hds";
    }
    return "?";
}

const Monomial& leading_monomial(const Polynomial& p, const MonomialOrdering& ord) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
    // storage order is descending degrevlex, so begin() is already the answer
    // for the global degrevlex order
    auto it = p.terms().begin();
    if (ord.kind() == OrderKind::GlobalDegRevLex) return it->first;
    auto best = it;
    for (++it; it != p.terms().end(); ++it)
        if (ord.greater(it->first, best->first)) best = it;
    return best->first;
}

Rational leading_coeff(const Polynomial& p, const MonomialOrdering& ord) {
    return p.coeff(leading_monomial(p, ord));
}

Polynomial leading_term(const Polynomial& p, const MonomialOrdering& ord) {
    const Monomial& m = leading_monomial(p, ord);
    return Polynomial::term(m, p.coeff(m));
}

std::uint32_t ecart(const Polynomial& p, const MonomialOrdering& ord) {
    return p.total_degree() - leading_monomial(p, ord).degree();
}

}  // namespace stratmorse
