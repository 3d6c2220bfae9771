#include "stratmorse/gbasis.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>

namespace stratmorse {

namespace {

// 64-bit-word count of a rational, the unit the reduction budget is
// charged in: the cost of multiplying a polynomial through by a scalar is
// proportional to coefficient sizes, not just term counts
std::uint64_t rational_words(const Rational& c) {
    return 1 + (mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2)) / 64;
}

std::uint64_t poly_weight(const Polynomial& p) {
    std::uint64_t w = 0;
    for (const auto& [m, c] : p.terms()) w += rational_words(c);
    return w;
}

struct Reducer {
    Polynomial poly;
    Monomial lm;
    Rational lc;
    std::uint32_t ec;
    std::uint64_t weight;
};

std::vector<Reducer> make_reducers(std::span<const Polynomial> basis,
                                   const MonomialOrdering& ord) {
    std::vector<Reducer> T;
    T.reserve(basis.size());
    for (const auto& p : basis) {
        if (p.is_zero()) continue;
        Monomial lm = leading_monomial(p, ord);
        T.push_back({p, lm, p.coeff(lm), ecart(p, ord), poly_weight(p)});
    }
    return T;
}

// Mora's weak normal form. Reducers of minimal ecart are preferred; when
// even the best reducer has larger ecart than the current remainder, the
// remainder itself joins the reducer set. Terminates for any ordering and
// for local orderings yields h with u*f = sum q_i b_i + h, u a unit at the
// origin. The fuel counter is decremented per reduction step, weighted by
// reducer size; when it runs out the routine gives up and returns nullopt,
// which callers that only need a positive membership certificate treat as
// "not proven".
std::optional<Polynomial> mora_weak_nf_fueled(const Polynomial& f,
                                              std::span<const Polynomial> basis,
                                              const MonomialOrdering& ord,
                                              std::uint64_t& fuel) {
    std::vector<Reducer> T = make_reducers(basis, ord);
    Polynomial h = f;
    while (!h.is_zero()) {
        Monomial mh = leading_monomial(h, ord);
        std::uint32_t eh = h.total_degree() - mh.degree();
        std::size_t best = T.size();
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (!T[i].lm.divides(mh)) continue;
            if (best == T.size() || T[i].ec < T[best].ec) best = i;
        }
        if (best == T.size()) break;
        const Rational ch = h.coeff(mh);
        const std::uint64_t cost =
            T[best].weight * (rational_words(ch) + rational_words(T[best].lc));
        if (fuel <= cost) {
            fuel = 0;
            return std::nullopt;
        }
        fuel -= cost;
        if (T[best].ec > eh) T.push_back({h, mh, ch, eh, poly_weight(h)});
        Reducer g = T[best];
        h -= g.poly.times_term(mh.divide_exact(g.lm), ch / g.lc);
    }
    return h;
}

Polynomial mora_weak_nf(const Polynomial& f, std::span<const Polynomial> basis,
                        const MonomialOrdering& ord) {
    std::uint64_t fuel = std::numeric_limits<std::uint64_t>::max();
    auto r = mora_weak_nf_fueled(f, basis, ord, fuel);
    if (!r) throw std::runtime_error("weak normal form exceeded the reduction budget");
    return *std::move(r);
}

// Full division for a global ordering: every term of the remainder is
// irreducible, the multiplier u is 1.
Polynomial total_reduce(const Polynomial& f, std::span<const Polynomial> basis,
                        const MonomialOrdering& ord) {
    std::vector<Reducer> T = make_reducers(basis, ord);
    Polynomial h = f;
    Polynomial r(f.nvars());
    while (!h.is_zero()) {
        Monomial mh = leading_monomial(h, ord);
        Rational ch = h.coeff(mh);
        std::size_t hit = T.size();
        for (std::size_t i = 0; i < T.size(); ++i) {
            if (T[i].lm.divides(mh)) {
                hit = i;
                break;
            }
        }
        if (hit == T.size()) {
            r.add_term(mh, ch);
            h.add_term(mh, -ch);
        } else {
            h -= T[hit].poly.times_term(mh.divide_exact(T[hit].lm), ch / T[hit].lc);
        }
    }
    return r;
}

struct SPair {
    std::size_t i, j;
    Monomial lcm;
};

// homogenization with one extra variable in the last position
Polynomial homogenize(const Polynomial& p) {
    Polynomial out(p.nvars() + 1);
    const std::uint32_t d = p.total_degree();
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps = m.exponents();
        exps.push_back(d - m.degree());
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

Polynomial dehomogenize(const Polynomial& p) {
    Polynomial out(p.nvars() - 1);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps = m.exponents();
        exps.pop_back();
        out.add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

}  // namespace

Polynomial make_monic(const Polynomial& p, const MonomialOrdering& ord) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / leading_coeff(p, ord));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrdering& ord) {
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("s-polynomial of a zero polynomial");
    const Monomial mf = leading_monomial(f, ord);
    const Monomial mg = leading_monomial(g, ord);
    Monomial l = Monomial::lcm(mf, mg);
    Polynomial a = f.times_term(l.divide_exact(mf), Rational(1) / f.coeff(mf));
    Polynomial b = g.times_term(l.divide_exact(mg), Rational(1) / g.coeff(mg));
    return a - b;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const MonomialOrdering& ord) {
    if (ord.is_global()) return total_reduce(f, basis, ord);
    return mora_weak_nf(f, basis, ord);
}

std::vector<Polynomial> standard_basis(std::span<const Polynomial> gens,
                                       const MonomialOrdering& ord) {
    // Local bases go through homogenization: Buchberger over the extended
    // ring with a global order whose ties follow the local order, then
    // setting the extra variable to 1. The dehomogenized set is a standard
    // basis because the leading monomial of a homogeneous element projects
    // onto the local leading monomial of its dehomogenization. This avoids
    // the blowup the plain weak normal form suffers during completion.
    if (ord.kind() == OrderKind::LocalNegDegRevLex) {
        std::vector<Polynomial> hom;
        for (const auto& p : gens)
            if (!p.is_zero()) hom.push_back(homogenize(p));
        auto hom_basis = standard_basis(hom, MonomialOrdering::homogenized_local());
        std::vector<Polynomial> deh;
        deh.reserve(hom_basis.size());
        for (const auto& p : hom_basis) deh.push_back(dehomogenize(p));
        return reduce_basis(std::move(deh), ord);
    }

    std::vector<Polynomial> G;
    for (const auto& p : gens)
        if (!p.is_zero()) G.push_back(make_monic(p, ord));
    if (G.empty()) return G;

    std::vector<Monomial> lm;
    lm.reserve(G.size());
    for (const auto& g : G) lm.push_back(leading_monomial(g, ord));

    // pending pairs sorted by (lcm degree, lcm under ord, i, j) so runs are
    // reproducible; treated records pairs that are known to reduce to zero,
    // feeding the chain criterion
    auto pair_less = [&](const SPair& a, const SPair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        int c = ord.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::vector<SPair> pending;
    std::set<std::pair<std::size_t, std::size_t>> treated;
    auto push_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            pending.push_back({i, j, Monomial::lcm(lm[i], lm[j])});
    };
    for (std::size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

    while (!pending.empty()) {
        auto it = std::min_element(pending.begin(), pending.end(), pair_less);
        SPair pr = *it;
        pending.erase(it);

        // product criterion: coprime leading monomials reduce to zero
        if (pr.lcm == lm[pr.i] * lm[pr.j]) {
            treated.insert({pr.i, pr.j});
            continue;
        }
        // chain criterion: a third element divides the lcm and both side
        // pairs are already treated
        bool skip = false;
        for (std::size_t k = 0; k < G.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!lm[k].divides(pr.lcm)) continue;
            auto a = std::minmax(pr.i, k);
            auto b = std::minmax(pr.j, k);
            if (treated.count({a.first, a.second}) && treated.count({b.first, b.second}))
                skip = true;
        }
        if (skip) {
            treated.insert({pr.i, pr.j});
            continue;
        }

        Polynomial h = normal_form(s_polynomial(G[pr.i], G[pr.j], ord), G, ord);
        treated.insert({pr.i, pr.j});
        if (!h.is_zero()) {
            G.push_back(make_monic(h, ord));
            lm.push_back(leading_monomial(G.back(), ord));
            push_pairs_for(G.size() - 1);
        }
    }
    return reduce_basis(std::move(G), ord);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrdering& ord) {
    std::vector<Polynomial> out;
    for (auto& p : basis)
        if (!p.is_zero()) out.push_back(make_monic(p, ord));
    if (out.empty()) return out;

    if (ord.is_global()) {
        // inter-reduce to a fixpoint: each element is replaced by its normal
        // form against the rest and dropped when that is zero. Redundant
        // leading monomials disappear on the way, so the result is minimal,
        // and for a standard-basis input it is the unique reduced basis.
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < out.size();) {
                std::vector<Polynomial> others;
                others.reserve(out.size() - 1);
                for (std::size_t j = 0; j < out.size(); ++j)
                    if (j != i) others.push_back(out[j]);
                Polynomial r = normal_form(out[i], others, ord);
                if (r.is_zero()) {
                    out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                    changed = true;
                    continue;
                }
                Polynomial m = make_monic(r, ord);
                if (m != out[i]) {
                    out[i] = std::move(m);
                    changed = true;
                }
                ++i;
            }
        }
    } else {
        // minimal first: drop any element whose leading monomial is divisible
        // by another kept one (for equal monomials the first survives); sound
        // for a standard-basis input, which is what the local path receives
        std::vector<Monomial> lm;
        for (const auto& p : out) lm.push_back(leading_monomial(p, ord));
        std::vector<bool> dropped(out.size(), false);
        for (std::size_t i = 0; i < out.size(); ++i) {
            for (std::size_t j = 0; j < out.size() && !dropped[i]; ++j) {
                if (i == j || dropped[j]) continue;
                if (lm[j] == lm[i]) {
                    if (j < i) dropped[i] = true;
                } else if (lm[j].divides(lm[i])) {
                    dropped[i] = true;
                }
            }
        }
        std::vector<Polynomial> minimal;
        for (std::size_t i = 0; i < out.size(); ++i)
            if (!dropped[i]) minimal.push_back(out[i]);
        out = std::move(minimal);
        // local normalization: replacing an element by its leading monomial,
        // or deleting a tail term, is sound exactly when the monomial in
        // question already lies in the ideal; leading monomials never change,
        // so the set stays a standard basis of the same ideal throughout.
        // Membership is tested only when the monomial lies in the leading
        // ideal (a necessary condition), and the weak normal forms share a
        // fixed work budget: fully reduced tails need not exist over a local
        // ring, so once the budget is spent the remaining tails are kept
        // as they are. Everything the basis is queried for afterwards only
        // depends on the leading monomials.
        std::uint64_t fuel = 1u << 20;
        std::vector<Monomial> heads;
        for (const auto& p : out) heads.push_back(leading_monomial(p, ord));
        auto in_ideal = [&](const Monomial& mono) {
            bool below = false;
            for (const auto& h : heads)
                if (h.divides(mono)) {
                    below = true;
                    break;
                }
            if (!below || fuel == 0) return false;
            auto r = mora_weak_nf_fueled(Polynomial::term(mono, Rational(1)), out, ord, fuel);
            return r.has_value() && r->is_zero();
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < out.size(); ++i) {
                if (out[i].term_count() > 1 && in_ideal(heads[i])) {
                    out[i] = Polynomial::term(heads[i], Rational(1));
                    changed = true;
                    continue;
                }
                for (const auto& [tm, tc] : out[i].terms()) {
                    if (tm == heads[i]) continue;
                    if (in_ideal(tm)) {
                        out[i] -= Polynomial::term(tm, tc);
                        changed = true;
                        break;
                    }
                }
            }
        }
    }

    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.greater(leading_monomial(a, ord), leading_monomial(b, ord));
    });
    return out;
}

std::vector<Monomial> leading_ideal(std::span<const Polynomial> basis,
                                    const MonomialOrdering& ord) {
    std::vector<Monomial> lms;
    for (const auto& p : basis)
        if (!p.is_zero()) lms.push_back(leading_monomial(p, ord));
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < lms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < lms.size() && !redundant; ++j) {
            if (i == j) continue;
            if (lms[j] == lms[i]) {
                redundant = j < i;
            } else if (lms[j].divides(lms[i])) {
                redundant = true;
            }
        }
        if (!redundant) out.push_back(lms[i]);
    }
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.greater(a, b); });
    return out;
}

}  // namespace stratmorse
