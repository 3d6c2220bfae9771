#include "stratmorse/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace stratmorse {

namespace {

// reindex p into a ring with extra variables prepended
Polynomial shift_up(const Polynomial& p, std::size_t extra) {
    Polynomial r(p.nvars() + extra);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> exps(extra, 0);
        const auto& src = m.exponents();
        exps.insert(exps.end(), src.begin(), src.end());
        r.add_term(Monomial(exps), c);
    }
    return r;
}

// inverse of shift_up; requires every term free of the first `extra` vars
Polynomial shift_down(const Polynomial& p, std::size_t extra) {
    Polynomial r(p.nvars() - extra);
    for (const auto& [m, c] : p.terms()) {
        const auto& src = m.exponents();
        for (std::size_t i = 0; i < extra; ++i)
            if (src[i] != 0) throw std::invalid_argument("polynomial still involves an eliminated variable");
        r.add_term(Monomial(std::vector<std::uint32_t>(src.begin() + extra, src.end())), c);
    }
    return r;
}

bool involves_prefix(const Polynomial& p, std::size_t k) {
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < k; ++i)
            if (m[i] != 0) return true;
    return false;
}

void check_same_ring(const Ideal& I, const Ideal& J) {
    if (I.nvars() != J.nvars())
        throw std::invalid_argument("ideals live in different rings");
}

}  // namespace

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> gens)
    : nvars_(nvars), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        if (g.nvars() != nvars)
            throw std::invalid_argument("generator lives in a different ring");
        if (!g.is_zero()) generators_.push_back(std::move(g));
    }
}

Ideal Ideal::principal(const Polynomial& g) { return Ideal(g.nvars(), {g}); }

Ideal Ideal::maximal(std::size_t nvars) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < nvars; ++i) gens.push_back(Polynomial::variable(nvars, i));
    return Ideal(nvars, std::move(gens));
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrdering& ord) const {
    const std::string key = ord.cache_key();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->entries.find(key);
        if (it != cache_->entries.end()) return *it->second;
    }
    auto computed = std::make_shared<const std::vector<Polynomial>>(
        standard_basis(generators_, ord));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto [it, inserted] = cache_->entries.emplace(key, std::move(computed));
    return *it->second;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    std::vector<Polynomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.nvars(), std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    std::vector<Polynomial> gens;
    for (const auto& a : I.generators())
        for (const auto& b : J.generators()) gens.push_back(a * b);
    return Ideal(I.nvars(), std::move(gens));
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    const auto ord = MonomialOrdering::global_degrevlex();
    return I.basis(ord) == J.basis(ord);
}

bool ideal_contains(const Ideal& I, const Polynomial& p) {
    if (I.nvars() != p.nvars())
        throw std::invalid_argument("polynomial lives in a different ring");
    const auto ord = MonomialOrdering::global_degrevlex();
    return normal_form(p, I.basis(ord), ord).is_zero();
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    if (I.is_zero() || J.is_zero()) return Ideal(I.nvars());
    const std::size_t n = I.nvars();
    // scratch ring (t, x_1 … x_n): generators t·I and (1−t)·J, eliminate t
    Polynomial t = Polynomial::variable(n + 1, 0);
    Polynomial one_minus_t = Polynomial::constant(n + 1, Rational(1)) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators()) gens.push_back(t * shift_up(g, 1));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * shift_up(g, 1));
    Ideal scratch(n + 1, std::move(gens));
    return eliminate(scratch, 1);
}

Polynomial divide_exact(const Polynomial& p, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    const auto ord = MonomialOrdering::global_degrevlex();
    Polynomial h = p;
    Polynomial q(p.nvars());
    const Monomial mg = leading_monomial(g, ord);
    const Rational cg = g.coeff(mg);
    while (!h.is_zero()) {
        const Monomial mh = leading_monomial(h, ord);
        if (!mg.divides(mh)) throw std::invalid_argument("division is not exact");
        Monomial m = mh.divide_exact(mg);
        Rational c = h.coeff(mh) / cg;
        q.add_term(m, c);
        h -= g.times_term(m, c);
    }
    return q;
}

Ideal quotient(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("quotient by the zero polynomial");
    if (g.nvars() != I.nvars())
        throw std::invalid_argument("polynomial lives in a different ring");
    if (I.is_zero()) return Ideal(I.nvars());
    Ideal meet = intersect(I, Ideal::principal(g));
    std::vector<Polynomial> gens;
    for (const auto& h : meet.generators()) gens.push_back(divide_exact(h, g));
    return Ideal(I.nvars(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    if (J.is_zero()) throw std::invalid_argument("quotient by the zero ideal");
    std::optional<Ideal> acc;
    for (const auto& g : J.generators()) {
        Ideal q = quotient(I, g);
        acc = acc ? intersect(*acc, q) : q;
    }
    return *acc;
}

Ideal saturate(const Ideal& I, const Ideal& J) {
    check_same_ring(I, J);
    if (J.is_zero()) throw std::invalid_argument("saturation by the zero ideal");
    Ideal current = I;
    for (;;) {
        Ideal next = ideal_quotient(current, J);
        if (ideal_equal(next, current)) {
            // hand back the canonical generator list
            const auto ord = MonomialOrdering::global_degrevlex();
            return Ideal(I.nvars(), current.basis(ord));
        }
        current = next;
    }
}

Ideal eliminate(const Ideal& I, std::size_t first_k_vars) {
    const std::size_t n = I.nvars();
    if (first_k_vars == 0 || first_k_vars >= n)
        throw std::invalid_argument("eliminate needs 1 <= k < variable count");
    const auto ord =
        MonomialOrdering::block(first_k_vars, MonomialOrdering::global_degrevlex());
    std::vector<Polynomial> gens;
    for (const auto& g : I.basis(ord))
        if (!involves_prefix(g, first_k_vars)) gens.push_back(shift_down(g, first_k_vars));
    return Ideal(n - first_k_vars, std::move(gens));
}

std::optional<std::size_t> local_dimension(const Ideal& I) {
    const std::size_t n = I.nvars();
    const auto ord = MonomialOrdering::local_negdegrevlex();
    const auto& basis = I.basis(ord);
    for (const auto& g : basis)
        if (g.has_nonzero_constant_term()) return std::nullopt;  // unit: empty germ
    std::vector<Monomial> lms = leading_ideal(basis, ord);
    // combinatorial dimension: the largest variable subset S such that no
    // leading monomial is supported inside S
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        std::size_t size = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (size <= best && mask != 0) continue;
        bool independent = true;
        for (const auto& m : lms) {
            bool inside = true;
            for (std::size_t i = 0; i < n && inside; ++i)
                if (m[i] > 0 && !(mask & (std::uint64_t(1) << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, size);
    }
    return best;
}

std::optional<unsigned long> local_multiplicity(const Ideal& I) {
    const std::size_t n = I.nvars();
    const auto ord = MonomialOrdering::local_negdegrevlex();
    const auto& basis = I.basis(ord);
    for (const auto& g : basis)
        if (g.has_nonzero_constant_term()) return 0;  // unit: localized quotient is 0
    std::vector<Monomial> lms = leading_ideal(basis, ord);
    // finite dimension iff every variable has a pure power among the leading
    // monomials; the pure powers bound the staircase box
    std::vector<std::uint32_t> bound(n, 0);
    for (const auto& m : lms) {
        std::size_t support = 0, var = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] > 0) {
                ++support;
                var = i;
            }
        }
        if (support == 1)
            bound[var] = bound[var] == 0 ? m[var] : std::min(bound[var], m[var]);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] == 0) return std::nullopt;  // infinite

    unsigned long count = 0;
    std::vector<std::uint32_t> e(n, 0);
    for (;;) {
        bool in_ideal = false;
        Monomial candidate{std::vector<std::uint32_t>(e.begin(), e.end())};
        for (const auto& m : lms) {
            if (m.divides(candidate)) {
                in_ideal = true;
                break;
            }
        }
        if (!in_ideal) ++count;
        std::size_t i = 0;
        while (i < n) {
            if (++e[i] < bound[i]) break;
            e[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return count;
}

}  // namespace stratmorse
