#include "stratmorse/milnor.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace stratmorse {

namespace {

using SparseRow = std::map<std::size_t, Rational>;

// rows indexed by pivot position; invariant: each row is monic at its pivot
// and has no entry at any other pivot position
struct Echelon {
    std::map<std::size_t, SparseRow> rows;

    void reduce(SparseRow& v) const {
        for (const auto& [pivot, row] : rows) {
            auto it = v.find(pivot);
            if (it == v.end()) continue;
            Rational c = it->second;
            for (const auto& [j, val] : row) {
                auto jt = v.emplace(j, Rational(0)).first;
                jt->second -= c * val;
                if (jt->second == 0) v.erase(jt);
            }
        }
    }

    bool insert(SparseRow v) {
        reduce(v);
        if (v.empty()) return false;
        std::size_t pivot = v.begin()->first;
        Rational lead = v.begin()->second;
        for (auto& [j, val] : v) val /= lead;
        // keep older rows clean at the new pivot
        for (auto& [p, row] : rows) {
            auto it = row.find(pivot);
            if (it == row.end()) continue;
            Rational c = it->second;
            for (const auto& [j, val] : v) {
                auto jt = row.emplace(j, Rational(0)).first;
                jt->second -= c * val;
                if (jt->second == 0) row.erase(jt);
            }
        }
        rows.emplace(pivot, std::move(v));
        return true;
    }

    bool contains(SparseRow v) const {
        reduce(v);
        return v.empty();
    }
};

void enumerate_monomials(std::size_t nvars, std::uint32_t max_degree,
                         std::vector<Monomial>& out) {
    std::vector<std::uint32_t> exps(nvars, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i,
                                                              std::uint32_t remaining) {
        if (i == nvars) {
            out.emplace_back(exps);
            return;
        }
        for (std::uint32_t e = 0; e <= remaining; ++e) {
            exps[i] = e;
            rec(i + 1, remaining - e);
            exps[i] = 0;
        }
    };
    rec(0, max_degree);
}

}  // namespace

std::optional<unsigned long> milnor_oracle(const Polynomial& f, std::uint32_t degree_bound) {
    if (f.has_nonzero_constant_term())
        throw std::invalid_argument("oracle input must vanish at the origin");
    if (degree_bound < 1) throw std::invalid_argument("degree bound must be at least 1");
    const std::size_t n = f.nvars();
    const std::uint32_t D = degree_bound;

    std::vector<Monomial> monomials;  // all monomials of degree < D
    enumerate_monomials(n, D - 1, monomials);
    std::map<Monomial, std::size_t, DegRevLexGreater> index;
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);

    std::vector<Polynomial> partials;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial d = f.derivative(i);
        if (!d.is_zero()) partials.push_back(std::move(d));
    }

    Echelon span;
    for (const auto& p : partials) {
        for (const auto& m : monomials) {
            SparseRow row;
            for (const auto& [pm, pc] : p.terms()) {
                Monomial prod = m * pm;
                if (prod.degree() >= D) continue;  // truncate
                auto it = index.find(prod);
                auto [jt, inserted] = row.emplace(it->second, pc);
                if (!inserted) {
                    jt->second += pc;
                    if (jt->second == 0) row.erase(jt);
                }
            }
            if (!row.empty()) span.insert(std::move(row));
        }
    }

    // stabilization: every monomial of top degree D-1 must already be in the
    // span, otherwise the truncation degree was too small to decide
    for (const auto& m : monomials) {
        if (m.degree() != D - 1) continue;
        SparseRow unit;
        unit.emplace(index.at(m), Rational(1));
        if (!span.contains(std::move(unit))) return std::nullopt;
    }
    return static_cast<unsigned long>(monomials.size() - span.rows.size());
}

}  // namespace stratmorse
