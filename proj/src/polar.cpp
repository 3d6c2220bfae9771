#include "stratmorse/polar.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace stratmorse {

namespace {

Polynomial determinant(const std::vector<std::vector<Polynomial>>& M,
                       const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    const std::size_t nvars = M[rows[0]][cols[0]].nvars();
    if (n == 1) return M[rows[0]][cols[0]];
    Polynomial det(nvars);
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
        const Polynomial& entry = M[rows[0]][cols[j]];
        if (entry.is_zero()) continue;
        std::vector<std::size_t> sub_cols;
        for (std::size_t k = 0; k < n; ++k)
            if (k != j) sub_cols.push_back(cols[k]);
        Polynomial minor = determinant(M, sub_rows, sub_cols);
        if (j % 2 == 0)
            det += entry * minor;
        else
            det -= entry * minor;
    }
    return det;
}

void combinations(std::size_t total, std::size_t pick,
                  const std::function<void(const std::vector<std::size_t>&)>& emit) {
    std::vector<std::size_t> idx(pick);
    for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
    for (;;) {
        emit(idx);
        std::size_t i = pick;
        while (i > 0) {
            --i;
            if (idx[i] + (pick - i) < total) break;
            if (i == 0) return;
        }
        if (idx[i] + (pick - i) >= total) return;
        ++idx[i];
        for (std::size_t j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::string plural_dim(std::size_t d) { return "local dimension " + std::to_string(d); }

}  // namespace

std::vector<std::vector<Polynomial>> jacobian_matrix(std::span<const Polynomial> gens,
                                                     const Polynomial& f, const Polynomial& l) {
    const std::size_t n = f.nvars();
    if (l.nvars() != n) throw std::invalid_argument("f and l live in different rings");
    std::vector<std::vector<Polynomial>> M;
    auto gradient = [n](const Polynomial& p) {
        std::vector<Polynomial> row;
        row.reserve(n);
        for (std::size_t j = 0; j < n; ++j) row.push_back(p.derivative(j));
        return row;
    };
    for (const auto& g : gens) {
        if (g.nvars() != n) throw std::invalid_argument("generator lives in a different ring");
        M.push_back(gradient(g));
    }
    M.push_back(gradient(f));
    M.push_back(gradient(l));
    return M;
}

Ideal minors_ideal(const std::vector<std::vector<Polynomial>>& M, std::size_t size) {
    if (M.empty() || M[0].empty()) throw std::invalid_argument("minors of an empty matrix");
    const std::size_t rows = M.size();
    const std::size_t cols = M[0].size();
    for (const auto& row : M)
        if (row.size() != cols) throw std::invalid_argument("ragged matrix");
    if (size < 1 || size > rows || size > cols)
        throw std::invalid_argument("minor size out of range");
    const std::size_t nvars = M[0][0].nvars();
    std::vector<Polynomial> gens;
    combinations(rows, size, [&](const std::vector<std::size_t>& r) {
        combinations(cols, size, [&](const std::vector<std::size_t>& c) {
            Polynomial d = determinant(M, r, c);
            if (!d.is_zero()) gens.push_back(d);
        });
    });
    return Ideal(nvars, std::move(gens));
}

Ideal polar_ideal(const StratifiedGerm& germ, const Stratum& V, const Polynomial& f,
                  const Polynomial& l) {
    if (V.dim == 0) throw std::invalid_argument("polar ideal of the origin stratum");
    if (V.dim == 1) return V.closure;

    const std::size_t N = germ.ambient_dim();
    const std::size_t size = N - V.dim + 2;
    auto M = jacobian_matrix(V.closure.generators(), f, l);
    Ideal singular = V.closure;
    if (size <= M.size() && size <= N)
        singular = ideal_sum(singular, minors_ideal(M, size));

    std::optional<Ideal> lower;
    for (const auto& s : germ.strata()) {
        if (s.dim >= V.dim) continue;
        lower = lower ? ideal_product(*lower, s.closure) : s.closure;
    }
    return saturate(singular, *lower);
}

MorseDiagnostics morse_number(const StratifiedGerm& germ, const Stratum& V, const Polynomial& f,
                              const Polynomial& l) {
    if (V.dim == 0)
        throw std::invalid_argument("morse_number needs a positive-dimensional stratum");
    Ideal G = polar_ideal(germ, V, f, l);
    auto pd = local_dimension(G);
    if (!pd) return {0, 0, 0, true};
    if (*pd > 1)
        throw StratumError(StratumError::Kind::NotGeneral, V.name,
                           "polar germ has " + plural_dim(*pd) + ", expected at most 1");
    auto mf = local_multiplicity(ideal_sum(G, Ideal::principal(f)));
    auto ml = local_multiplicity(ideal_sum(G, Ideal::principal(l)));
    if (!mf || !ml)
        throw StratumError(StratumError::Kind::NotGeneralOrNotIsolated, V.name,
                           std::string("infinite intersection multiplicity against ") +
                               (!mf ? "f" : "l"));
    if (*mf < *ml)
        throw StratumError(StratumError::Kind::NotGeneralOrNotIsolated, V.name,
                           "mult_f < mult_l, the Morse count would be negative");
    return {*mf - *ml, *mf, *ml, false};
}

bool GenericityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const GenericityCheck& c) { return c.passed; });
}

bool StratumOutcome::ok() const {
    if (error || !morse) return false;
    return std::all_of(checks.begin(), checks.end(),
                       [](const GenericityCheck& c) { return c.passed; });
}

std::vector<StratumOutcome> analyze(const StratifiedGerm& germ, const Polynomial& f,
                                    const Polynomial& l) {
    const std::size_t n = germ.ambient_dim();
    if (f.nvars() != n || l.nvars() != n)
        throw std::invalid_argument("f and l must live in the ambient ring");
    if (f.has_nonzero_constant_term())
        throw std::invalid_argument("f must vanish at the origin");
    if (!l.is_linear_form())
        throw std::invalid_argument("l must be a nonzero linear form");
    const auto local = MonomialOrdering::local_negdegrevlex();
    const auto global = MonomialOrdering::global_degrevlex();

    std::vector<StratumOutcome> out;
    for (const auto& V : germ.strata()) {
        if (V.dim == 0) continue;
        StratumOutcome o;
        o.name = V.name;
        o.dim = V.dim;

        Ideal G = polar_ideal(germ, V, f, l);
        o.polar_generators = G.basis(global);
        o.polar_dim = local_dimension(G);
        o.empty_polar = !o.polar_dim.has_value();

        GenericityCheck dim_check{V.name, "polar_dimension", false, ""};
        if (o.empty_polar) {
            dim_check.passed = true;
            dim_check.detail = "polar germ empty at the origin";
        } else if (*o.polar_dim <= 1) {
            dim_check.passed = true;
            dim_check.detail = plural_dim(*o.polar_dim);
        } else {
            dim_check.detail = plural_dim(*o.polar_dim) + ", expected at most 1";
            o.error = "NotGeneral";
        }
        o.checks.push_back(dim_check);

        GenericityCheck mult_check{V.name, "finite_multiplicities", false, ""};
        if (o.empty_polar) {
            mult_check.passed = true;
            mult_check.detail = "empty polar germ, no multiplicities";
            o.mult_f = 0;
            o.mult_l = 0;
            o.morse = 0;
        } else {
            o.mult_f = local_multiplicity(ideal_sum(G, Ideal::principal(f)));
            o.mult_l = local_multiplicity(ideal_sum(G, Ideal::principal(l)));
            if (o.mult_f && o.mult_l) {
                mult_check.passed = true;
                mult_check.detail = "mult_f = " + std::to_string(*o.mult_f) +
                                    ", mult_l = " + std::to_string(*o.mult_l);
                if (*o.mult_f >= *o.mult_l) {
                    if (!o.error) o.morse = *o.mult_f - *o.mult_l;
                } else {
                    mult_check.passed = false;
                    mult_check.detail += ", mult_f < mult_l";
                    if (!o.error) o.error = "NotGeneralOrNotIsolated";
                }
            } else {
                mult_check.detail = std::string("infinite multiplicity against ") +
                                    (!o.mult_f ? "f" : "l");
                if (!o.error) o.error = "NotGeneralOrNotIsolated";
            }
        }
        o.checks.push_back(mult_check);

        if (V.dim == 1) {
            GenericityCheck van{V.name, "l_nonvanishing_on_curve", false, ""};
            bool vanishes = normal_form(l, V.closure.basis(local), local).is_zero();
            van.passed = !vanishes;
            van.detail = vanishes ? "l restricts to 0 on the closure"
                                  : "l restricts to a nonzero germ on the closure";
            if (vanishes && !o.error) o.error = "NotGeneralOrNotIsolated";
            o.checks.push_back(van);
        }

        out.push_back(std::move(o));
    }
    return out;
}

MorsePairSet morse_pairs(const StratifiedGerm& germ, const Polynomial& f, const Polynomial& l) {
    auto outcomes = analyze(germ, f, l);
    MorsePairSet set;
    for (auto& o : outcomes) {
        if (o.error) {
            auto kind = *o.error == "NotGeneral" ? StratumError::Kind::NotGeneral
                                                 : StratumError::Kind::NotGeneralOrNotIsolated;
            std::string detail = *o.error;
            for (const auto& c : o.checks)
                if (!c.passed) detail += ": " + c.detail;
            throw StratumError(kind, o.name, detail);
        }
        if (!o.morse) throw StratumError(StratumError::Kind::NotGeneralOrNotIsolated, o.name,
                                         "no Morse number produced");
        MorsePair p;
        p.stratum = o.name;
        p.dim = o.dim;
        p.morse = *o.morse;
        p.mult_f = o.mult_f.value_or(0);
        p.mult_l = o.mult_l.value_or(0);
        p.empty_polar = o.empty_polar;
        p.polar_generators = std::move(o.polar_generators);
        set.pairs.push_back(std::move(p));
    }
    return set;
}

GenericityReport genericity_check(const StratifiedGerm& germ, const Polynomial& f,
                                  const Polynomial& l) {
    GenericityReport report;
    for (auto& o : analyze(germ, f, l))
        for (auto& c : o.checks) report.checks.push_back(std::move(c));
    return report;
}

}  // namespace stratmorse
