#include "stratmorse/germ.hpp"

#include <algorithm>
#include <set>

namespace stratmorse {

StratifiedGerm::StratifiedGerm(std::vector<std::string> variables, std::vector<Stratum> strata)
    : variables_(std::move(variables)), strata_(std::move(strata)) {
    const std::size_t n = variables_.size();
    if (n == 0) throw std::invalid_argument("ambient space needs at least one variable");
    std::set<std::string> var_names(variables_.begin(), variables_.end());
    if (var_names.size() != n) throw std::invalid_argument("duplicate variable name");

    if (strata_.empty()) throw std::invalid_argument("at least one stratum required");
    std::set<std::string> names;
    std::size_t origin_count = 0;
    bool positive = false;
    for (const auto& s : strata_) {
        if (!names.insert(s.name).second)
            throw std::invalid_argument("duplicate stratum name '" + s.name + "'");
        if (s.closure.nvars() != n)
            throw std::invalid_argument("stratum '" + s.name + "': closure ideal in wrong ring");
        if (s.dim > n)
            throw std::invalid_argument("stratum '" + s.name + "': dim exceeds ambient dimension");
        for (const auto& g : s.closure.generators())
            if (g.has_nonzero_constant_term())
                throw std::invalid_argument("stratum '" + s.name +
                                            "': closure does not pass through the origin");
        if (s.dim == 0) {
            ++origin_count;
            if (!ideal_equal(s.closure, Ideal::maximal(n)))
                throw std::invalid_argument("stratum '" + s.name +
                                            "': origin stratum must have the maximal ideal");
        } else {
            positive = true;
        }
        auto ld = local_dimension(s.closure);
        if (!ld || *ld != s.dim)
            throw std::invalid_argument(
                "stratum '" + s.name + "': declared dim " + std::to_string(s.dim) +
                " but closure ideal has local dimension " +
                (ld ? std::to_string(*ld) : std::string("(empty at origin)")));
    }
    if (origin_count == 0) throw std::invalid_argument("origin stratum required");
    if (origin_count > 1) throw std::invalid_argument("more than one origin stratum");
    if (!positive) throw std::invalid_argument("at least one positive-dimensional stratum required");

    std::stable_sort(strata_.begin(), strata_.end(),
                     [](const Stratum& a, const Stratum& b) { return a.dim < b.dim; });
}

bool StratifiedGerm::is_smooth_ambient() const {
    if (strata_.size() != 2) return false;
    const Stratum& top = strata_[1];
    return top.dim == ambient_dim() && top.closure.is_zero();
}

}  // namespace stratmorse
