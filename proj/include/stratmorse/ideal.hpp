#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "stratmorse/gbasis.hpp"
#include "stratmorse/ordering.hpp"
#include "stratmorse/polynomial.hpp"

namespace stratmorse {

// Immutable ideal value: a generator list plus a lazily filled cache of
// standard bases keyed by ordering. Copies share the cache. Concurrent
// basis() calls may duplicate work but never observe a half-built entry.
class Ideal {
public:
    explicit Ideal(std::size_t nvars) : nvars_(nvars), cache_(std::make_shared<Cache>()) {}
    Ideal(std::size_t nvars, std::vector<Polynomial> gens);

    static Ideal principal(const Polynomial& g);
    static Ideal maximal(std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

    // reduced standard basis under ord, computed once per ordering
    const std::vector<Polynomial>& basis(const MonomialOrdering& ord) const;

private:
    struct Cache {
        std::mutex mutex;
        std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> entries;
    };

    std::size_t nvars_;
    std::vector<Polynomial> generators_;  // zero polynomials are dropped
    std::shared_ptr<Cache> cache_;
};

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

// decided via identical reduced bases under the global degrevlex order
bool ideal_equal(const Ideal& I, const Ideal& J);
// membership of p in the polynomial-ring ideal
bool ideal_contains(const Ideal& I, const Polynomial& p);

// I ∩ J through the auxiliary-variable trick: t placed in front of the ring,
// block order eliminating it
Ideal intersect(const Ideal& I, const Ideal& J);

// (I : g) = {p : p g ∈ I}; computed as (I ∩ (g)) with each generator divided
// exactly by g. Requires g ≠ 0.
Ideal quotient(const Ideal& I, const Polynomial& g);

// (I : J) as the intersection of (I : g) over the generators of J. Using the
// full ideal quotient matters: composing single-generator quotients computes
// (I : (∏g)^∞) instead, which erases components met by any one generator.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

// (I : J^∞): iterate S ← (S : J) until ideal_equal reports stabilization
Ideal saturate(const Ideal& I, const Ideal& J);

// I ∩ k[x_{k+1}, …, x_n] as an ideal of the smaller ring; block-order basis,
// keep the generators free of the first k variables
Ideal eliminate(const Ideal& I, std::size_t first_k_vars);

// exact polynomial division p / g, throws if g does not divide p
Polynomial divide_exact(const Polynomial& p, const Polynomial& g);

// Krull dimension at the origin of V(I): combinatorial dimension of the
// local leading-monomial ideal; nullopt encodes "empty_at_origin" (the
// ideal contains a unit of the local ring)
std::optional<std::size_t> local_dimension(const Ideal& I);

// dim_Q of the localization at 0 of the quotient ring; nullopt encodes
// "infinite" (some variable has no pure power among the leading monomials)
std::optional<unsigned long> local_multiplicity(const Ideal& I);

}  // namespace stratmorse
