#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace stratmorse {

// A monomial is an exponent vector over the ambient variable list. The
// variable count is fixed per computation session, so every operation insists
// on matching lengths.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1) {
        if (index >= nvars) throw std::invalid_argument("variable index out of range");
        Monomial m(nvars);
        m.exps_[index] = power;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint32_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
    }

    bool is_one() const {
        for (auto e : exps_)
            if (e) return false;
        return true;
    }

    bool divides(const Monomial& other) const {
        check(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        check(other);
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
        return r;
    }

    // this / other; requires other | this
    Monomial divide_exact(const Monomial& other) const {
        check(other);
        Monomial r(*this);
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (other.exps_[i] > exps_[i]) throw std::invalid_argument("inexact monomial division");
            r.exps_[i] -= other.exps_[i];
        }
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        a.check(b);
        Monomial r(a);
        for (std::size_t i = 0; i < r.exps_.size(); ++i)
            if (b.exps_[i] > r.exps_[i]) r.exps_[i] = b.exps_[i];
        return r;
    }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

private:
    void check(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw std::invalid_argument("monomial variable-count mismatch");
    }

    std::vector<std::uint32_t> exps_;
};

// Structural degrevlex comparison: higher total degree wins; on ties the
// monomial with the smaller exponent in the last differing position wins.
// Used both as the canonical term-storage order and as the global ordering.
inline int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    const std::uint32_t da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return degrevlex_cmp(a, b) > 0;
    }
};

}  // namespace stratmorse
