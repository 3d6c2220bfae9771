#include "stratmorse/polynomial.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace stratmorse {

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Monomial(nvars), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    p.add_term(Monomial::variable(nvars, index), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c) {
    Polynomial p(m.nvars());
    p.add_term(m, c);
    return p;
}

void Polynomial::check_compatible(const Polynomial& other) const {
    if (nvars_ != other.nvars_)
        throw std::invalid_argument("polynomials live in different rings");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.nvars() != nvars_)
        throw std::invalid_argument("monomial has wrong number of variables");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

std::uint32_t Polynomial::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rational Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r = *this;
    r -= other;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_compatible(other);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_compatible(other);
    Polynomial r(nvars_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r(nvars_);
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (m.nvars() != nvars_)
        throw std::invalid_argument("monomial has wrong number of variables");
    if (c == 0) return Polynomial(nvars_);
    Polynomial r(nvars_);
    for (const auto& [mm, k] : terms_) r.terms_.emplace(mm * m, k * c);
    return r;
}

Polynomial Polynomial::derivative(std::size_t var_index) const {
    if (var_index >= nvars_) throw std::invalid_argument("variable index out of range");
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m[var_index];
        if (e == 0) continue;
        auto exps = m.exponents();
        exps[var_index] = e - 1;
        r.add_term(Monomial(exps), c * Rational(static_cast<long>(e)));
    }
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("point has wrong dimension");
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (m[i] > 0) v *= rational_pow(point[i], m[i]);
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(std::size_t var_index, const Polynomial& replacement) const {
    if (var_index >= nvars_) throw std::invalid_argument("variable index out of range");
    check_compatible(replacement);
    // bucket terms by the exponent of the substituted variable, then expand
    // each bucket once with an incrementally maintained power
    std::map<std::uint32_t, Polynomial> buckets;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = m[var_index];
        auto exps = m.exponents();
        exps[var_index] = 0;
        auto [it, inserted] = buckets.emplace(e, Polynomial(nvars_));
        it->second.add_term(Monomial(exps), c);
    }
    Polynomial result(nvars_);
    Polynomial power = Polynomial::constant(nvars_, Rational(1));
    std::uint32_t current = 0;
    for (const auto& [e, part] : buckets) {
        while (current < e) {
            power = power * replacement;
            ++current;
        }
        result += part * power;
    }
    return result;
}

Polynomial Polynomial::compose(std::span<const Polynomial> images) const {
    if (images.size() != nvars_)
        throw std::invalid_argument("compose needs one image per variable");
    if (images.empty()) return *this;
    std::size_t target = images[0].nvars();
    for (const auto& img : images)
        if (img.nvars() != target)
            throw std::invalid_argument("compose images live in different rings");
    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t k = 0; k < m[i]; ++k) t = t * images[i];
        result += t;
    }
    return result;
}

bool Polynomial::is_linear_form() const {
    if (terms_.empty()) return false;
    for (const auto& [m, c] : terms_)
        if (m.degree() != 1) return false;
    return true;
}

namespace {

// the lcm of the coefficient denominators: the smallest positive integer
// whose multiple of p has integer coefficients; 1 exactly when p already has
Integer denominator_lcm(const Polynomial& p) {
    Integer den_lcm(1);
    for (const auto& [m, c] : p.terms()) {
        Integer d = c.get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    return den_lcm;
}

}  // namespace

Polynomial integer_normalized(const Polynomial& p) {
    if (p.is_zero()) return p;
    // primitive integer form: clear denominators, divide out the content
    Integer content(0);
    Integer den_lcm = denominator_lcm(p);
    for (const auto& [m, c] : p.terms()) {
        Rational scaled = c * Rational(den_lcm);
        content = gcd(content, scaled.get_num());
    }
    if (content == 0) content = 1;
    Rational factor = Rational(den_lcm) / Rational(content);
    // canonical representative of the scalar class: leading (first stored,
    // i.e. degrevlex-greatest) coefficient positive
    if (p.terms().begin()->second * factor < 0) factor = -factor;
    return p * factor;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
    if (names.size() != p.nvars())
        throw std::invalid_argument("wrong number of variable names");
    if (p.is_zero()) return "0";
    // scale by the denominator lcm only: integer polynomials render exactly
    // as they are, so parsing the text back recovers them unchanged
    Polynomial q = p * Rational(denominator_lcm(p));
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : q.terms()) {
        Integer n = c.get_num();
        bool negative = n < 0;
        Integer mag = negative ? Integer(-n) : n;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        bool printed = false;
        if (mag != 1 || m.is_one()) {
            out << mag.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            if (m[i] == 0) continue;
            if (printed) out << "*";
            out << names[i];
            if (m[i] > 1) out << "^" << m[i];
            printed = true;
        }
    }
    return out.str();
}

}  // namespace stratmorse
