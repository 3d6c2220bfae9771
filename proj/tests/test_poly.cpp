#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "stratmorse/parse.hpp"
#include "stratmorse/polynomial.hpp"
#include "stratmorse/rational.hpp"

using namespace stratmorse;

namespace {

const std::vector<std::string> XYZ = {"x", "y", "z"};

Polynomial P(const std::string& text) { return parse_polynomial(text, XYZ); }

std::string S(const Polynomial& p) { return to_string(p, XYZ); }

// uniform random polynomial: up to max_terms terms of degree <= max_deg,
// integer coefficients in [-5, 5]
Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, std::uint32_t max_deg,
                       std::size_t max_terms) {
    Polynomial p(nvars);
    std::size_t nterms = rng() % (max_terms + 1);
    for (std::size_t t = 0; t < nterms; ++t) {
        std::vector<std::uint32_t> exps(nvars, 0);
        std::uint32_t budget = max_deg;
        for (std::size_t i = 0; i < nvars; ++i) {
            exps[i] = static_cast<std::uint32_t>(rng() % (budget + 1));
            budget -= exps[i];
        }
        long c = static_cast<long>(rng() % 11) - 5;
        if (c != 0) p.add_term(Monomial(exps), make_rational(c, 1));
    }
    return p;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(rational_from_string("-3/6") == make_rational(-1, 2));
    CHECK(to_string(make_rational(7, 1)) == "7");
    CHECK(to_string(make_rational(-2, 3)) == "-2/3");
    CHECK(rational_pow(make_rational(2, 3), 3) == make_rational(8, 27));
    CHECK(rational_pow(make_rational(5, 1), 0) == 1);
}

TEST_CASE("monomial arithmetic") {
    Monomial x = Monomial::variable(3, 0);
    Monomial y2 = Monomial::variable(3, 1, 2);
    Monomial xy2 = x * y2;
    CHECK(xy2.degree() == 3);
    CHECK(x.divides(xy2));
    CHECK_FALSE(xy2.divides(x));
    CHECK(xy2.divide_exact(x) == y2);
    CHECK(Monomial::lcm(x, y2) == xy2);
    CHECK(Monomial(3).is_one());
    CHECK_FALSE(x.is_one());
}

TEST_CASE("sum and difference of parsed polynomials") {
    CHECK(P("(x + y) + (x - y)") == P("2*x"));
    CHECK(P("x + y") - P("x + y") == Polynomial::zero(3));
    CHECK(S(P("(x + y) + (x - y)")) == "2*x");
}

TEST_CASE("product expands exactly") {
    CHECK(P("(x - z)*(x + z)") == P("x^2 - z^2"));
    CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
    CHECK(S(P("x*z^2 - y^2")) == "x*z^2 - y^2");
}

TEST_CASE("derivatives") {
    CHECK(P("x*z^2 - y^2").derivative(1) == P("-2*y"));
    CHECK(P("x + 2*z").derivative(0) == Polynomial::constant(3, 1));
    CHECK(P("y^2 - (x - z)^2").derivative(2) == P("2*(x - z)"));
    CHECK(P("5").derivative(0).is_zero());
}

TEST_CASE("evaluate at rational points") {
    std::vector<Rational> pt = {make_rational(1, 1), make_rational(0, 1), make_rational(2, 1)};
    CHECK(P("x + 2*z").evaluate(pt) == 5);
    CHECK(P("x*z^2 - y^2").evaluate(pt) == 4);
    std::vector<Rational> half = {make_rational(1, 2), make_rational(1, 3),
                                  make_rational(0, 1)};
    CHECK(P("x^2 + y").evaluate(half) == make_rational(7, 12));
}

TEST_CASE("substitute single variables") {
    // the cusp parametrization kills y^2 - x^3
    Polynomial cusp = P("y^2 - x^3");
    Polynomial t3 = P("z^3");  // reuse z as the parameter
    Polynomial t2 = P("z^2");
    CHECK(cusp.substitute(1, t3).substitute(0, t2).is_zero());
    CHECK(P("x*z^2 - y^2").substitute(0, Polynomial::zero(3)) == P("-y^2"));
}

TEST_CASE("compose as simultaneous substitution") {
    std::vector<std::string> t = {"t"};
    std::vector<Polynomial> images = {parse_polynomial("t^2", t), parse_polynomial("t^3", t),
                                      parse_polynomial("t^2", t)};
    // x = z on this curve, so y^2 - (x - z)^2 pulls back to t^6
    CHECK(P("y^2 - (x - z)^2").compose(images) == parse_polynomial("t^6", t));
    CHECK(P("x - z").compose(images).is_zero());
}

TEST_CASE("canonical rendering") {
    CHECK(S(Polynomial::zero(3)) == "0");
    CHECK(S(P("y^2 - (x - z)^2")) == "-x^2 + y^2 + 2*x*z - z^2");
    // positive rescaling clears denominators but never flips sign
    CHECK(S(P("1/2*x + 1/3")) == "3*x + 2");
    CHECK(S(P("-1/2*x - 1/3")) == "-3*x - 2");
    CHECK(S(P("x + 2*z")) == "x + 2*z");
}

TEST_CASE("integer_normalized picks the positive-leading representative") {
    Polynomial p = P("-x^2 + y");
    Polynomial n = integer_normalized(p);
    CHECK(n == P("x^2 - y"));
    CHECK(integer_normalized(n) == n);
    CHECK(integer_normalized(P("4*x - 6*y")) == P("2*x - 3*y"));
}

TEST_CASE("parse round trip") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        Polynomial p = random_poly(rng, 3, 6, 8);
        CHECK(parse_polynomial(to_string(p, XYZ), XYZ) == p);
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 400; ++i) {
        Polynomial a = random_poly(rng, 3, 4, 5);
        Polynomial b = random_poly(rng, 3, 4, 5);
        Polynomial c = random_poly(rng, 3, 4, 5);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + Polynomial::zero(3) == a);
        CHECK(a * Polynomial::constant(3, 1) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("Leibniz rule on random pairs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_poly(rng, 3, 5, 6);
        Polynomial b = random_poly(rng, 3, 5, 6);
        std::size_t v = rng() % 3;
        CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
}

TEST_CASE("evaluate is a ring homomorphism") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        Polynomial a = random_poly(rng, 3, 4, 5);
        Polynomial b = random_poly(rng, 3, 4, 5);
        std::vector<Rational> pt;
        for (int j = 0; j < 3; ++j)
            pt.push_back(make_rational(static_cast<long>(rng() % 7) - 3,
                                       static_cast<long>(1 + rng() % 3)));
        CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
        CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    }
}

TEST_CASE("degree and linear form classification") {
    CHECK(P("x + 2*z").is_linear_form());
    CHECK_FALSE(P("x + 1").is_linear_form());
    CHECK_FALSE(P("x*y").is_linear_form());
    CHECK_FALSE(Polynomial::zero(3).is_linear_form());
    CHECK(P("x^2*y + z").total_degree() == 3);
    CHECK(Polynomial::zero(3).total_degree() == 0);
}

TEST_CASE("times_term matches multiplication by a monomial term") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(rng, 3, 4, 5);
        std::vector<std::uint32_t> exps = {static_cast<std::uint32_t>(rng() % 3),
                                           static_cast<std::uint32_t>(rng() % 3),
                                           static_cast<std::uint32_t>(rng() % 3)};
        Monomial m(exps);
        Rational c = make_rational(static_cast<long>(rng() % 9) - 4, 1);
        CHECK(a.times_term(m, c) == a * Polynomial::term(m, c));
    }
}
