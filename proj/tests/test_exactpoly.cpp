#include "gkm/congruence.hpp"
#include "gkm/errors.hpp"
#include "gkm/parse.hpp"
#include "gkm/polynomial.hpp"
#include "gkm/ratfun.hpp"
#include "gkm/rational.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <string>
#include <vector>

using namespace gkm;
using gkm::testing::Rng;

namespace {

const std::vector<std::string> XY{"x1", "x2"};
const std::vector<std::string> XYZ{"x1", "x2", "x3"};

Polynomial P2(std::string_view text) { return parse_polynomial(text, XY); }
Polynomial P3(std::string_view text) { return parse_polynomial(text, XYZ); }

LinearForm lf(std::vector<std::int64_t> c) { return LinearForm(std::move(c)); }

} // namespace

TEST_CASE("rational literals and canonical form") {
    CHECK(Rational::from_string("7").str() == "7");
    CHECK(Rational::from_string("-3/6").str() == "-1/2");
    CHECK(Rational::from_string("+2/4").str() == "1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational().is_zero());
    CHECK(Rational(0).str() == "0");

    CHECK_THROWS_AS(Rational::from_string(""), ArgumentError);
    CHECK_THROWS_AS(Rational::from_string("1/"), ArgumentError);
    CHECK_THROWS_AS(Rational::from_string("/2"), ArgumentError);
    CHECK_THROWS_AS(Rational::from_string("1/0"), ArgumentError);
    CHECK_THROWS_AS(Rational::from_string("1.5"), ArgumentError);
    CHECK_THROWS_AS(Rational(1, 0), ArgumentError);
}

TEST_CASE("rational arithmetic") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational a = testing::random_rational(rng);
        Rational b = testing::random_rational(rng);
        Rational c = testing::random_rational(rng);
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
    CHECK(Rational(-3, 4).abs() == Rational(3, 4));
    CHECK(Rational(3, 4).reciprocal() == Rational(4, 3));
    CHECK(Rational(2, 3) < Rational(3, 4));
    CHECK_THROWS_AS(Rational(0).reciprocal(), ArgumentError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), ArgumentError);
}

TEST_CASE("polynomial addition and multiplication") {
    CHECK(P2("x1 + x2") + P2("-x2") == P2("x1"));
    CHECK(P2("(x1 - x2)*(x1 + x2)") == P2("x1^2 - x2^2"));

    Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        Polynomial p = testing::random_polynomial(rng, 2, 3, 6);
        CHECK((Polynomial(2) * p).is_zero());
        CHECK(p - p == Polynomial(2));
    }

    Polynomial wrong_rank(3);
    CHECK_THROWS_AS(P2("x1") + wrong_rank, ArgumentError);
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(31);
    for (int i = 0; i < 60; ++i) {
        Polynomial a = testing::random_polynomial(rng, 3, 3, 8);
        Polynomial b = testing::random_polynomial(rng, 3, 3, 8);
        Polynomial c = testing::random_polynomial(rng, 3, 3, 8);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("degrees are reported doubled") {
    CHECK(Polynomial::variable(2, 0).degree() == 2);
    CHECK(P2("x1^2 + x1*x2").degree() == 4);
    CHECK(Polynomial(2).degree() == -2); // zero polynomial: algebraic degree -1

    CHECK(P2("x1^2 + x1*x2").homogeneous_degree() == 4);
    CHECK(P2("x1 + x2^2").homogeneous_degree() == std::nullopt);
    CHECK(Polynomial(2).homogeneous_degree() == 0);
}

TEST_CASE("term access and splitting") {
    Polynomial p = P2("x1^2*x2 + 3*x1 + 5");
    CHECK(p.term_count() == 3);
    CHECK(p.constant_term() == Rational(5));
    CHECK_FALSE(p.is_constant());
    CHECK(p.coefficient(Monomial{2, 1}) == Rational(1));
    CHECK(p.coefficient(Monomial{1, 1}) == Rational(0));

    auto split = p.coefficients_in(0);
    REQUIRE(split.size() == 3);
    CHECK(split.at(0) == P2("5"));
    CHECK(split.at(1) == P2("3"));
    CHECK(split.at(2) == P2("x2"));

    CHECK(P2("x1 + x2").pow(3) == P2("(x1+x2)*(x1+x2)*(x1+x2)"));
    CHECK(P2("x1 + x2").pow(0) == P2("1"));
}

TEST_CASE("canonical printing in descending graded order") {
    CHECK(P2("-x1 + 3/2*x2^2 - (x1 - x2)*(x1 + x2)").str(XY) == "-x1^2 + 5/2*x2^2 - x1");
    CHECK(P2("x2 + x1").str(XY) == "x1 + x2");
    CHECK(P2("x1 - x1").str(XY) == "0");

    Rng rng(37);
    for (int i = 0; i < 40; ++i) {
        Polynomial p = testing::random_polynomial(rng, 2, 4, 6);
        CHECK(parse_polynomial(p.str(XY), XY) == p);
    }
}

TEST_CASE("expression parser rejects malformed input with positions") {
    auto check_error = [](std::string_view text, int line, int column) {
        try {
            parse_polynomial(text, XY);
            FAIL("expected a parse error for '", text, "'");
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK(e.column() == column);
        }
    };
    check_error("x1 + @", 1, 6);
    check_error("x1 +\n* x2", 2, 1);
    check_error("x1 ^ x2", 1, 6);
    check_error("y9", 1, 1);
    check_error("x1 x2", 1, 4);
    check_error("(x1 + x2", 1, 9);
    check_error("1/0", 1, 3);

    CHECK(parse_polynomial("2^3", XY) == P2("8"));
    CHECK(parse_polynomial(" -  x1 ", XY) == -P2("x1"));
    CHECK(is_identifier("a0"));
    CHECK_FALSE(is_identifier("0a"));
}

TEST_CASE("linear form normal forms") {
    LinearForm f = lf({-2, 0, 4});
    CHECK(f.pivot() == 0);
    CHECK(f.content() == 2);
    CHECK(f.primitive() == lf({1, 0, -2}));
    CHECK(f.negated() == lf({2, 0, -4}));
    CHECK(f.proportional_to(lf({1, 0, -2})));
    CHECK_FALSE(f.proportional_to(lf({1, 0, 2})));
    CHECK(f.to_polynomial() == P3("-2*x1 + 4*x3"));
    CHECK(f.str(XYZ) == "-2*x1 + 4*x3");
    CHECK_THROWS_AS(lf({0, 0}), ArgumentError);
    CHECK_THROWS_AS(lf({}), ArgumentError);
}

TEST_CASE("reduction modulo a linear form") {
    CHECK(reduce_mod(P2("x1^2"), lf({1, -1})) == P2("x2^2"));
    CHECK(reduce_mod(P2("x1*x2"), lf({1, 0})) == Polynomial(2));
    CHECK(reduce_mod(P2("2*x1 + 3*x2"), lf({2, 3})) == Polynomial(2));

    // The reduced representative never mentions the pivot variable, and the
    // discarded part is an exact multiple of the form.
    Rng rng(41);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = testing::random_polynomial(rng, 3, 3, 6);
        LinearForm chi = testing::random_linear_form(rng, 3);
        Polynomial r = reduce_mod(p, chi);
        for (const auto& [m, c] : r.terms()) CHECK(m[static_cast<std::size_t>(chi.pivot())] == 0);
        CHECK(divide_linear(p - r, chi).has_value());

        Polynomial q = testing::random_polynomial(rng, 3, 3, 6);
        CHECK(reduce_mod(p * q, chi) == reduce_mod(p, chi) * reduce_mod(q, chi));
    }
}

TEST_CASE("division by linear forms ignores content") {
    auto q = divide_linear(P2("x1^2 - x2^2"), lf({1, -1}));
    REQUIRE(q.has_value());
    CHECK(*q == P2("x1 + x2"));

    CHECK_FALSE(divide_linear(P2("x2"), lf({1, 0})).has_value());

    auto half = divide_linear(P2("x1^2"), lf({2, 0}));
    REQUIRE(half.has_value());
    CHECK(*half == P2("1/2*x1"));
}

TEST_CASE("exact polynomial division") {
    Rng rng(43);
    for (int i = 0; i < 50; ++i) {
        Polynomial a = testing::random_polynomial(rng, 2, 3, 5);
        Polynomial b = testing::random_polynomial(rng, 2, 2, 4);
        if (b.is_zero()) continue;
        auto q = divide_exact(a * b, b);
        REQUIRE(q.has_value());
        CHECK(*q == a);
    }
    CHECK_FALSE(divide_exact(P2("x1 + 1"), P2("x1")).has_value());
    CHECK_THROWS_AS(divide_exact(P2("x1"), Polynomial(2)), ArgumentError);
}

TEST_CASE("congruence lifting reproduces every residue") {
    Polynomial g = crt_lift(std::vector<Congruence>{
        {Polynomial(2), lf({1, 0})},
        {P2("x2"), lf({1, -1})},
    });
    CHECK(g == P2("x1"));

    CHECK(crt_lift(std::vector<Congruence>{{P2("x1 + 5"), lf({0, 1})}}) == P2("x1 + 5"));

    CHECK(crt_lift(std::vector<Congruence>{
              {Polynomial(2), lf({1, 0})},
              {Polynomial(2), lf({0, 1})},
              {Polynomial(2), lf({1, -1})},
          }) == Polynomial(2));
}

TEST_CASE("congruence lifting on random consistent systems") {
    Rng rng(47);
    for (int i = 0; i < 40; ++i) {
        // Residues reduced from one hidden polynomial are always consistent.
        Polynomial hidden = testing::random_polynomial(rng, 3, 3, 5);
        std::vector<Congruence> congruences;
        std::vector<LinearForm> moduli{lf({1, 0, 0}), lf({0, 1, -1}), lf({1, 1, 1}),
                                       lf({1, -2, 0})};
        for (const auto& chi : moduli) congruences.push_back({reduce_mod(hidden, chi), chi});

        Polynomial g = crt_lift(congruences);
        for (const auto& [residue, chi] : congruences)
            CHECK(reduce_mod(g - residue, chi).is_zero());

        // A different processing order changes the lift only by a multiple
        // of the product of all the moduli.
        std::vector<Congruence> reversed(congruences.rbegin(), congruences.rend());
        Polynomial g2 = crt_lift(reversed);
        Polynomial product = P3("1");
        for (const auto& chi : moduli) product *= chi.to_polynomial();
        if (g == g2)
            CHECK(true);
        else
            CHECK(divide_exact(g - g2, product).has_value());
    }
}

TEST_CASE("congruence lifting failure modes") {
    CHECK_THROWS_AS(crt_lift(std::vector<Congruence>{
                        {Polynomial(2), lf({1, 0})},
                        {P2("x2"), lf({2, 0})},
                    }),
                    ProportionalModuliError);

    // Residues 0 mod x1 and 0 mod x2 force a double root at the origin,
    // which no polynomial congruent to 1 mod x1-x2 can have.
    CHECK_THROWS_AS(crt_lift(std::vector<Congruence>{
                        {Polynomial(2), lf({1, 0})},
                        {Polynomial(2), lf({0, 1})},
                        {P2("1"), lf({1, -1})},
                    }),
                    InconsistentCongruencesError);

    CHECK_THROWS_AS(crt_lift(std::vector<Congruence>{}), ArgumentError);
}

TEST_CASE("rational function cancellation") {
    RationalFunction a(P2("1"), lf({1, -1}));
    RationalFunction b(P2("1"), lf({-1, 1}));
    CHECK((a + b).num().is_zero());
    CHECK((a + b).is_polynomial());

    RationalFunction c(P2("x1"), lf({1, 0}));
    CHECK(c.as_polynomial() == P2("1"));

    RationalFunction d = RationalFunction(P2("1"), lf({1, 0})) + RationalFunction(P2("1"), lf({0, 1}));
    CHECK(d.num() == P2("x1 + x2"));
    CHECK(d.den() == P2("x1*x2"));
    CHECK_FALSE(d.as_polynomial().has_value());
}

TEST_CASE("rational function denominators stay primitive") {
    RationalFunction f(P2("x1"), lf({-2, 2}));
    REQUIRE(f.den_factors().size() == 1);
    CHECK(f.den_factors().begin()->first == lf({1, -1}));
    CHECK(f.den_factors().begin()->second == 1);
    CHECK(f.num() == P2("-1/2*x1"));

    // Multiplicities accumulate and cancel factor by factor.
    RationalFunction g(P2("x1^2 - x2^2"), lf({1, -1}), 2);
    CHECK(g.den_factors().begin()->second == 1);
    CHECK(g.num() == P2("x1 + x2"));
}

TEST_CASE("rational function arithmetic against cross multiplication") {
    Rng rng(53);
    for (int i = 0; i < 1000; ++i) {
        Polynomial a = testing::random_polynomial(rng, 2, 2, 3);
        Polynomial c = testing::random_polynomial(rng, 2, 2, 3);
        LinearForm f1 = testing::random_linear_form(rng, 2);
        LinearForm f2 = testing::random_linear_form(rng, 2);
        std::vector<std::pair<LinearForm, int>> db{{f1, 1}};
        std::vector<std::pair<LinearForm, int>> dd{{f2, 1}};
        RationalFunction x(a, db);
        RationalFunction y(c, dd);

        RationalFunction sum = x + y;
        Polynomial b = f1.to_polynomial();
        Polynomial d = f2.to_polynomial();
        CHECK(sum.num() * (b * d) == (a * d + c * b) * sum.den());

        RationalFunction prod = x * y;
        CHECK(prod.num() * (b * d) == (a * c) * prod.den());
    }
}

TEST_CASE("rational function normalization is idempotent") {
    Rng rng(59);
    for (int i = 0; i < 100; ++i) {
        Polynomial a = testing::random_polynomial(rng, 2, 3, 4);
        LinearForm f = testing::random_linear_form(rng, 2);
        RationalFunction x(a, f, 2);
        std::vector<std::pair<LinearForm, int>> factors(x.den_factors().begin(),
                                                        x.den_factors().end());
        RationalFunction again(x.num(), factors);
        CHECK(again == x);

        CHECK((x - x).num().is_zero());
        CHECK((-x + x).num().is_zero());
    }
}
