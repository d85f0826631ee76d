#pragma once

#include "gkm/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gkm {

// Exponent vector, one entry per ambient variable.
using Monomial = std::vector<std::uint32_t>;

unsigned total_degree(const Monomial& m);

// Graded lexicographic order with earlier variables ranked higher.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

class Polynomial;

// Nonzero integer linear form in the ambient variables.  Doubles as the
// character label of a curve and as a congruence modulus.
class LinearForm {
public:
    explicit LinearForm(std::vector<std::int64_t> coeffs);

    int rank() const { return static_cast<int>(c_.size()); }
    std::int64_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }

    // Lowest variable index with a nonzero coefficient.
    int pivot() const;

    // gcd of the coefficients, always positive.
    std::int64_t content() const;

    // Same line through the origin: content 1 and positive pivot coefficient.
    LinearForm primitive() const;

    LinearForm negated() const;
    bool proportional_to(const LinearForm& o) const;

    Polynomial to_polynomial() const;
    std::string str(std::span<const std::string> names) const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.c_ == b.c_; }
    friend bool operator<(const LinearForm& a, const LinearForm& b) { return a.c_ < b.c_; }

private:
    std::vector<std::int64_t> c_;
};

// Multivariate polynomial with rational coefficients.  Terms are stored in
// graded lexicographic order with no zero coefficients, so representation,
// iteration order, and printing are all canonical.
class Polynomial {
public:
    explicit Polynomial(int rank);
    static Polynomial constant(int rank, const Rational& c);
    static Polynomial variable(int rank, int index, unsigned exponent = 1);
    static Polynomial monomial(int rank, Monomial m, const Rational& c);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rational, GrlexLess>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const;
    bool is_constant() const;

    // Highest total degree among the terms, -1 for the zero polynomial.
    int algebraic_degree() const;
    // Degrees reported by the toolkit are doubled: a linear form sits in
    // degree 2, matching the grading of the spaces these values live in.
    int degree() const { return 2 * algebraic_degree(); }
    std::optional<int> homogeneous_degree() const; // doubled as well

    // Split by the exponent of one variable; that variable is zeroed in the
    // returned coefficient polynomials.
    std::map<unsigned, Polynomial> coefficients_in(int var) const;

    Polynomial pow(unsigned e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }

    // Canonical text: terms in descending graded lexicographic order with
    // explicit signs, rationals as p/q, powers as ^k.  Round-trips through
    // the expression parser.
    std::string str(std::span<const std::string> names) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    static void require_same_rank(const Polynomial& a, const Polynomial& b);

    int rank_;
    std::map<Monomial, Rational, GrlexLess> terms_;
};

} // namespace gkm
