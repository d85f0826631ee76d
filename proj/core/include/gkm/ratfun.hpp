#pragma once

#include "gkm/congruence.hpp"
#include "gkm/polynomial.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gkm {

// Quotient of a polynomial by a product of linear forms, kept normalized:
// the denominator is a product of primitive forms with positive pivot
// coefficients, no factor divides the numerator, and zero is 0/1.  Every
// denominator arising in this toolkit factors into linear forms, which is
// what makes exact cancellation cheap.
class RationalFunction {
public:
    explicit RationalFunction(Polynomial num);

    // Factors need not be primitive; contents and signs are folded into the
    // numerator so the stored denominator is canonical.
    RationalFunction(Polynomial num, std::span<const std::pair<LinearForm, int>> den);
    RationalFunction(Polynomial num, const LinearForm& den, int multiplicity = 1);

    int rank() const { return num_.rank(); }
    const Polynomial& num() const { return num_; }
    Polynomial den() const; // expanded product
    const std::map<LinearForm, int>& den_factors() const { return den_; }

    bool is_polynomial() const { return den_.empty(); }
    std::optional<Polynomial> as_polynomial() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }

    // Normal forms are unique, so equality is structural.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str(std::span<const std::string> names) const;

private:
    void absorb_factor(const LinearForm& f, int multiplicity);
    void normalize();

    Polynomial num_;
    std::map<LinearForm, int> den_;
};

} // namespace gkm
