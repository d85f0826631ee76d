#include "gkm/rational.hpp"

#include "gkm/errors.hpp"

namespace gkm {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view text) {
    if (text.empty()) throw ArgumentError("empty rational literal");
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    bool seen_digit = false, seen_slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c >= '0' && c <= '9') {
            seen_digit = true;
        } else if (c == '/' && seen_digit && !seen_slash) {
            seen_slash = true;
            seen_digit = false;
        } else {
            throw ArgumentError("bad rational literal '" + std::string(text) + "'");
        }
    }
    if (!seen_digit) throw ArgumentError("bad rational literal '" + std::string(text) + "'");
    std::string_view digits = text[0] == '+' ? text.substr(1) : text;
    mpq_class v;
    if (v.set_str(std::string(digits), 10) != 0)
        throw ArgumentError("bad rational literal '" + std::string(text) + "'");
    if (v.get_den() == 0) throw ArgumentError("rational with zero denominator");
    v.canonicalize();
    return Rational(std::move(v));
}

Rational Rational::operator-() const {
    return Rational(mpq_class(-v_));
}

Rational& Rational::operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArgumentError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw ArgumentError("reciprocal of zero");
    return Rational(mpq_class(1) / v_);
}

std::string Rational::str() const {
    return v_.get_str();
}

} // namespace gkm
