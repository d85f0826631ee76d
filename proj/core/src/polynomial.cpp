#include "gkm/polynomial.hpp"

#include "gkm/errors.hpp"

#include <numeric>
#include <sstream>

namespace gkm {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

LinearForm::LinearForm(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw ArgumentError("linear form with no variables");
    bool nonzero = false;
    for (auto v : c_) nonzero = nonzero || v != 0;
    if (!nonzero) throw ArgumentError("zero linear form");
}

int LinearForm::pivot() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1; // unreachable, the form is nonzero
}

std::int64_t LinearForm::content() const {
    std::int64_t g = 0;
    for (auto v : c_) g = std::gcd(g, v);
    return g;
}

LinearForm LinearForm::primitive() const {
    std::int64_t g = content();
    if (c_[static_cast<std::size_t>(pivot())] < 0) g = -g;
    std::vector<std::int64_t> out(c_);
    for (auto& v : out) v /= g;
    return LinearForm(std::move(out));
}

LinearForm LinearForm::negated() const {
    std::vector<std::int64_t> out(c_);
    for (auto& v : out) v = -v;
    return LinearForm(std::move(out));
}

bool LinearForm::proportional_to(const LinearForm& o) const {
    if (rank() != o.rank()) return false;
    return primitive() == o.primitive();
}

Polynomial LinearForm::to_polynomial() const {
    Polynomial p(rank());
    for (int i = 0; i < rank(); ++i)
        if (c_[static_cast<std::size_t>(i)] != 0)
            p += Polynomial::variable(rank(), i) * Rational(c_[static_cast<std::size_t>(i)]);
    return p;
}

std::string LinearForm::str(std::span<const std::string> names) const {
    return to_polynomial().str(names);
}

Polynomial::Polynomial(int rank) : rank_(rank) {
    if (rank < 0) throw ArgumentError("negative rank");
}

Polynomial Polynomial::constant(int rank, const Rational& c) {
    Polynomial p(rank);
    p.add_term(Monomial(static_cast<std::size_t>(rank), 0), c);
    return p;
}

Polynomial Polynomial::variable(int rank, int index, unsigned exponent) {
    if (index < 0 || index >= rank) throw ArgumentError("variable index out of range");
    Monomial m(static_cast<std::size_t>(rank), 0);
    m[static_cast<std::size_t>(index)] = exponent;
    return monomial(rank, std::move(m), Rational(1));
}

Polynomial Polynomial::monomial(int rank, Monomial m, const Rational& c) {
    if (static_cast<int>(m.size()) != rank) throw ArgumentError("monomial length differs from rank");
    Polynomial p(rank);
    p.add_term(m, c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const {
    return coefficient(Monomial(static_cast<std::size_t>(rank_), 0));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::algebraic_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    unsigned d = total_degree(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (total_degree(m) != d) return std::nullopt;
    return 2 * static_cast<int>(d);
}

std::map<unsigned, Polynomial> Polynomial::coefficients_in(int var) const {
    if (var < 0 || var >= rank_) throw ArgumentError("variable index out of range");
    std::map<unsigned, Polynomial> out;
    for (const auto& [m, c] : terms_) {
        unsigned e = m[static_cast<std::size_t>(var)];
        Monomial rest = m;
        rest[static_cast<std::size_t>(var)] = 0;
        auto [it, inserted] = out.try_emplace(e, rank_);
        it->second.add_term(rest, c);
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial acc = constant(rank_, Rational(1));
    for (unsigned i = 0; i < e; ++i) acc *= *this;
    return acc;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(rank_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    require_same_rank(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    require_same_rank(*this, o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    require_same_rank(*this, o);
    Polynomial out(rank_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m(ma);
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            out.add_term(m, ca * cb);
        }
    }
    terms_ = std::move(out.terms_);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::require_same_rank(const Polynomial& a, const Polynomial& b) {
    if (a.rank_ != b.rank_) throw ArgumentError("rank mismatch in polynomial arithmetic");
}

std::string Polynomial::str(std::span<const std::string> names) const {
    if (static_cast<int>(names.size()) != rank_)
        throw ArgumentError("variable name list does not match rank");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        Rational mag = c.abs();
        std::string vars;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (m[i] > 1) vars += "^" + std::to_string(m[i]);
        }
        if (vars.empty()) {
            out << mag.str();
        } else if (mag.is_one()) {
            out << vars;
        } else {
            out << mag.str() << "*" << vars;
        }
    }
    return out.str();
}

} // namespace gkm
