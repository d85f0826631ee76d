#include "gkm/ratfun.hpp"

#include "gkm/errors.hpp"

namespace gkm {

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)) {}

RationalFunction::RationalFunction(Polynomial num, std::span<const std::pair<LinearForm, int>> den)
    : num_(std::move(num)) {
    for (const auto& [f, m] : den) absorb_factor(f, m);
    normalize();
}

RationalFunction::RationalFunction(Polynomial num, const LinearForm& den, int multiplicity)
    : num_(std::move(num)) {
    absorb_factor(den, multiplicity);
    normalize();
}

void RationalFunction::absorb_factor(const LinearForm& f, int multiplicity) {
    if (multiplicity < 0) throw ArgumentError("negative denominator multiplicity");
    if (multiplicity == 0) return;
    if (f.rank() != num_.rank()) throw ArgumentError("rank mismatch in rational function");
    LinearForm prim = f.primitive();
    // f = s * prim with s a nonzero rational; move s into the numerator.
    std::int64_t s = f.content();
    if (f.coeff(f.pivot()) < 0) s = -s;
    Rational scale = Rational(1, s);
    for (int i = 0; i < multiplicity; ++i) num_ *= scale;
    den_[prim] += multiplicity;
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = divide_linear(num_, it->first);
            if (!q) break;
            num_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? den_.erase(it) : std::next(it);
    }
}

Polynomial RationalFunction::den() const {
    Polynomial d = Polynomial::constant(num_.rank(), Rational(1));
    for (const auto& [f, m] : den_) d *= f.to_polynomial().pow(static_cast<unsigned>(m));
    return d;
}

std::optional<Polynomial> RationalFunction::as_polynomial() const {
    if (!den_.empty()) return std::nullopt;
    return num_;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (rank() != o.rank()) throw ArgumentError("rank mismatch in rational function arithmetic");
    // Common denominator by factor-wise least common multiple.
    std::map<LinearForm, int> lcm = den_;
    for (const auto& [f, m] : o.den_) {
        auto [it, inserted] = lcm.try_emplace(f, m);
        if (!inserted && it->second < m) it->second = m;
    }
    auto cofactor = [&](const std::map<LinearForm, int>& d) {
        Polynomial c = Polynomial::constant(num_.rank(), Rational(1));
        for (const auto& [f, m] : lcm) {
            int have = 0;
            if (auto it = d.find(f); it != d.end()) have = it->second;
            c *= f.to_polynomial().pow(static_cast<unsigned>(m - have));
        }
        return c;
    };
    num_ = num_ * cofactor(den_) + o.num_ * cofactor(o.den_);
    den_ = std::move(lcm);
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (rank() != o.rank()) throw ArgumentError("rank mismatch in rational function arithmetic");
    num_ *= o.num_;
    for (const auto& [f, m] : o.den_) den_[f] += m;
    normalize();
    return *this;
}

std::string RationalFunction::str(std::span<const std::string> names) const {
    if (den_.empty()) return num_.str(names);
    return "(" + num_.str(names) + ") / (" + den().str(names) + ")";
}

} // namespace gkm
