#include "gkm/congruence.hpp"

#include "gkm/errors.hpp"

#include <string>

namespace gkm {

Polynomial reduce_mod(const Polynomial& p, const LinearForm& chi) {
    if (p.rank() != chi.rank()) throw ArgumentError("rank mismatch in reduction");
    int k = chi.pivot();
    // Solve chi = 0 for the pivot variable and substitute.
    Polynomial rest = chi.to_polynomial() - Polynomial::variable(chi.rank(), k) * Rational(chi.coeff(k));
    Polynomial sub = rest * Rational(-1, 1) * Rational(chi.coeff(k)).reciprocal();
    Polynomial out(p.rank());
    for (const auto& [e, part] : p.coefficients_in(k))
        out += part * sub.pow(e);
    return out;
}

std::optional<Polynomial> divide_linear(const Polynomial& p, const LinearForm& chi) {
    if (p.rank() != chi.rank()) throw ArgumentError("rank mismatch in division");
    return divide_exact(p, chi.to_polynomial());
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
    if (a.rank() != b.rank()) throw ArgumentError("rank mismatch in division");
    if (b.is_zero()) throw ArgumentError("division by zero polynomial");
    Polynomial q(a.rank());
    Polynomial r = a;
    const auto& lead_b = *b.terms().rbegin();
    while (!r.is_zero()) {
        const auto& lead_r = *r.terms().rbegin();
        Monomial m(lead_r.first);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] < lead_b.first[i]) return std::nullopt;
            m[i] -= lead_b.first[i];
        }
        Polynomial t = Polynomial::monomial(a.rank(), std::move(m), lead_r.second / lead_b.second);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial crt_lift(std::span<const Congruence> congruences) {
    if (congruences.empty()) throw ArgumentError("empty congruence list");
    int rank = congruences.front().modulus.rank();
    for (const auto& c : congruences)
        if (c.modulus.rank() != rank || c.residue.rank() != rank)
            throw ArgumentError("rank mismatch in congruence list");
    for (std::size_t i = 0; i < congruences.size(); ++i)
        for (std::size_t j = i + 1; j < congruences.size(); ++j)
            if (congruences[i].modulus.proportional_to(congruences[j].modulus))
                throw ProportionalModuliError(
                    "congruence moduli " + std::to_string(i) + " and " + std::to_string(j) +
                    " are proportional");

    Polynomial g = congruences.front().residue;
    Polynomial product = congruences.front().modulus.to_polynomial();
    for (std::size_t k = 1; k < congruences.size(); ++k) {
        const auto& chi = congruences[k].modulus;
        Polynomial gap = reduce_mod(congruences[k].residue - g, chi);
        if (!gap.is_zero()) {
            // Reduction is a ring map, so the product of the earlier moduli
            // reduces to a nonzero polynomial here (no pair is proportional).
            Polynomial image = reduce_mod(product, chi);
            auto h = divide_exact(gap, image);
            if (!h)
                throw InconsistentCongruencesError(
                    "congruences admit no simultaneous lift at modulus " + std::to_string(k));
            g += product * *h;
        }
        product *= chi.to_polynomial();
    }
    return g;
}

} // namespace gkm
