#pragma once

#include "gkm/polynomial.hpp"

#include <optional>
#include <span>

namespace gkm {

// Canonical representative of p modulo the ideal generated by a linear form.
// The pivot variable of the form is eliminated by substitution, so the result
// never mentions it, and p minus the result is divisible by the form.
Polynomial reduce_mod(const Polynomial& p, const LinearForm& chi);

// Exact quotient p / chi, or nullopt when chi does not divide p.  Divisibility
// here is insensitive to scaling: 2*x1 divides x1 with quotient 1/2.
std::optional<Polynomial> divide_linear(const Polynomial& p, const LinearForm& chi);

// Exact quotient a / b over the rationals, or nullopt when b does not divide a.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

struct Congruence {
    Polynomial residue;
    LinearForm modulus;
};

// Simultaneous lift: returns g with g == residue_k modulo modulus_k for every
// entry.  Moduli must be pairwise non-proportional.  Built by iterated
// substitution: g starts as the first residue and picks up a correction
// divisible by all earlier moduli at each later one, so earlier congruences
// are never disturbed.  Throws ProportionalModuliError on a proportional pair
// and InconsistentCongruencesError when no simultaneous solution exists.
Polynomial crt_lift(std::span<const Congruence> congruences);

} // namespace gkm
