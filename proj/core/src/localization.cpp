#include "gkm/localization.hpp"

#include "gkm/errors.hpp"

#include <map>
#include <string>
#include <utility>

namespace gkm {

namespace {

// Accumulates a product of negated tangent weights in factored form: primitive
// linear forms with multiplicities, plus the rational scale split off by
// making each factor primitive.
struct FoldedProduct {
    std::map<LinearForm, int> factors;
    Rational scale = Rational(1);

    void push(const Character& tangent) {
        LinearForm neg = tangent.negated();
        LinearForm prim = neg.primitive();
        Rational s(neg.content());
        if (neg.coeff(neg.pivot()) < 0) s = -s;
        scale = scale * s;
        ++factors[prim];
    }
};

EulerClass product_of_negated_tangents(const MomentGraph& g, int v,
                                       const std::vector<Character>& tangents) {
    EulerClass out{Polynomial::constant(g.rank(), Rational(1)), {}, Rational(1)};
    FoldedProduct fold;
    for (const Character& t : tangents) {
        fold.push(t);
        out.value *= t.negated().to_polynomial();
    }
    out.value *= g.scale(v);
    out.scale = g.scale(v) * fold.scale;
    out.factors.assign(fold.factors.begin(), fold.factors.end());
    return out;
}

} // namespace

EulerClass cell_euler(const MomentGraph& g, int v) {
    g.require_orientable();
    if (v < 0 || v >= g.vertex_count()) throw ArgumentError("vertex index out of range");
    std::vector<Character> tangents;
    for (const InEdge& ie : g.in_edges(v)) tangents.push_back(ie.tangent);
    return product_of_negated_tangents(g, v, tangents);
}

EulerClass space_euler(const MomentGraph& g, int level, int v) {
    g.require_orientable();
    if (level < 1 || level > g.vertex_count())
        throw ArgumentError("level must lie between 1 and the vertex count");
    if (v < 0 || v >= g.vertex_count()) throw ArgumentError("vertex index out of range");
    if (g.filtration_position(v) >= level)
        throw ArgumentError("vertex lies outside the level");

    std::vector<Character> tangents;
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        int other;
        if (ed.u == v)
            other = ed.v;
        else if (ed.v == v)
            other = ed.u;
        else
            continue;
        if (g.filtration_position(other) < level)
            tangents.push_back(g.tangent_at(static_cast<int>(e), v));
    }
    return product_of_negated_tangents(g, v, tangents);
}

// The filtered piece at a given level need not be irreducible: it is the union
// of the closed cells of its maximal vertices (those with no outgoing edge
// inside the level).  A vertex contributes one localization term per maximal
// vertex reachable from it; the term's denominator multiplies the negated
// tangents of the edges lying in that component (all in-edges, plus the
// out-edges leading toward that maximal vertex).  On a level with a single
// maximal vertex every incident edge participates and the denominator is
// exactly space_euler.
RationalFunction integrate(const CohomologyClass& c, int level) {
    const MomentGraph& g = *c.graph();
    g.require_orientable();
    if (level < 1 || level > g.vertex_count())
        throw ArgumentError("level must lie between 1 and the vertex count");

    // Out-edges whose both endpoints sit inside the level, keyed by the tail's
    // filtration position; each entry carries the head position and the
    // tangent weight at the tail.
    std::vector<std::vector<std::pair<int, Character>>> out(
        static_cast<std::size_t>(level));
    const auto& edges = g.edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int tail_pos = g.filtration_position(g.tail(static_cast<int>(e)));
        int head_pos = g.filtration_position(g.head(static_cast<int>(e)));
        if (tail_pos >= level || head_pos >= level) continue;
        out[static_cast<std::size_t>(tail_pos)].push_back(
            {head_pos, g.tangent_at(static_cast<int>(e), g.tail(static_cast<int>(e)))});
    }

    // Directed reachability between positions inside the level; edges always
    // point from lower to higher position, so a single backward sweep fills
    // the table.
    std::vector<std::vector<bool>> reach(
        static_cast<std::size_t>(level),
        std::vector<bool>(static_cast<std::size_t>(level), false));
    for (int p = level - 1; p >= 0; --p) {
        auto& row = reach[static_cast<std::size_t>(p)];
        row[static_cast<std::size_t>(p)] = true;
        for (const auto& [head_pos, tangent] : out[static_cast<std::size_t>(p)]) {
            const auto& head_row = reach[static_cast<std::size_t>(head_pos)];
            for (int q = 0; q < level; ++q)
                if (head_row[static_cast<std::size_t>(q)]) row[static_cast<std::size_t>(q)] = true;
        }
    }

    RationalFunction total(Polynomial::constant(g.rank(), Rational(0)));
    for (int p = 0; p < level; ++p) {
        int v = g.vertex_at_position(p);
        FoldedProduct base;
        for (const InEdge& ie : g.in_edges(v)) base.push(ie.tangent);
        const auto& row = reach[static_cast<std::size_t>(p)];
        for (int q = 0; q < level; ++q) {
            if (!row[static_cast<std::size_t>(q)] || !out[static_cast<std::size_t>(q)].empty())
                continue;
            FoldedProduct branch = base;
            for (const auto& [head_pos, tangent] : out[static_cast<std::size_t>(p)])
                if (reach[static_cast<std::size_t>(head_pos)][static_cast<std::size_t>(q)])
                    branch.push(tangent);
            std::vector<std::pair<LinearForm, int>> factors(branch.factors.begin(),
                                                            branch.factors.end());
            total += RationalFunction(c.at(v) * (g.scale(v) * branch.scale).reciprocal(),
                                      factors);
        }
    }
    return total;
}

RationalFunction integrate(const CohomologyClass& c) {
    return integrate(c, c.graph()->vertex_count());
}

Polynomial local_index(const CohomologyClass& c, int level) {
    RationalFunction r = integrate(c, level);
    std::optional<Polynomial> p = r.as_polynomial();
    if (!p)
        throw NonPolynomialIndexError(level, "localization sum at level " + std::to_string(level) +
                                                 " is not a polynomial");
    return std::move(*p);
}

} // namespace gkm
