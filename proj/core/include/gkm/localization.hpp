#pragma once

#include "gkm/cohomology.hpp"
#include "gkm/moment_graph.hpp"
#include "gkm/ratfun.hpp"

#include <utility>
#include <vector>

namespace gkm {

// Product of the negated tangent weights at a vertex, kept both expanded and
// in factored form.  value == scale * product of primitive factors.
struct EulerClass {
    Polynomial value;
    std::vector<std::pair<LinearForm, int>> factors;
    Rational scale;
};

// Euler class of the cell at v: vertex scale times the product of the negated
// tangents along the edges directed into v.
EulerClass cell_euler(const MomentGraph& g, int v);

// Euler class of the tangent space at v inside the level subgraph: vertex
// scale times the product of the negated tangents along every incident edge
// whose other endpoint also lies within the level.  At the last vertex of the
// level this equals the cell Euler class.
EulerClass space_euler(const MomentGraph& g, int level, int v);

// Localization sum over the first `level` filtration vertices.  The level
// piece is the union of the closed cells of its maximal vertices; a vertex
// lying on several of those components contributes one term per component,
// with that component's tangent edges in the denominator.  On levels with a
// single maximal vertex this is exactly the sum of value / space_euler.
// Assembled over a common denominator built from the factored linear forms,
// so the result is in normal form.
RationalFunction integrate(const CohomologyClass& c, int level);
RationalFunction integrate(const CohomologyClass& c);

// Integral over the level subgraph when it is a polynomial; otherwise throws
// NonPolynomialIndexError carrying the level.
Polynomial local_index(const CohomologyClass& c, int level);

} // namespace gkm
