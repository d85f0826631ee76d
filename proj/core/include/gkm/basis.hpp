#pragma once

#include "gkm/cohomology.hpp"
#include "gkm/moment_graph.hpp"

#include <vector>

namespace gkm {

enum class BasisKind { FlowUp, Theta };

// Order in which the congruences at a new vertex are fed to the lifting
// step.  The flow-up classes may depend on it; the canonical basis does not.
enum class ResidueOrder { Forward, Reverse };

// Module basis indexed by filtration position.  Class p vanishes at the
// positions below p and equals the cell Euler class at position p; the
// constructor re-checks both along with the edge congruences.
class BasisFamily {
public:
    BasisFamily(GraphPtr graph, BasisKind kind, std::vector<CohomologyClass> classes);

    const GraphPtr& graph() const { return graph_; }
    BasisKind kind() const { return kind_; }
    int size() const { return static_cast<int>(classes_.size()); }
    const CohomologyClass& at(int position) const {
        return classes_[static_cast<std::size_t>(position)];
    }
    const std::vector<CohomologyClass>& classes() const { return classes_; }

    // Polynomial coefficients a with c == sum of a[p] * class p.  Peels one
    // filtration level at a time via local indices; a class outside the span
    // of the family surfaces as NonPolynomialIndexError.
    std::vector<Polynomial> expand(const CohomologyClass& c) const;

    // Expansion of class i times class j.  The leading coefficients, below
    // position max(i, j), always vanish and are checked.
    std::vector<Polynomial> structure_constants(int i, int j) const;

private:
    GraphPtr graph_;
    BasisKind kind_;
    std::vector<CohomologyClass> classes_;
};

// Class on the level subgraph that is zero below the top vertex and the cell
// Euler class there.  `position` is a filtration position; the level is
// position + 1.
CohomologyClass tau_class(const GraphPtr& graph, int position);

// Extends a class on the first k filtration vertices of `ambient` to the
// first k+1 by lifting the congruences along the in-edges of the next vertex.
// A vertex with no in-edges receives zero.
CohomologyClass extend_class(const GraphPtr& ambient, const CohomologyClass& c,
                             ResidueOrder order);

// Flow-up classes, one per filtration position, built by repeated extension
// of the level classes.
BasisFamily flowup_basis(GraphPtr graph, ResidueOrder order = ResidueOrder::Forward);

// Canonical classes: local index delta against the filtration levels.  Built
// from the flow-up classes by eliminating the higher local indices; the
// result does not depend on the residue order used along the way.
BasisFamily theta_basis(GraphPtr graph, ResidueOrder order = ResidueOrder::Forward);

} // namespace gkm
