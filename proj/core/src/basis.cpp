#include "gkm/basis.hpp"

#include "gkm/congruence.hpp"
#include "gkm/errors.hpp"
#include "gkm/localization.hpp"

#include <algorithm>
#include <string>

namespace gkm {

BasisFamily::BasisFamily(GraphPtr graph, BasisKind kind, std::vector<CohomologyClass> classes)
    : graph_(std::move(graph)), kind_(kind), classes_(std::move(classes)) {
    if (!graph_) throw ArgumentError("basis requires a graph");
    graph_->require_orientable();
    if (classes_.size() != static_cast<std::size_t>(graph_->vertex_count()))
        throw ArgumentError("basis must hold one class per vertex");

    for (std::size_t p = 0; p < classes_.size(); ++p) {
        const CohomologyClass& c = classes_[p];
        if (!(*c.graph() == *graph_))
            throw ArgumentError("basis class " + std::to_string(p) + " lives on a different graph");
        for (std::size_t q = 0; q < p; ++q) {
            int v = graph_->vertex_at_position(static_cast<int>(q));
            if (!c.at(v).is_zero())
                throw ComputeError("basis class " + std::to_string(p) +
                                   " does not vanish at position " + std::to_string(q));
        }
        int top = graph_->vertex_at_position(static_cast<int>(p));
        if (!(c.at(top) == cell_euler(*graph_, top).value))
            throw ComputeError("basis class " + std::to_string(p) +
                               " does not restrict to the cell Euler class at its own position");
        GkmReport r = c.check_gkm();
        if (!r.ok())
            throw ComputeError("basis class " + std::to_string(p) +
                               " violates an edge congruence: " + r.violations.front().message);
    }
}

std::vector<Polynomial> BasisFamily::expand(const CohomologyClass& c) const {
    if (!(*c.graph() == *graph_)) throw ArgumentError("class lives on a different graph");
    std::vector<Polynomial> coeffs;
    coeffs.reserve(classes_.size());
    CohomologyClass r = c;
    for (int p = 0; p < size(); ++p) {
        Polynomial a = local_index(r, p + 1);
        r -= classes_[static_cast<std::size_t>(p)].scaled(a);
        coeffs.push_back(std::move(a));
    }
    if (!r.is_zero()) throw ComputeError("expansion did not reproduce the class");
    return coeffs;
}

std::vector<Polynomial> BasisFamily::structure_constants(int i, int j) const {
    if (i < 0 || i >= size() || j < 0 || j >= size())
        throw ArgumentError("basis position out of range");
    std::vector<Polynomial> coeffs = expand(at(i) * at(j));
    for (int k = 0; k < std::max(i, j); ++k)
        if (!coeffs[static_cast<std::size_t>(k)].is_zero())
            throw ComputeError("product of basis classes " + std::to_string(i) + " and " +
                               std::to_string(j) + " has a nonzero coefficient at position " +
                               std::to_string(k));
    return coeffs;
}

CohomologyClass tau_class(const GraphPtr& graph, int position) {
    if (!graph) throw ArgumentError("class requires a graph");
    graph->require_orientable();
    if (position < 0 || position >= graph->vertex_count())
        throw ArgumentError("filtration position out of range");

    auto sub = std::make_shared<MomentGraph>(graph->subgraph(position + 1));
    std::vector<Polynomial> vals(static_cast<std::size_t>(position + 1),
                                 Polynomial::constant(graph->rank(), Rational(0)));
    vals[static_cast<std::size_t>(position)] = cell_euler(*sub, position).value;
    return CohomologyClass(std::move(sub), std::move(vals));
}

CohomologyClass extend_class(const GraphPtr& ambient, const CohomologyClass& c,
                             ResidueOrder order) {
    if (!ambient) throw ArgumentError("extension requires an ambient graph");
    ambient->require_orientable();
    int k = c.graph()->vertex_count();
    if (k >= ambient->vertex_count())
        throw ArgumentError("class already covers the whole graph");
    if (!(*c.graph() == ambient->subgraph(k)))
        throw ArgumentError("class does not live on a level subgraph of the ambient graph");

    int next = ambient->vertex_at_position(k);
    std::vector<Congruence> congruences;
    for (const InEdge& ie : ambient->in_edges(next)) {
        int pos = ambient->filtration_position(ie.neighbor);
        congruences.push_back({c.values()[static_cast<std::size_t>(pos)], ie.tangent});
    }
    if (order == ResidueOrder::Reverse)
        std::reverse(congruences.begin(), congruences.end());

    Polynomial lifted = congruences.empty() ? Polynomial::constant(ambient->rank(), Rational(0))
                                            : crt_lift(congruences);

    auto sub = std::make_shared<MomentGraph>(ambient->subgraph(k + 1));
    std::vector<Polynomial> vals = c.values();
    vals.push_back(std::move(lifted));
    return CohomologyClass(std::move(sub), std::move(vals));
}

BasisFamily flowup_basis(GraphPtr graph, ResidueOrder order) {
    if (!graph) throw ArgumentError("basis requires a graph");
    graph->require_orientable();
    int m = graph->vertex_count();

    std::vector<CohomologyClass> classes;
    classes.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        CohomologyClass c = tau_class(graph, i);
        for (int level = i + 1; level < m; ++level) c = extend_class(graph, c, order);

        std::vector<Polynomial> by_vertex(static_cast<std::size_t>(m),
                                          Polynomial::constant(graph->rank(), Rational(0)));
        for (int v = 0; v < m; ++v)
            by_vertex[static_cast<std::size_t>(v)] =
                c.values()[static_cast<std::size_t>(graph->filtration_position(v))];
        classes.emplace_back(graph, std::move(by_vertex));
    }
    return BasisFamily(graph, BasisKind::FlowUp, std::move(classes));
}

BasisFamily theta_basis(GraphPtr graph, ResidueOrder order) {
    BasisFamily flow = flowup_basis(graph, order);
    int m = flow.size();

    std::vector<CohomologyClass> classes;
    classes.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        CohomologyClass theta = flow.at(i);
        for (int q = i + 1; q < m; ++q) {
            Polynomial a = local_index(theta, q + 1);
            if (!a.is_zero()) theta -= flow.at(q).scaled(a);
        }
        classes.push_back(std::move(theta));
    }
    return BasisFamily(std::move(graph), BasisKind::Theta, std::move(classes));
}

} // namespace gkm
