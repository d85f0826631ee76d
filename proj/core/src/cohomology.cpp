#include "gkm/cohomology.hpp"

#include "gkm/congruence.hpp"
#include "gkm/errors.hpp"

namespace gkm {

CohomologyClass::CohomologyClass(GraphPtr graph, std::vector<Polynomial> values)
    : graph_(std::move(graph)), values_(std::move(values)) {
    if (!graph_) throw ArgumentError("class requires a graph");
    if (values_.size() != static_cast<std::size_t>(graph_->vertex_count()))
        throw ArgumentError("value count does not match vertex count");
    for (const Polynomial& p : values_)
        if (p.rank() != graph_->rank())
            throw ArgumentError("vertex value rank does not match graph rank");
}

CohomologyClass CohomologyClass::zero(GraphPtr graph) {
    if (!graph) throw ArgumentError("class requires a graph");
    std::vector<Polynomial> vals(static_cast<std::size_t>(graph->vertex_count()),
                                 Polynomial::constant(graph->rank(), Rational(0)));
    return CohomologyClass(std::move(graph), std::move(vals));
}

CohomologyClass CohomologyClass::constant(GraphPtr graph, const Rational& c) {
    if (!graph) throw ArgumentError("class requires a graph");
    std::vector<Polynomial> vals(static_cast<std::size_t>(graph->vertex_count()),
                                 Polynomial::constant(graph->rank(), c));
    return CohomologyClass(std::move(graph), std::move(vals));
}

CohomologyClass CohomologyClass::unit(GraphPtr graph) {
    return constant(std::move(graph), Rational(1));
}

const Polynomial& CohomologyClass::at(const std::string& id) const {
    return values_[static_cast<std::size_t>(graph_->vertex_index(id))];
}

bool CohomologyClass::is_zero() const {
    for (const Polynomial& p : values_)
        if (!p.is_zero()) return false;
    return true;
}

GkmReport CohomologyClass::check_gkm() const {
    GkmReport report;
    const auto& edges = graph_->edges();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const Edge& ed = edges[e];
        if (ed.u == ed.v) continue;
        Polynomial diff =
            values_[static_cast<std::size_t>(ed.u)] - values_[static_cast<std::size_t>(ed.v)];
        if (!divide_linear(diff, ed.chi)) {
            std::string message = "difference across edge " + std::to_string(e) + " ('" +
                                  graph_->vertex_id(ed.u) + "', '" + graph_->vertex_id(ed.v) +
                                  "') is not divisible by the edge character";
            report.violations.push_back({static_cast<int>(e), std::move(diff), std::move(message)});
        }
    }
    return report;
}

std::optional<int> CohomologyClass::homogeneous_degree() const {
    std::optional<int> deg;
    for (const Polynomial& p : values_) {
        if (p.is_zero()) continue;
        std::optional<int> d = p.homogeneous_degree();
        if (!d) return std::nullopt;
        if (deg && *deg != *d) return std::nullopt;
        deg = d;
    }
    if (!deg) return 0;
    return deg;
}

CohomologyClass CohomologyClass::restrict(int level) const {
    MomentGraph sub = graph_->subgraph(level);
    const auto& order = graph_->filtration_order();
    std::vector<Polynomial> vals;
    vals.reserve(static_cast<std::size_t>(level));
    for (int pos = 0; pos < level; ++pos)
        vals.push_back(values_[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])]);
    return CohomologyClass(std::make_shared<MomentGraph>(std::move(sub)), std::move(vals));
}

CohomologyClass CohomologyClass::rehost(GraphPtr graph) const {
    if (!graph) throw ArgumentError("class requires a graph");
    if (!(*graph == *graph_)) throw ArgumentError("rehost requires a structurally equal graph");
    return CohomologyClass(std::move(graph), values_);
}

CohomologyClass CohomologyClass::operator-() const {
    std::vector<Polynomial> vals;
    vals.reserve(values_.size());
    for (const Polynomial& p : values_) vals.push_back(-p);
    return CohomologyClass(graph_, std::move(vals));
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& o) {
    require_same_graph(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& o) {
    require_same_graph(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

CohomologyClass& CohomologyClass::operator*=(const CohomologyClass& o) {
    require_same_graph(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
    return *this;
}

CohomologyClass CohomologyClass::scaled(const Polynomial& p) const {
    if (p.rank() != graph_->rank())
        throw ArgumentError("scaling polynomial rank does not match graph rank");
    std::vector<Polynomial> vals;
    vals.reserve(values_.size());
    for (const Polynomial& v : values_) vals.push_back(v * p);
    return CohomologyClass(graph_, std::move(vals));
}

CohomologyClass CohomologyClass::scaled(const Rational& c) const {
    std::vector<Polynomial> vals;
    vals.reserve(values_.size());
    for (const Polynomial& v : values_) vals.push_back(v * c);
    return CohomologyClass(graph_, std::move(vals));
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
    return *a.graph_ == *b.graph_ && a.values_ == b.values_;
}

void CohomologyClass::require_same_graph(const CohomologyClass& o) const {
    if (!(*graph_ == *o.graph_))
        throw ArgumentError("classes live on different graphs");
}

} // namespace gkm
