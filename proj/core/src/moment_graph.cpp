#include "gkm/moment_graph.hpp"

#include "gkm/errors.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace gkm {

std::int64_t Covector::pair(const Character& chi) const {
    if (entries.size() != static_cast<std::size_t>(chi.rank()))
        throw ArgumentError("covector rank does not match character rank");
    std::int64_t s = 0;
    for (int i = 0; i < chi.rank(); ++i)
        s += entries[static_cast<std::size_t>(i)] * chi.coeff(i);
    return s;
}

Covector Covector::negated() const {
    Covector out;
    out.entries.reserve(entries.size());
    for (std::int64_t e : entries) out.entries.push_back(-e);
    return out;
}

MomentGraph::MomentGraph(int rank,
                         std::vector<std::string> vars,
                         std::vector<std::string> vertex_ids,
                         std::vector<Edge> edges,
                         Covector covector,
                         std::map<std::string, Rational> scales)
    : rank_(rank),
      vars_(std::move(vars)),
      ids_(std::move(vertex_ids)),
      edges_(std::move(edges)),
      covector_(std::move(covector)),
      explicit_scales_(std::move(scales)) {
    if (rank_ <= 0) throw GraphError("rank must be positive");
    if (vars_.size() != static_cast<std::size_t>(rank_))
        throw GraphError("variable list does not match rank");
    if (covector_.entries.size() != static_cast<std::size_t>(rank_))
        throw GraphError("covector does not match rank");
    if (ids_.empty()) throw GraphError("graph has no vertices");

    for (int v = 0; v < vertex_count(); ++v) {
        const std::string& id = ids_[static_cast<std::size_t>(v)];
        if (id.empty()) throw GraphError("vertex id must be nonempty");
        if (!index_.emplace(id, v).second)
            throw GraphError("duplicate vertex id '" + id + "'");
    }
    {
        std::set<std::string> seen;
        for (const std::string& name : vars_)
            if (name.empty() || !seen.insert(name).second)
                throw GraphError("variable names must be nonempty and distinct");
    }

    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u < 0 || ed.u >= vertex_count() || ed.v < 0 || ed.v >= vertex_count())
            throw GraphError("edge endpoint out of range");
        if (ed.chi.rank() != rank_)
            throw GraphError("edge character rank does not match graph rank");
    }

    for (const auto& [id, s] : explicit_scales_) {
        if (index_.find(id) == index_.end())
            throw GraphError("scale refers to unknown vertex '" + id + "'");
        if (s.is_zero()) throw GraphError("scale for vertex '" + id + "' is zero");
    }
    scales_.assign(static_cast<std::size_t>(vertex_count()), Rational(1));
    for (const auto& [id, s] : explicit_scales_)
        scales_[static_cast<std::size_t>(index_.at(id))] = s;

    // Orient edges by the covector and collect semantic findings.
    head_.assign(edges_.size(), -1);
    tail_.assign(edges_.size(), -1);
    in_by_vertex_.assign(static_cast<std::size_t>(vertex_count()), {});
    report_.in_degrees.assign(static_cast<std::size_t>(vertex_count()), 0);

    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u == ed.v) {
            report_.issues.push_back({ValidationIssue::Kind::SelfLoop,
                                      "edge " + std::to_string(e) + " joins vertex '" +
                                          ids_[static_cast<std::size_t>(ed.u)] + "' to itself",
                                      static_cast<int>(e), ed.u});
            continue;
        }
        std::int64_t p = covector_.pair(ed.chi);
        if (p == 0) {
            report_.issues.push_back({ValidationIssue::Kind::Genericity,
                                      "covector pairs to zero with the character of edge " +
                                          std::to_string(e),
                                      static_cast<int>(e), -1});
            continue;
        }
        // chi pairs positively: chi is the tangent at u, so the flow sinks
        // at u and the edge runs v -> u.
        int h = p > 0 ? ed.u : ed.v;
        int t = p > 0 ? ed.v : ed.u;
        head_[e] = h;
        tail_[e] = t;
        in_by_vertex_[static_cast<std::size_t>(h)].push_back(static_cast<int>(e));
        ++report_.in_degrees[static_cast<std::size_t>(h)];
    }

    bool orientable = std::none_of(report_.issues.begin(), report_.issues.end(), [](const auto& i) {
        return i.kind == ValidationIssue::Kind::Genericity ||
               i.kind == ValidationIssue::Kind::SelfLoop;
    });

    if (orientable) {
        // Kahn's algorithm; the min-heap on stored positions makes the result
        // canonical and keeps it aligned with the input order when that order
        // already refines the orientation.
        std::vector<int> remaining(report_.in_degrees.begin(), report_.in_degrees.end());
        std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
        for (int v = 0; v < vertex_count(); ++v)
            if (remaining[static_cast<std::size_t>(v)] == 0) ready.push(v);
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(vertex_count()));
        while (!ready.empty()) {
            int v = ready.top();
            ready.pop();
            order.push_back(v);
            for (std::size_t e = 0; e < edges_.size(); ++e)
                if (tail_[e] == v && --remaining[static_cast<std::size_t>(head_[e])] == 0)
                    ready.push(head_[e]);
        }
        if (order.size() == static_cast<std::size_t>(vertex_count())) {
            filt_order_ = std::move(order);
            filt_pos_.assign(static_cast<std::size_t>(vertex_count()), -1);
            for (int pos = 0; pos < vertex_count(); ++pos)
                filt_pos_[static_cast<std::size_t>((*filt_order_)[static_cast<std::size_t>(pos)])] =
                    pos;
            for (int pos = 0; pos < vertex_count(); ++pos) {
                int v = (*filt_order_)[static_cast<std::size_t>(pos)];
                if (v != pos) {
                    report_.issues.push_back(
                        {ValidationIssue::Kind::OrderViolation,
                         "stored vertex order places '" + ids_[static_cast<std::size_t>(pos)] +
                             "' at position " + std::to_string(pos) + " but the filtration puts '" +
                             ids_[static_cast<std::size_t>(v)] + "' there",
                         -1, v});
                    break;
                }
            }
        } else {
            report_.issues.push_back({ValidationIssue::Kind::Cycle,
                                      "directed edges contain a cycle; no filtration order exists",
                                      -1, -1});
        }
    }

    // A flow-up basis needs the in-edge characters at each vertex to be
    // pairwise non-proportional.
    for (int v = 0; v < vertex_count(); ++v) {
        const auto& in = in_by_vertex_[static_cast<std::size_t>(v)];
        bool clash = false;
        for (std::size_t a = 0; a + 1 < in.size() && !clash; ++a)
            for (std::size_t b = a + 1; b < in.size() && !clash; ++b)
                if (edges_[static_cast<std::size_t>(in[a])].chi.proportional_to(
                        edges_[static_cast<std::size_t>(in[b])].chi))
                    clash = true;
        if (clash) {
            report_.basis_ready = false;
            report_.clashing_vertices.push_back(v);
        }
    }
}

std::optional<int> MomentGraph::find_vertex(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

int MomentGraph::vertex_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw GraphError("unknown vertex id '" + id + "'");
    return it->second;
}

Character MomentGraph::tangent_at(int edge, int v) const {
    const Edge& ed = edges_[static_cast<std::size_t>(edge)];
    if (v == ed.u) return ed.chi;
    if (v == ed.v) return ed.chi.negated();
    throw ArgumentError("vertex is not an endpoint of the edge");
}

std::vector<InEdge> MomentGraph::in_edges(int v) const {
    std::vector<InEdge> out;
    for (int e : in_by_vertex_[static_cast<std::size_t>(v)])
        out.push_back({e, tail_[static_cast<std::size_t>(e)], tangent_at(e, v)});
    return out;
}

int MomentGraph::in_degree(int v) const {
    return static_cast<int>(in_by_vertex_[static_cast<std::size_t>(v)].size());
}

int MomentGraph::out_degree(int v) const {
    int d = 0;
    for (int t : tail_)
        if (t == v) ++d;
    return d;
}

void MomentGraph::require_orientable() const {
    for (const auto& issue : report_.issues)
        if (issue.kind != ValidationIssue::Kind::OrderViolation)
            throw GraphError(issue.message);
}

const std::vector<int>& MomentGraph::filtration_order() const {
    require_orientable();
    return *filt_order_;
}

int MomentGraph::filtration_position(int v) const {
    require_orientable();
    return filt_pos_[static_cast<std::size_t>(v)];
}

int MomentGraph::vertex_at_position(int pos) const {
    const auto& order = filtration_order();
    if (pos < 0 || pos >= vertex_count()) throw ArgumentError("filtration position out of range");
    return order[static_cast<std::size_t>(pos)];
}

std::vector<int> MomentGraph::betti() const {
    require_orientable();
    int top = 0;
    for (int v = 0; v < vertex_count(); ++v) top = std::max(top, in_degree(v));
    std::vector<int> b(static_cast<std::size_t>(top) + 1, 0);
    for (int v = 0; v < vertex_count(); ++v) ++b[static_cast<std::size_t>(in_degree(v))];
    return b;
}

Polynomial MomentGraph::poincare() const {
    std::vector<int> b = betti();
    Polynomial p = Polynomial::constant(1, Rational(0));
    for (std::size_t k = 0; k < b.size(); ++k) {
        Monomial m{static_cast<std::uint32_t>(k)};
        p += Polynomial::monomial(1, m, Rational(b[k]));
    }
    return p;
}

MomentGraph MomentGraph::subgraph(int level) const {
    const auto& order = filtration_order();
    if (level < 1 || level > vertex_count())
        throw ArgumentError("level must lie between 1 and the vertex count");

    std::vector<int> keep(order.begin(), order.begin() + level);
    std::vector<int> new_index(static_cast<std::size_t>(vertex_count()), -1);
    std::vector<std::string> ids;
    ids.reserve(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        new_index[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
        ids.push_back(ids_[static_cast<std::size_t>(keep[i])]);
    }

    std::vector<Edge> sub_edges;
    for (const Edge& ed : edges_) {
        int nu = new_index[static_cast<std::size_t>(ed.u)];
        int nv = new_index[static_cast<std::size_t>(ed.v)];
        if (nu >= 0 && nv >= 0) sub_edges.push_back({nu, nv, ed.chi});
    }

    std::map<std::string, Rational> sub_scales;
    for (int v : keep) {
        auto it = explicit_scales_.find(ids_[static_cast<std::size_t>(v)]);
        if (it != explicit_scales_.end()) sub_scales.insert(*it);
    }

    return MomentGraph(rank_, vars_, std::move(ids), std::move(sub_edges), covector_,
                       std::move(sub_scales));
}

MomentGraph MomentGraph::with_negated_covector() const {
    return MomentGraph(rank_, vars_, ids_, edges_, covector_.negated(), explicit_scales_);
}

std::optional<int> MomentGraph::basis_obstruction() const {
    if (report_.clashing_vertices.empty()) return std::nullopt;
    return report_.clashing_vertices.front();
}

bool operator==(const MomentGraph& a, const MomentGraph& b) {
    return a.rank_ == b.rank_ && a.vars_ == b.vars_ && a.ids_ == b.ids_ && a.edges_ == b.edges_ &&
           a.covector_ == b.covector_ && a.scales_ == b.scales_;
}

} // namespace gkm
