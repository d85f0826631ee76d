#pragma once

#include "gkm/polynomial.hpp"
#include "gkm/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gkm {

// Curve labels are integer linear forms in the ambient variables.
using Character = LinearForm;

// Integer covector pairing against characters.  A generic choice orients
// every edge.
struct Covector {
    std::vector<std::int64_t> entries;

    std::int64_t pair(const Character& chi) const;
    Covector negated() const;

    friend bool operator==(const Covector& a, const Covector& b) { return a.entries == b.entries; }
};

// Undirected edge with its character.  chi is the tangent weight at u; the
// tangent weight at v is -chi.
struct Edge {
    int u;
    int v;
    Character chi;

    friend bool operator==(const Edge& a, const Edge& b) {
        return a.u == b.u && a.v == b.v && a.chi == b.chi;
    }
};

// An edge as seen from its head vertex.
struct InEdge {
    int edge;            // index into edges()
    int neighbor;        // the tail vertex
    Character tangent;   // tangent weight at the head, pairs positively
};

struct ValidationIssue {
    enum class Kind { Genericity, SelfLoop, Cycle, OrderViolation };
    Kind kind;
    std::string message;
    int edge = -1;   // offending edge index, if any
    int vertex = -1; // offending vertex index, if any
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    std::vector<int> in_degrees;          // by vertex index, oriented edges only
    bool basis_ready = true;              // in-edge characters pairwise non-proportional
    std::vector<int> clashing_vertices;   // vertices violating basis readiness

    bool ok() const { return issues.empty(); }
};

// Vertex-edge-character data of a space with finitely many fixed points and
// curves, together with a covector that orients the edges and induces the
// cell filtration.  Immutable after construction; all queries are pure.
class MomentGraph {
public:
    MomentGraph(int rank,
                std::vector<std::string> vars,
                std::vector<std::string> vertex_ids,
                std::vector<Edge> edges,
                Covector covector,
                std::map<std::string, Rational> scales = {});

    int rank() const { return rank_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int vertex_count() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& vertex_ids() const { return ids_; }
    const std::string& vertex_id(int v) const { return ids_[static_cast<std::size_t>(v)]; }
    std::optional<int> find_vertex(const std::string& id) const;
    int vertex_index(const std::string& id) const; // throws GraphError when absent
    const std::vector<Edge>& edges() const { return edges_; }
    const Covector& covector() const { return covector_; }
    const Rational& scale(int v) const { return scales_[static_cast<std::size_t>(v)]; }
    const std::map<std::string, Rational>& explicit_scales() const { return explicit_scales_; }

    // Structural checks run in the constructor.  Semantic findings (genericity,
    // self loops, cycles, stored order not refining the orientation) are
    // reported here rather than thrown.
    const ValidationReport& validate() const { return report_; }

    // Head of the directed edge, or -1 when the covector pairs to zero.
    int head(int edge) const { return head_[static_cast<std::size_t>(edge)]; }
    int tail(int edge) const { return tail_[static_cast<std::size_t>(edge)]; }
    // Tangent weight of an edge at one of its endpoints.
    Character tangent_at(int edge, int v) const;

    // Edges directed into v, in input edge order.
    std::vector<InEdge> in_edges(int v) const;
    int in_degree(int v) const;
    int out_degree(int v) const;

    // Vertex indices in filtration order: a topological order of the directed
    // graph with ties broken by position in the stored vertex list.  Requires
    // genericity and acyclicity but tolerates a stored order that does not
    // itself refine the orientation.
    const std::vector<int>& filtration_order() const;
    int filtration_position(int v) const;
    int vertex_at_position(int pos) const;

    std::vector<int> betti() const;     // entry k counts vertices of in-degree k
    Polynomial poincare() const;        // betti generating polynomial, rank 1

    // Induced graph on the first `level` vertices of the filtration order,
    // stored in that order.
    MomentGraph subgraph(int level) const;

    // Same data with the covector negated; orientation reverses.
    MomentGraph with_negated_covector() const;

    // First vertex whose in-edge characters contain a proportional pair, if any.
    std::optional<int> basis_obstruction() const;

    // Throws GraphError unless genericity and acyclicity hold.
    void require_orientable() const;

    friend bool operator==(const MomentGraph& a, const MomentGraph& b);

private:
    int rank_;
    std::vector<std::string> vars_;
    std::vector<std::string> ids_;
    std::map<std::string, int> index_;
    std::vector<Edge> edges_;
    Covector covector_;
    std::vector<Rational> scales_;
    std::map<std::string, Rational> explicit_scales_;

    std::vector<int> head_;
    std::vector<int> tail_;
    std::vector<std::vector<int>> in_by_vertex_;
    std::optional<std::vector<int>> filt_order_;
    std::vector<int> filt_pos_;
    ValidationReport report_;
};

using GraphPtr = std::shared_ptr<const MomentGraph>;

} // namespace gkm
