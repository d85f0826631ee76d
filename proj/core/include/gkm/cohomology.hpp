#pragma once

#include "gkm/moment_graph.hpp"
#include "gkm/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gkm {

struct GkmViolation {
    int edge;
    Polynomial difference; // value at u minus value at v
    std::string message;
};

struct GkmReport {
    std::vector<GkmViolation> violations;
    bool ok() const { return violations.empty(); }
};

// A tuple of polynomials indexed by the vertices of a moment graph.  Members
// of the cohomology ring are exactly the tuples whose edge differences are
// divisible by the edge characters; check_gkm tests that.
class CohomologyClass {
public:
    CohomologyClass(GraphPtr graph, std::vector<Polynomial> values);

    static CohomologyClass zero(GraphPtr graph);
    static CohomologyClass constant(GraphPtr graph, const Rational& c);
    static CohomologyClass unit(GraphPtr graph);

    const GraphPtr& graph() const { return graph_; }
    const std::vector<Polynomial>& values() const { return values_; }
    const Polynomial& at(int v) const { return values_[static_cast<std::size_t>(v)]; }
    const Polynomial& at(const std::string& id) const;

    bool is_zero() const;

    GkmReport check_gkm() const;
    bool is_gkm() const { return check_gkm().ok(); }

    // Doubled degree when every nonzero vertex value is homogeneous of one
    // common algebraic degree; zero classes report degree 0.
    std::optional<int> homogeneous_degree() const;

    // Values over the first `level` filtration vertices, hosted on the level
    // subgraph.
    CohomologyClass restrict(int level) const;

    // Same values transplanted onto a structurally equal graph instance.
    CohomologyClass rehost(GraphPtr graph) const;

    CohomologyClass operator-() const;
    CohomologyClass& operator+=(const CohomologyClass& o);
    CohomologyClass& operator-=(const CohomologyClass& o);
    CohomologyClass& operator*=(const CohomologyClass& o);
    CohomologyClass scaled(const Polynomial& p) const;
    CohomologyClass scaled(const Rational& c) const;

    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
    friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
    friend CohomologyClass operator*(CohomologyClass a, const CohomologyClass& b) { return a *= b; }
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);
    friend bool operator!=(const CohomologyClass& a, const CohomologyClass& b) { return !(a == b); }

private:
    void require_same_graph(const CohomologyClass& o) const;

    GraphPtr graph_;
    std::vector<Polynomial> values_;
};

} // namespace gkm
