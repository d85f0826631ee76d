#include "gkm/basis.hpp"
#include "gkm/errors.hpp"
#include "gkm/fixtures.hpp"
#include "gkm/io.hpp"
#include "gkm/moment_graph.hpp"
#include "gkm/parse.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

using namespace gkm;

namespace {

MomentGraph two_chain(const std::vector<std::string>& ids, Character chi, Covector lambda) {
    return MomentGraph(2, {"a0", "a1"}, ids, {{0, 1, chi}}, lambda);
}

Polynomial poly1(std::string_view text) {
    return parse_polynomial(text, std::vector<std::string>{"t"});
}

} // namespace

TEST_CASE("orientation points along the covector") {
    MomentGraph g = fixtures::projective_space(1);
    CHECK(g.head(0) == 1);
    CHECK(g.tail(0) == 0);

    auto in = g.in_edges(1);
    REQUIRE(in.size() == 1);
    CHECK(in[0].edge == 0);
    CHECK(in[0].neighbor == 0);
    CHECK(in[0].tangent == LinearForm({1, -1}));
    CHECK(g.in_edges(0).empty());

    CHECK(g.tangent_at(0, 0) == LinearForm({-1, 1}));
    CHECK(g.tangent_at(0, 1) == LinearForm({1, -1}));
}

TEST_CASE("in-edge tangents pair positively on every fixture") {
    for (const auto& g : testing::all_fixtures()) {
        for (int v = 0; v < g->vertex_count(); ++v)
            for (const auto& ie : g->in_edges(v)) CHECK(g->covector().pair(ie.tangent) > 0);
        int total = 0;
        for (int v = 0; v < g->vertex_count(); ++v) total += g->in_degree(v);
        CHECK(total == static_cast<int>(g->edges().size()));
    }
}

TEST_CASE("cell counts per dimension") {
    CHECK(fixtures::point().betti() == std::vector<int>{1});
    CHECK(fixtures::projective_space(2).betti() == std::vector<int>{1, 1, 1});
    CHECK(fixtures::projective_space(4).betti() == std::vector<int>{1, 1, 1, 1, 1});
    CHECK(fixtures::flag_s3().betti() == std::vector<int>{1, 2, 2, 1});
    CHECK(fixtures::weighted_p2().betti() == std::vector<int>{1, 1, 1});

    CHECK(fixtures::projective_space(3).poincare() == poly1("1 + t + t^2 + t^3"));
    CHECK(fixtures::flag_s3().poincare() == poly1("1 + 2*t + 2*t^2 + t^3"));

    for (const auto& g : testing::all_fixtures()) {
        auto b = g->betti();
        CHECK(std::accumulate(b.begin(), b.end(), 0) == g->vertex_count());
    }
}

TEST_CASE("product graphs multiply cell counts") {
    MomentGraph p1 = fixtures::projective_space(1);
    MomentGraph p2 = fixtures::projective_space(2);

    MomentGraph p1p1 = fixtures::product_graph(p1, p1);
    CHECK(p1p1.vertex_count() == 4);
    CHECK(p1p1.edges().size() == 4);
    CHECK(p1p1.betti() == std::vector<int>{1, 2, 1});
    CHECK(p1p1.vars() == std::vector<std::string>{"a0_1", "a1_1", "a0_2", "a1_2"});
    CHECK(p1p1.find_vertex("p1xp0").has_value());

    MomentGraph p1p2 = fixtures::product_graph(p1, p2);
    CHECK(p1p2.poincare() == p1.poincare() * p2.poincare());
    CHECK(fixtures::product_graph(p2, p2).poincare() == p2.poincare() * p2.poincare());
    CHECK(fixtures::product_graph(fixtures::flag_s3(), p1).poincare() ==
          fixtures::flag_s3().poincare() * p1.poincare());

    MomentGraph with_point = fixtures::product_graph(p2, fixtures::point());
    CHECK(with_point.betti() == p2.betti());
    CHECK(with_point.vertex_count() == 3);
}

TEST_CASE("filtration order refines the orientation") {
    MomentGraph p3 = fixtures::projective_space(3);
    CHECK(p3.filtration_order() == std::vector<int>{0, 1, 2, 3});

    MomentGraph flag = fixtures::flag_s3();
    CHECK(flag.filtration_order() == std::vector<int>{0, 1, 2, 3, 4, 5});

    for (const auto& g : testing::all_fixtures()) {
        const auto& order = g->filtration_order();
        for (int pos = 0; pos < g->vertex_count(); ++pos) {
            CHECK(g->vertex_at_position(pos) == order[static_cast<std::size_t>(pos)]);
            CHECK(g->filtration_position(order[static_cast<std::size_t>(pos)]) == pos);
        }
        for (std::size_t e = 0; e < g->edges().size(); ++e)
            CHECK(g->filtration_position(g->tail(static_cast<int>(e))) <
                  g->filtration_position(g->head(static_cast<int>(e))));
    }
}

TEST_CASE("negating the covector reverses the flow") {
    for (const auto& g : testing::all_fixtures()) {
        MomentGraph r = g->with_negated_covector();
        for (int v = 0; v < g->vertex_count(); ++v) {
            CHECK(r.in_degree(v) == g->out_degree(v));
            CHECK(r.out_degree(v) == g->in_degree(v));
        }
    }
    // Reversing the flow on projective space mirrors the cell dimensions.
    MomentGraph p2 = fixtures::projective_space(2).with_negated_covector();
    CHECK(p2.filtration_order() == std::vector<int>{2, 1, 0});
    CHECK(p2.betti() == std::vector<int>{1, 1, 1});
}

TEST_CASE("stored order disagreeing with the flow is reported but tolerated") {
    MomentGraph g = two_chain({"p1", "p0"}, LinearForm({1, -1}), Covector{{1, 0}});
    const auto& report = g.validate();
    CHECK_FALSE(report.ok());
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].kind == ValidationIssue::Kind::OrderViolation);
    CHECK_NOTHROW(g.require_orientable());
    CHECK(g.filtration_order() == std::vector<int>{1, 0});
    CHECK(g.vertex_id(g.vertex_at_position(0)) == "p0");
    CHECK(g.betti() == std::vector<int>{1, 1});
}

TEST_CASE("directed cycles block the filtration") {
    MomentGraph g(2, {"a0", "a1"}, {"a", "b", "c"},
                  {{0, 1, LinearForm({-1, 0})},
                   {1, 2, LinearForm({-1, 0})},
                   {2, 0, LinearForm({-1, 0})}},
                  Covector{{1, 0}});
    const auto& report = g.validate();
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].kind == ValidationIssue::Kind::Cycle);
    CHECK_THROWS_AS(g.filtration_order(), GraphError);
    CHECK_THROWS_AS(g.require_orientable(), GraphError);
}

TEST_CASE("covector orthogonal to an edge character is flagged") {
    MomentGraph g = two_chain({"p0", "p1"}, LinearForm({0, 1}), Covector{{1, 0}});
    const auto& report = g.validate();
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].kind == ValidationIssue::Kind::Genericity);
    CHECK(report.issues[0].edge == 0);
    CHECK(g.head(0) == -1);
    CHECK_THROWS_AS(g.require_orientable(), GraphError);
}

TEST_CASE("self loops are flagged") {
    MomentGraph g(2, {"a0", "a1"}, {"p0", "p1"},
                  {{0, 0, LinearForm({1, -1})}, {0, 1, LinearForm({-1, 1})}}, Covector{{1, 0}});
    const auto& report = g.validate();
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].kind == ValidationIssue::Kind::SelfLoop);
    CHECK(report.issues[0].edge == 0);
    CHECK(report.issues[0].vertex == 0);
    CHECK_THROWS_AS(g.require_orientable(), GraphError);
}

TEST_CASE("construction rejects malformed data") {
    std::vector<std::string> vars{"a0", "a1"};
    std::vector<std::string> ids{"p0", "p1"};
    Covector lambda{{1, 0}};
    std::vector<Edge> edge{{0, 1, LinearForm({-1, 1})}};

    CHECK_THROWS_AS(MomentGraph(0, {}, ids, {}, Covector{{}}), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, {"a0"}, ids, edge, lambda), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, vars, ids, edge, Covector{{1}}), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, vars, {}, {}, lambda), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, vars, {"p0", ""}, {}, lambda), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, vars, {"p0", "p0"}, {}, lambda), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, {"a0", "a0"}, ids, edge, lambda), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, vars, ids, {{0, 2, LinearForm({-1, 1})}}, lambda), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, vars, ids, {{0, 1, LinearForm({-1, 1, 0})}}, lambda),
                    GraphError);
    CHECK_THROWS_AS(MomentGraph(2, vars, ids, edge, lambda, {{"px", Rational(1)}}), GraphError);
    CHECK_THROWS_AS(MomentGraph(2, vars, ids, edge, lambda, {{"p0", Rational(0)}}), GraphError);

    MomentGraph g = two_chain(ids, LinearForm({-1, 1}), lambda);
    CHECK(g.find_vertex("p1") == 1);
    CHECK_FALSE(g.find_vertex("q").has_value());
    CHECK_THROWS_AS(g.vertex_index("q"), GraphError);
    Covector lambda3{{1, 0}};
    CHECK_THROWS_AS(lambda3.pair(LinearForm({1, -1, 0})), ArgumentError);
}

TEST_CASE("proportional in-edge characters obstruct flow-up classes") {
    MomentGraph g(2, {"a0", "a1"}, {"a", "b", "c"},
                  {{0, 2, LinearForm({-1, 1})}, {1, 2, LinearForm({-2, 2})}}, Covector{{1, 0}});
    const auto& report = g.validate();
    CHECK(report.ok());
    CHECK_FALSE(report.basis_ready);
    CHECK(report.clashing_vertices == std::vector<int>{2});
    CHECK(g.basis_obstruction() == 2);
    CHECK_THROWS_AS(flowup_basis(testing::share(g)), ProportionalModuliError);

    for (const auto& g2 : testing::all_fixtures()) {
        CHECK(g2->validate().ok());
        CHECK(g2->validate().basis_ready);
        CHECK_FALSE(g2->basis_obstruction().has_value());
    }
}

TEST_CASE("level subgraphs are induced and keep the filtration order") {
    MomentGraph p2 = fixtures::projective_space(2);
    MomentGraph level2 = p2.subgraph(2);
    CHECK(level2.vertex_count() == 2);
    CHECK(level2.vertex_ids() == std::vector<std::string>{"p0", "p1"});
    REQUIRE(level2.edges().size() == 1);
    CHECK(level2.edges()[0].chi == LinearForm({-1, 1, 0}));
    CHECK(level2.rank() == 3);
    CHECK(level2.validate().ok());

    CHECK(p2.subgraph(3) == p2);
    CHECK(fixtures::flag_s3().subgraph(6) == fixtures::flag_s3());

    MomentGraph level1 = p2.subgraph(1);
    CHECK(level1.vertex_count() == 1);
    CHECK(level1.edges().empty());
    CHECK(level1.betti() == std::vector<int>{1});

    MomentGraph flag4 = fixtures::flag_s3().subgraph(4);
    CHECK(flag4.vertex_count() == 4);
    CHECK(flag4.betti() == std::vector<int>{1, 2, 1});

    CHECK_THROWS_AS(p2.subgraph(0), ArgumentError);
    CHECK_THROWS_AS(p2.subgraph(4), ArgumentError);
}

TEST_CASE("level subgraphs keep explicit scales") {
    MomentGraph w = fixtures::weighted_p2(true);
    CHECK(w.scale(2) == Rational(1, 2));
    MomentGraph top = w.subgraph(3);
    CHECK(top.scale(2) == Rational(1, 2));
    CHECK(top.explicit_scales().size() == 1);
    MomentGraph below = w.subgraph(2);
    CHECK(below.explicit_scales().empty());
    CHECK(below.scale(0) == Rational(1));
}

TEST_CASE("graph files round trip") {
    for (const auto& g : testing::all_fixtures()) {
        std::string text = io::graph_to_json(*g);
        CHECK(io::graph_from_json(text) == *g);
        CHECK(io::graph_to_json(io::graph_from_json(text)) == text);
    }
}

TEST_CASE("graph files reject malformed documents") {
    try {
        io::graph_from_json("{\n  \"rank\": 2,,\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 13);
    }
    CHECK_THROWS_WITH_AS(io::graph_from_json("{\"vertices\": [\"p\"]}"), "missing key 'vars'",
                         ParseError);
    CHECK_THROWS_AS(io::graph_from_json("[1, 2]"), ParseError);
    CHECK_THROWS_AS(io::graph_from_json(
                        R"({"rank": 1, "vars": ["a0", "a1"], "vertices": ["p"], "edges": [], "covector": [1, 0]})"),
                    ParseError);

    std::string text = io::graph_to_json(fixtures::projective_space(1));
    std::string bad = text;
    bad.replace(bad.find("\"covector\": ["), 13, "\"covector\": [9, ");
    CHECK_THROWS_AS(io::graph_from_json(bad), ParseError);
}
