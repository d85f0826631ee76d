#include "gkm/io.hpp"

#include "gkm/errors.hpp"
#include "gkm/parse.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace gkm {
namespace io {

using nlohmann::ordered_json;

namespace {

std::pair<int, int> position_of_offset(const std::string& text, std::size_t offset) {
    int line = 1;
    int column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

ordered_json parse_document(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        auto [line, column] = position_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(line, column, e.what());
    }
}

const ordered_json& require_key(const ordered_json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(0, 0, std::string("missing key '") + key + "'");
    return *it;
}

std::vector<std::string> string_list(const ordered_json& node, const char* what) {
    if (!node.is_array()) throw ParseError(0, 0, std::string(what) + " must be an array");
    std::vector<std::string> out;
    for (const auto& item : node) {
        if (!item.is_string())
            throw ParseError(0, 0, std::string(what) + " entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

std::vector<std::int64_t> integer_list(const ordered_json& node, const char* what) {
    if (!node.is_array()) throw ParseError(0, 0, std::string(what) + " must be an array");
    std::vector<std::int64_t> out;
    for (const auto& item : node) {
        if (!item.is_number_integer())
            throw ParseError(0, 0, std::string(what) + " entries must be integers");
        out.push_back(item.get<std::int64_t>());
    }
    return out;
}

Rational rational_from_node(const ordered_json& node, const std::string& what) {
    if (node.is_number_integer()) return Rational(node.get<long>());
    if (node.is_string()) {
        try {
            return Rational::from_string(node.get<std::string>());
        } catch (const Error& e) {
            throw ParseError(0, 0, what + ": " + e.what());
        }
    }
    throw ParseError(0, 0, what + " must be an integer or a rational string");
}

Polynomial polynomial_from_node(const ordered_json& node, std::span<const std::string> vars,
                                const std::string& what) {
    if (!node.is_string()) throw ParseError(0, 0, what + " must be expression text");
    try {
        return parse_polynomial(node.get<std::string>(), vars);
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), what + ": " + e.what());
    }
}

ordered_json values_to_node(const CohomologyClass& c) {
    const MomentGraph& g = *c.graph();
    ordered_json values = ordered_json::object();
    for (int pos = 0; pos < g.vertex_count(); ++pos) {
        int v = g.vertex_at_position(pos);
        values[g.vertex_id(v)] = c.at(v).str(g.vars());
    }
    return values;
}

std::vector<Polynomial> values_from_node(const ordered_json& node, const MomentGraph& g) {
    if (!node.is_object()) throw ParseError(0, 0, "values must map vertex ids to expressions");
    std::vector<Polynomial> vals(static_cast<std::size_t>(g.vertex_count()),
                                 Polynomial::constant(g.rank(), Rational(0)));
    for (const auto& [id, expr] : node.items()) {
        auto v = g.find_vertex(id);
        if (!v) throw ParseError(0, 0, "values refer to unknown vertex '" + id + "'");
        vals[static_cast<std::size_t>(*v)] =
            polynomial_from_node(expr, g.vars(), "value at vertex '" + id + "'");
    }
    return vals;
}

} // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw ParseError(0, 0, "cannot read '" + path + "'");
    return std::move(buf).str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError(0, 0, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw ParseError(0, 0, "cannot write '" + path + "'");
}

MomentGraph graph_from_json(const std::string& text) {
    ordered_json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError(0, 0, "graph document must be an object");

    std::vector<std::string> vars = string_list(require_key(doc, "vars"), "vars");
    int rank = static_cast<int>(vars.size());
    if (doc.contains("rank")) {
        const auto& r = doc["rank"];
        if (!r.is_number_integer() || r.get<std::int64_t>() != rank)
            throw ParseError(0, 0, "rank does not match the variable list");
    }

    std::vector<std::string> ids = string_list(require_key(doc, "vertices"), "vertices");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], static_cast<int>(i));

    auto vertex_of = [&](const ordered_json& node, const char* what) {
        if (!node.is_string()) throw ParseError(0, 0, std::string(what) + " must be a vertex id");
        auto it = index.find(node.get<std::string>());
        if (it == index.end())
            throw ParseError(0, 0, std::string("edge refers to unknown vertex '") +
                                       node.get<std::string>() + "'");
        return it->second;
    };

    const ordered_json& edge_node = require_key(doc, "edges");
    if (!edge_node.is_array()) throw ParseError(0, 0, "edges must be an array");
    std::vector<Edge> edges;
    for (const auto& item : edge_node) {
        if (!item.is_object()) throw ParseError(0, 0, "each edge must be an object");
        int u = vertex_of(require_key(item, "u"), "edge endpoint u");
        int v = vertex_of(require_key(item, "v"), "edge endpoint v");
        std::vector<std::int64_t> chi = integer_list(require_key(item, "chi"), "chi");
        if (chi.size() != vars.size())
            throw ParseError(0, 0, "chi length does not match the variable list");
        try {
            edges.push_back({u, v, LinearForm(std::move(chi))});
        } catch (const Error& e) {
            throw ParseError(0, 0, std::string("bad edge character: ") + e.what());
        }
    }

    std::vector<std::int64_t> cov = integer_list(require_key(doc, "covector"), "covector");
    if (cov.size() != vars.size())
        throw ParseError(0, 0, "covector length does not match the variable list");

    std::map<std::string, Rational> scales;
    if (doc.contains("scale")) {
        const auto& s = doc["scale"];
        if (!s.is_object()) throw ParseError(0, 0, "scale must map vertex ids to rationals");
        for (const auto& [id, value] : s.items())
            scales.emplace(id, rational_from_node(value, "scale of vertex '" + id + "'"));
    }

    return MomentGraph(rank, std::move(vars), std::move(ids), std::move(edges),
                       Covector{std::move(cov)}, std::move(scales));
}

std::string graph_to_json(const MomentGraph& g) {
    ordered_json doc;
    doc["rank"] = g.rank();
    doc["vars"] = g.vars();
    doc["vertices"] = g.vertex_ids();
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) {
        ordered_json item;
        item["u"] = g.vertex_id(e.u);
        item["v"] = g.vertex_id(e.v);
        item["chi"] = e.chi.coeffs();
        edges.push_back(std::move(item));
    }
    doc["edges"] = std::move(edges);
    doc["covector"] = g.covector().entries;
    if (!g.explicit_scales().empty()) {
        ordered_json scales = ordered_json::object();
        for (const auto& [id, s] : g.explicit_scales()) scales[id] = s.str();
        doc["scale"] = std::move(scales);
    }
    return doc.dump(2) + "\n";
}

CohomologyClass class_from_json(const std::string& text, GraphPtr graph) {
    if (!graph) throw ArgumentError("class requires a graph");
    ordered_json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError(0, 0, "class document must be an object");
    std::vector<Polynomial> vals = values_from_node(require_key(doc, "values"), *graph);
    return CohomologyClass(std::move(graph), std::move(vals));
}

std::string class_to_json(const CohomologyClass& c) {
    ordered_json doc;
    doc["values"] = values_to_node(c);
    return doc.dump(2) + "\n";
}

BasisFamily basis_from_json(const std::string& text, GraphPtr graph) {
    if (!graph) throw ArgumentError("basis requires a graph");
    ordered_json doc = parse_document(text);
    if (!doc.is_object()) throw ParseError(0, 0, "basis document must be an object");

    const ordered_json& kind_node = require_key(doc, "kind");
    if (!kind_node.is_string()) throw ParseError(0, 0, "kind must be a string");
    std::string kind_text = kind_node.get<std::string>();
    BasisKind kind;
    if (kind_text == "flowup")
        kind = BasisKind::FlowUp;
    else if (kind_text == "theta")
        kind = BasisKind::Theta;
    else
        throw ParseError(0, 0, "kind must be 'flowup' or 'theta'");

    const ordered_json& class_node = require_key(doc, "classes");
    if (!class_node.is_array()) throw ParseError(0, 0, "classes must be an array");
    if (class_node.size() != static_cast<std::size_t>(graph->vertex_count()))
        throw ParseError(0, 0, "basis must hold one class per vertex");

    std::vector<CohomologyClass> classes;
    int expected = 0;
    for (const auto& item : class_node) {
        if (!item.is_object()) throw ParseError(0, 0, "each basis class must be an object");
        const auto& pos = require_key(item, "position");
        if (!pos.is_number_integer() || pos.get<std::int64_t>() != expected)
            throw ParseError(0, 0, "basis classes must be listed by filtration position");
        ++expected;
        classes.emplace_back(graph, values_from_node(require_key(item, "values"), *graph));
    }
    return BasisFamily(std::move(graph), kind, std::move(classes));
}

std::string basis_to_json(const BasisFamily& b) {
    ordered_json doc;
    doc["kind"] = b.kind() == BasisKind::FlowUp ? "flowup" : "theta";
    ordered_json classes = ordered_json::array();
    for (int p = 0; p < b.size(); ++p) {
        ordered_json item;
        item["position"] = p;
        item["values"] = values_to_node(b.at(p));
        classes.push_back(std::move(item));
    }
    doc["classes"] = std::move(classes);
    return doc.dump(2) + "\n";
}

} // namespace io
} // namespace gkm
