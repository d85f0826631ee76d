#include "cli.hpp"

#include "gkm/basis.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/errors.hpp"
#include "gkm/fixtures.hpp"
#include "gkm/io.hpp"
#include "gkm/localization.hpp"
#include "gkm/moment_graph.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <memory>
#include <ostream>
#include <sstream>

namespace gkm {
namespace cli {

namespace {

using nlohmann::ordered_json;

GraphPtr load_graph(const std::string& path) {
    return std::make_shared<const MomentGraph>(io::graph_from_json(io::read_file(path)));
}

CohomologyClass load_class(const std::string& path, GraphPtr graph) {
    return io::class_from_json(io::read_file(path), std::move(graph));
}

BasisFamily load_basis(const std::string& path, GraphPtr graph) {
    return io::basis_from_json(io::read_file(path), std::move(graph));
}

const char* issue_kind_name(ValidationIssue::Kind k) {
    switch (k) {
    case ValidationIssue::Kind::Genericity: return "genericity";
    case ValidationIssue::Kind::SelfLoop: return "self-loop";
    case ValidationIssue::Kind::Cycle: return "cycle";
    case ValidationIssue::Kind::OrderViolation: return "order";
    }
    return "unknown";
}

bool orientable(const ValidationReport& report) {
    for (const auto& issue : report.issues)
        if (issue.kind != ValidationIssue::Kind::OrderViolation) return false;
    return true;
}

void emit(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

void emit_coefficients(const MomentGraph& g, const std::vector<Polynomial>& coeffs,
                       const char* label, bool json, std::ostream& out) {
    if (json) {
        ordered_json doc;
        ordered_json list = ordered_json::array();
        for (const Polynomial& p : coeffs) list.push_back(p.str(g.vars()));
        doc[label] = std::move(list);
        emit(out, doc);
    } else {
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            out << k << ": " << coeffs[k].str(g.vars()) << "\n";
    }
}

int run_validate(const MomentGraph& g, bool json, std::ostream& out) {
    const ValidationReport& report = g.validate();
    bool oriented = orientable(report);
    if (json) {
        ordered_json doc;
        doc["ok"] = report.ok();
        ordered_json issues = ordered_json::array();
        for (const auto& issue : report.issues) {
            ordered_json item;
            item["kind"] = issue_kind_name(issue.kind);
            item["message"] = issue.message;
            if (issue.edge >= 0) item["edge"] = issue.edge;
            if (issue.vertex >= 0) item["vertex"] = g.vertex_id(issue.vertex);
            issues.push_back(std::move(item));
        }
        doc["issues"] = std::move(issues);
        if (oriented) {
            ordered_json degrees = ordered_json::object();
            for (int pos = 0; pos < g.vertex_count(); ++pos) {
                int v = g.vertex_at_position(pos);
                degrees[g.vertex_id(v)] = g.in_degree(v);
            }
            doc["in_degrees"] = std::move(degrees);
        }
        doc["basis_ready"] = report.basis_ready;
        emit(out, doc);
    } else {
        out << "graph: " << g.vertex_count() << " vertices, " << g.edges().size()
            << " edges, rank " << g.rank() << "\n";
        for (const auto& issue : report.issues)
            out << issue_kind_name(issue.kind) << ": " << issue.message << "\n";
        if (oriented) {
            out << "in-degrees:";
            for (int pos = 0; pos < g.vertex_count(); ++pos) {
                int v = g.vertex_at_position(pos);
                out << " " << g.vertex_id(v) << "=" << g.in_degree(v);
            }
            out << "\n";
        }
        out << "basis-ready: " << (report.basis_ready ? "yes" : "no") << "\n";
        out << (report.ok() ? "ok" : "invalid") << "\n";
    }
    return report.ok() ? 0 : 1;
}

int run_order(const MomentGraph& g, bool json, std::ostream& out) {
    const auto& order = g.filtration_order();
    if (json) {
        ordered_json doc;
        ordered_json ids = ordered_json::array();
        for (int v : order) ids.push_back(g.vertex_id(v));
        doc["order"] = std::move(ids);
        emit(out, doc);
    } else {
        for (int v : order) out << g.vertex_id(v) << "\n";
    }
    return 0;
}

int run_betti(const MomentGraph& g, bool json, std::ostream& out) {
    std::vector<int> b = g.betti();
    if (json) {
        ordered_json doc;
        doc["betti"] = b;
        emit(out, doc);
    } else {
        for (std::size_t k = 0; k < b.size(); ++k)
            out << (k ? " " : "") << "b" << 2 * k << "=" << b[k];
        out << "\n";
    }
    return 0;
}

int run_euler(const MomentGraph& g, const std::string& vertex_id, int level, bool json,
              std::ostream& out) {
    auto euler_at = [&](int v) {
        return level > 0 ? space_euler(g, level, v) : cell_euler(g, v);
    };

    std::vector<int> targets;
    if (!vertex_id.empty()) {
        auto v = g.find_vertex(vertex_id);
        if (!v) throw ArgumentError("unknown vertex id '" + vertex_id + "'");
        targets.push_back(*v);
    } else {
        int last = level > 0 ? level : g.vertex_count();
        for (int pos = 0; pos < last; ++pos) targets.push_back(g.vertex_at_position(pos));
    }

    if (json) {
        ordered_json list = ordered_json::array();
        for (int v : targets) {
            ordered_json item;
            item["vertex"] = g.vertex_id(v);
            item["kind"] = level > 0 ? "space" : "cell";
            if (level > 0) item["level"] = level;
            item["euler"] = euler_at(v).value.str(g.vars());
            list.push_back(std::move(item));
        }
        if (!vertex_id.empty())
            emit(out, list.front());
        else
            emit(out, list);
    } else {
        for (int v : targets) {
            if (vertex_id.empty()) out << g.vertex_id(v) << ": ";
            out << euler_at(v).value.str(g.vars()) << "\n";
        }
    }
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equivariant cohomology of moment graphs", "gkm"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit JSON instead of plain text");

    std::string graph_path;
    std::string class_path;
    std::string basis_path;
    std::string out_path;
    std::string vertex_id;
    std::string kind;
    std::string residue_order = "forward";
    int level = 0;
    int at_level = 0;
    bool scaled = false;
    int pos_i = 0;
    int pos_j = 0;
    std::string example_name;
    std::vector<int> example_args;

    auto add_graph = [&](CLI::App* sub) {
        sub->add_option("graph", graph_path, "Graph file (JSON)")->required();
    };
    auto add_class = [&](CLI::App* sub) {
        sub->add_option("class", class_path, "Class file (JSON)")->required();
    };
    auto add_basis_file = [&](CLI::App* sub) {
        sub->add_option("--basis", basis_path, "Basis file written by `basis --out`")->required();
    };

    CLI::App* sub_validate = app.add_subcommand("validate", "Check graph data");
    add_graph(sub_validate);

    CLI::App* sub_order = app.add_subcommand("order", "Print the filtration order");
    add_graph(sub_order);

    CLI::App* sub_betti = app.add_subcommand("betti", "Print the Betti numbers");
    add_graph(sub_betti);

    CLI::App* sub_euler = app.add_subcommand("euler", "Print Euler classes");
    add_graph(sub_euler);
    sub_euler->add_option("--vertex", vertex_id, "Restrict to one vertex id");
    sub_euler->add_option("--level", level,
                          "Tangent Euler classes inside the first L filtration vertices")
        ->check(CLI::PositiveNumber);

    CLI::App* sub_check = app.add_subcommand("check", "Check the edge congruences of a class");
    add_graph(sub_check);
    add_class(sub_check);

    CLI::App* sub_integrate = app.add_subcommand("integrate", "Localized integral of a class");
    add_graph(sub_integrate);
    add_class(sub_integrate);
    sub_integrate->add_option("--level", level, "Integrate over the first L filtration vertices")
        ->check(CLI::PositiveNumber);

    CLI::App* sub_index = app.add_subcommand("index", "Local index of a class at a level");
    add_graph(sub_index);
    add_class(sub_index);
    sub_index->add_option("--at", at_level, "Level, counted from 1")
        ->required()
        ->check(CLI::PositiveNumber);

    CLI::App* sub_basis = app.add_subcommand("basis", "Compute a module basis");
    add_graph(sub_basis);
    sub_basis->add_option("--kind", kind, "Basis kind")
        ->required()
        ->check(CLI::IsMember({"flowup", "theta"}));
    sub_basis->add_option("--residue-order", residue_order,
                          "Order in which congruences are lifted")
        ->check(CLI::IsMember({"forward", "reverse"}));
    sub_basis->add_option("--out", out_path, "Write the basis document to a file");

    CLI::App* sub_expand = app.add_subcommand("expand", "Expand a class over a basis");
    add_graph(sub_expand);
    add_class(sub_expand);
    add_basis_file(sub_expand);

    CLI::App* sub_mult = app.add_subcommand("mult", "Structure constants of two basis classes");
    add_graph(sub_mult);
    add_basis_file(sub_mult);
    sub_mult->add_option("i", pos_i, "First filtration position")->required();
    sub_mult->add_option("j", pos_j, "Second filtration position")->required();

    CLI::App* sub_example = app.add_subcommand("example", "Emit a built-in example graph");
    sub_example->add_option("name", example_name, "projective_space, flag_s3, weighted_p2, product")
        ->required();
    sub_example->add_option("params", example_args, "Dimensions, where the example takes them");
    sub_example->add_flag("--scaled", scaled, "Use the scale that repairs the local indices");
    sub_example->add_option("--out", out_path, "Write the graph document to a file");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(sub_validate)) return run_validate(*load_graph(graph_path), json, out);
        if (app.got_subcommand(sub_order)) return run_order(*load_graph(graph_path), json, out);
        if (app.got_subcommand(sub_betti)) return run_betti(*load_graph(graph_path), json, out);

        if (app.got_subcommand(sub_euler))
            return run_euler(*load_graph(graph_path), vertex_id, level, json, out);

        if (app.got_subcommand(sub_check)) {
            GraphPtr g = load_graph(graph_path);
            CohomologyClass c = load_class(class_path, g);
            GkmReport report = c.check_gkm();
            if (json) {
                ordered_json doc;
                doc["ok"] = report.ok();
                ordered_json violations = ordered_json::array();
                for (const auto& v : report.violations) {
                    ordered_json item;
                    item["edge"] = v.edge;
                    item["difference"] = v.difference.str(g->vars());
                    item["message"] = v.message;
                    violations.push_back(std::move(item));
                }
                doc["violations"] = std::move(violations);
                emit(out, doc);
            } else {
                for (const auto& v : report.violations) out << v.message << "\n";
                out << (report.ok() ? "ok" : "invalid") << "\n";
            }
            return report.ok() ? 0 : 1;
        }

        if (app.got_subcommand(sub_integrate)) {
            GraphPtr g = load_graph(graph_path);
            CohomologyClass c = load_class(class_path, g);
            RationalFunction r = level > 0 ? integrate(c, level) : integrate(c);
            if (json) {
                ordered_json doc;
                doc["num"] = r.num().str(g->vars());
                doc["den"] = r.den().str(g->vars());
                doc["polynomial"] = r.is_polynomial();
                emit(out, doc);
            } else {
                out << r.str(g->vars()) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(sub_index)) {
            GraphPtr g = load_graph(graph_path);
            CohomologyClass c = load_class(class_path, g);
            Polynomial p = local_index(c, at_level);
            if (json) {
                ordered_json doc;
                doc["level"] = at_level;
                doc["index"] = p.str(g->vars());
                emit(out, doc);
            } else {
                out << p.str(g->vars()) << "\n";
            }
            return 0;
        }

        if (app.got_subcommand(sub_basis)) {
            GraphPtr g = load_graph(graph_path);
            ResidueOrder ro =
                residue_order == "reverse" ? ResidueOrder::Reverse : ResidueOrder::Forward;
            BasisFamily basis =
                kind == "flowup" ? flowup_basis(g, ro) : theta_basis(g, ro);
            std::string text = io::basis_to_json(basis);
            if (out_path.empty())
                out << text;
            else
                io::write_file(out_path, text);
            return 0;
        }

        if (app.got_subcommand(sub_expand)) {
            GraphPtr g = load_graph(graph_path);
            CohomologyClass c = load_class(class_path, g);
            BasisFamily basis = load_basis(basis_path, g);
            emit_coefficients(*g, basis.expand(c), "coefficients", json, out);
            return 0;
        }

        if (app.got_subcommand(sub_mult)) {
            GraphPtr g = load_graph(graph_path);
            BasisFamily basis = load_basis(basis_path, g);
            emit_coefficients(*g, basis.structure_constants(pos_i, pos_j), "coefficients", json,
                              out);
            return 0;
        }

        if (app.got_subcommand(sub_example)) {
            MomentGraph g = [&]() -> MomentGraph {
                if (example_name == "projective_space") {
                    if (example_args.size() > 1)
                        throw ArgumentError("projective_space takes one dimension");
                    return fixtures::projective_space(example_args.empty() ? 2 : example_args[0]);
                }
                if (example_name == "flag_s3") {
                    if (!example_args.empty()) throw ArgumentError("flag_s3 takes no dimensions");
                    return fixtures::flag_s3();
                }
                if (example_name == "weighted_p2") {
                    if (!example_args.empty())
                        throw ArgumentError("weighted_p2 takes no dimensions");
                    return fixtures::weighted_p2(scaled);
                }
                if (example_name == "product") {
                    if (example_args.size() != 2)
                        throw ArgumentError("product takes two dimensions");
                    return fixtures::product_graph(fixtures::projective_space(example_args[0]),
                                                   fixtures::projective_space(example_args[1]));
                }
                throw ArgumentError("unknown example '" + example_name + "'");
            }();
            std::string text = io::graph_to_json(g);
            if (out_path.empty())
                out << text;
            else
                io::write_file(out_path, text);
            return 0;
        }
    } catch (const ParseError& e) {
        if (e.line() > 0)
            err << "error: line " << e.line() << ", column " << e.column() << ": " << e.what()
                << "\n";
        else
            err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ComputeError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const GraphError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ArgumentError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "error: no subcommand selected\n";
    return 2;
}

} // namespace cli
} // namespace gkm
