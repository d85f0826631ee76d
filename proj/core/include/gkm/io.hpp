#pragma once

#include "gkm/basis.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/moment_graph.hpp"

#include <string>

namespace gkm {
namespace io {

// Whole file as a string; throws ParseError when it cannot be read.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Graph document: rank (optional), vars, vertices, edges with vertex ids and
// integer character entries, covector, optional scales keyed by vertex id.
MomentGraph graph_from_json(const std::string& text);
std::string graph_to_json(const MomentGraph& g);

// Class document: values keyed by vertex id, written as expression text.
// Vertices missing from the document default to zero.
CohomologyClass class_from_json(const std::string& text, GraphPtr graph);
std::string class_to_json(const CohomologyClass& c);

// Basis document: kind plus one class per filtration position.  Reading
// re-runs the basis checks.
BasisFamily basis_from_json(const std::string& text, GraphPtr graph);
std::string basis_to_json(const BasisFamily& b);

} // namespace io
} // namespace gkm
