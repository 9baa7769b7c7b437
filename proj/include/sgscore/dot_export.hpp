#ifndef SGSCORE_DOT_EXPORT_HPP
#define SGSCORE_DOT_EXPORT_HPP

#include <string>

#include "sgscore/scene_graph.hpp"

namespace sgscore {

// Deterministic DOT rendering: objects pink, attributes green, relations as
// light-blue intermediate nodes, one line per node and per edge. Identical
// graphs render byte-identically.
std::string graph_to_dot(const SceneGraph &g);

// Writes graph_to_dot(g) to path; I/O failure throws Error.
void export_dot(const SceneGraph &g, const std::string &path);

}  // namespace sgscore

#endif  // SGSCORE_DOT_EXPORT_HPP
