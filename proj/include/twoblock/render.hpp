#pragma once

#include <string>

#include "twoblock/circle_diagram.hpp"
#include "twoblock/dependence_graph.hpp"

namespace twoblock {

// One line of point labels, arcs drawn as nested brackets whose end letters
// carry the colour (b/g, and r for red circles).
std::string ascii_diagram(const ExtendedCupDiagram& ec);
std::string ascii_diagram(const CircleDiagram& cc);
std::string ascii_graph(const DependenceGraph& g);

// Arcs as semicircles: black #000, green dashed #2a7f2a, red thick #c00.
std::string svg_diagram(const ExtendedCupDiagram& ec);
std::string svg_diagram(const CircleDiagram& cc);
std::string svg_graph(const DependenceGraph& g);

std::string dep_label_string(const DepArc& a);

}  // namespace twoblock
