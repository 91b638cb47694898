#pragma once

#include <json.hpp>

#include "twoblock/circle_diagram.hpp"
#include "twoblock/dependence_graph.hpp"
#include "twoblock/flag_oracle.hpp"
#include "twoblock/tqft.hpp"

namespace twoblock {

using Json = nlohmann::ordered_json;

// {"n","k","type","top","bottom"}
Json tableau_json(const RowStrictTableau& w);
RowStrictTableau tableau_from_json(const Json& j);

// {"points":[lo,hi],"crosses":[...],"arcs":[{"s","t","colour"}]} plus the
// defining tableau, so parsing can rebuild and cross-check the diagram.
Json diagram_json(const ExtendedCupDiagram& ec, const RowStrictTableau& w,
                  const std::string& flavour);
ExtendedCupDiagram diagram_from_json(const Json& j);

Json circle_json(const CircleDiagram& cc, bool plus);
CircleDiagram circle_from_json(const Json& j);

// arcs as {"s","t","colour","label":{"kind","l"},"layer"}
Json graph_json(const DependenceGraph& g, const RowStrictTableau& w,
                const RowStrictTableau* w2);
DependenceGraph graph_from_json(const Json& j);

// exact rational matrices as arrays of fraction strings ("3/2")
Json subspace_json(const Subspace& s);
Json flag_json(const Flag& f, const TableauType& type);

// {"basis":[{"w","w2","assignment"}],"products":[{"i","j","result":[{"k","coeff"}]}]}
Json algebra_json(const AlgebraTable& t);

}  // namespace twoblock
