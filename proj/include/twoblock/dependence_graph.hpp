#pragma once

#include <optional>
#include <vector>

#include "twoblock/arc_diagram.hpp"

namespace twoblock {

// Kind of condition an arc imposes on the flag spaces at its endpoints.
enum class DepLabel {
    Ninv,  // black arc (i,j): F_j = N^{-l} F_i
    Evec,  // green arc ending at j <= n: F_j = F_{j-1} + <e_l>
    Fvec,  // green arc starting at i >= 1: F_i = F_{i-1} + <f_l>
};

enum class Layer { Lower, Upper };

struct DepArc {
    int s = 0, t = 0;
    ArcColour colour = ArcColour::Black;
    DepLabel label = DepLabel::Ninv;
    int l = 0;
    Layer layer = Layer::Lower;

    bool operator==(const DepArc& o) const = default;
    bool operator<(const DepArc& o) const;
};

// Nodes lo_node..hi_node; the nodes at the type dimensions are labelled with
// flag spaces, node 0 with the zero space, the rest are unlabelled.
struct DependenceGraph {
    TableauType type;
    int lo_node = 0, hi_node = 0;
    bool pair = false;  // true when built from two layers
    std::vector<DepArc> arcs;

    bool is_labelled(int node) const;
    bool operator==(const DependenceGraph& o) const = default;
};

DependenceGraph dep_graph_standard(const RowStrictTableau& s);
DependenceGraph dep_graph_rowstrict(const RowStrictTableau& w);
// mirror of dep_graph of w2 stacked above the one of w
DependenceGraph dep_graph_pair(const RowStrictTableau& w, const RowStrictTableau& w2);

// Labelled nodes j > 0 whose space is not constrained by any arc condition:
// no black or e-vector arc ends there and no f-vector arc starts there.
std::vector<int> independents(const DependenceGraph& g);

// Chain of black arcs B_1..B_r with s(B_1)=a, t(B_r)=b and t(B_i)=s(B_{i+1}),
// optionally within one layer; empty chain when a == b.
std::optional<std::vector<DepArc>> black_arc_sequence(const DependenceGraph& g, int a, int b,
                                                      std::optional<Layer> layer = {});

}  // namespace twoblock
