#include "twoblock/dependence_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace twoblock {

bool DepArc::operator<(const DepArc& o) const {
    return std::tuple(layer, s, t, colour, label, l) <
           std::tuple(o.layer, o.s, o.t, o.colour, o.label, o.l);
}

bool DependenceGraph::is_labelled(int node) const {
    if (node == 0) return true;
    const auto& d = type.dims;
    return std::binary_search(d.begin(), d.end(), node);
}

namespace {

void add_cross_arcs(DependenceGraph& g, Layer layer) {
    for (int d : g.type.doubles()) g.arcs.push_back({d - 2, d, ArcColour::Black, DepLabel::Ninv, 1, layer});
}

// Each arc of the extended cup diagram imposes one condition; its endpoints
// move to the nodes the condition actually relates.
void add_diagram_arcs(DependenceGraph& g, const ExtendedCupDiagram& ec, Layer layer) {
    const int n = ec.type.n, k = ec.type.k;
    for (const Arc& a : ec.arcs) {
        DepArc da;
        da.colour = a.colour;
        da.layer = layer;
        if (a.colour == ArcColour::Black) {
            da.s = a.s - 1;
            da.t = a.t;
            da.label = DepLabel::Ninv;
            da.l = (da.t - da.s) / 2;
        } else if (a.t <= n) {
            da.s = a.s - 1;
            da.t = a.t;
            da.label = DepLabel::Evec;
            da.l = (da.t - da.s) / 2;
        } else {
            da.s = a.s;
            da.t = a.t + 1;
            da.label = DepLabel::Fvec;
            da.l = k + 1 - (da.t - da.s) / 2;
        }
        if ((a.t - a.s) % 2 == 0) throw std::logic_error("arc of even span");
        if (da.l < 1) throw std::logic_error("non-positive arc label");
        if (da.s < g.lo_node || da.t > g.hi_node) throw std::logic_error("dependence arc outside node range");
        g.arcs.push_back(da);
    }
}

}  // namespace

DependenceGraph dep_graph_standard(const RowStrictTableau& s) {
    if (!s.is_standard()) throw std::invalid_argument("dep_graph_standard: tableau is not standard");
    DependenceGraph g;
    g.type = s.type;
    g.lo_node = -(s.type.n - 2 * s.type.k);
    g.hi_node = s.type.n;
    add_cross_arcs(g, Layer::Lower);
    add_diagram_arcs(g, extended_cup_standard(s), Layer::Lower);
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

DependenceGraph dep_graph_rowstrict(const RowStrictTableau& w) {
    ExtendedCupDiagram ec = extended_cup_rowstrict(w);
    DependenceGraph g;
    g.type = w.type;
    g.lo_node = std::min(0, ec.lo - 1);
    // right green arcs shift their endpoint to j+1; without them the nodes end at n
    g.hi_node = ec.hi > w.type.n ? ec.hi + 1 : w.type.n;
    add_cross_arcs(g, Layer::Lower);
    add_diagram_arcs(g, ec, Layer::Lower);
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

DependenceGraph dep_graph_pair(const RowStrictTableau& w, const RowStrictTableau& w2) {
    if (!(w.type == w2.type)) throw std::invalid_argument("dep_graph_pair: type mismatch");
    DependenceGraph lower = dep_graph_rowstrict(w);
    DependenceGraph upper = dep_graph_rowstrict(w2);
    DependenceGraph g;
    g.type = w.type;
    g.lo_node = std::min(lower.lo_node, upper.lo_node);
    g.hi_node = std::max(lower.hi_node, upper.hi_node);
    g.pair = true;
    g.arcs = lower.arcs;
    for (DepArc a : upper.arcs) {
        a.layer = Layer::Upper;
        g.arcs.push_back(a);
    }
    std::sort(g.arcs.begin(), g.arcs.end());
    return g;
}

std::vector<int> independents(const DependenceGraph& g) {
    // F_j is free iff j is the leftmost node of a connected component all of
    // whose arcs are black; an isolated labelled node is such a component.
    // Components whose leftmost node is <= 0 are anchored at the zero space
    // (or a virtual node) and determined.
    const int size = g.hi_node - g.lo_node + 1;
    std::vector<int> parent(size);
    for (int i = 0; i < size; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<char> has_arc(size, 0);
    for (const DepArc& a : g.arcs) {
        has_arc[a.s - g.lo_node] = has_arc[a.t - g.lo_node] = 1;
        parent[find(a.s - g.lo_node)] = find(a.t - g.lo_node);
    }
    std::vector<char> tainted(size, 0);
    for (const DepArc& a : g.arcs)
        if (a.colour != ArcColour::Black) tainted[find(a.s - g.lo_node)] = 1;

    std::vector<int> out;
    std::vector<char> seen(size, 0);
    for (int i = 0; i < size; ++i) {
        const int node = i + g.lo_node;
        if (has_arc[i]) {
            // scanning left to right, i is the leftmost node iff its root is unseen
            const int root = find(i);
            if (!seen[root]) {
                seen[root] = 1;
                if (node > 0 && !tainted[root]) out.push_back(node);
            }
        } else if (node > 0 && g.is_labelled(node)) {
            out.push_back(node);
        }
    }
    return out;
}

std::optional<std::vector<DepArc>> black_arc_sequence(const DependenceGraph& g, int a, int b,
                                                      std::optional<Layer> layer) {
    if (a == b) return std::vector<DepArc>{};
    for (const DepArc& arc : g.arcs) {
        if (arc.colour != ArcColour::Black || arc.s != a || arc.t > b) continue;
        if (layer && arc.layer != *layer) continue;
        if (auto rest = black_arc_sequence(g, arc.t, b, layer)) {
            rest->insert(rest->begin(), arc);
            return rest;
        }
    }
    return std::nullopt;
}

}  // namespace twoblock
