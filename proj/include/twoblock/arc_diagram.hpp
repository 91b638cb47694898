#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "twoblock/tableau.hpp"

namespace twoblock {

enum class ArcColour { Black, Green };

struct Arc {
    int s = 0;  // left endpoint
    int t = 0;  // right endpoint
    ArcColour colour = ArcColour::Black;

    bool operator==(const Arc& o) const = default;
    bool operator<(const Arc& o) const {
        if (s != o.s) return s < o.s;
        if (t != o.t) return t < o.t;
        return colour < o.colour;
    }
};

// Crossingless arcs over integer points [lo, hi]; arcs touching a point
// outside 1..n are green.  Plain cup diagrams may leave points unmatched;
// extended diagrams match every non-cross point.
struct ExtendedCupDiagram {
    TableauType type;
    int lo = 1, hi = 0;
    std::vector<int> crosses;  // sorted point positions carrying no arc
    std::vector<Arc> arcs;     // sorted by (s,t)

    int black_count() const;
    int green_count() const;
    std::optional<Arc> arc_at(int point) const;
    bool is_cross(int point) const;
    // every non-cross point in [lo,hi] is an endpoint of exactly one arc,
    // arcs are pairwise non-crossing, colours match virtual endpoints
    void validate(bool require_complete) const;

    bool operator==(const ExtendedCupDiagram& o) const = default;
};

// C(w): match adjacent vee-wedge pairs, then remaining adjacent wedge-vee
// pairs; restricted to 1..n, unmatched points allowed.
ExtendedCupDiagram cup_diagram(const RowStrictTableau& w);

// eC(S) for standard S: n-2k virtual vees on positions -(n-2k)+1..0,
// then complete vee-wedge matching.
ExtendedCupDiagram extended_cup_standard(const RowStrictTableau& s);

// eC(w) for row strict w: n-k virtual vees left, k virtual wedges right
// (positions n+1..n+k), vee-wedge matching until 1..n is covered, unmatched
// virtual points deleted.
ExtendedCupDiagram extended_cup_rowstrict(const RowStrictTableau& w);

// Standardisation S(w): cup left ends to the bottom row (declared in
// tableau.hpp, implemented here).

// Unique standard tableau of full type whose extended cup diagram equals the
// black cups of e, after deleting green arcs and renumbering.
RowStrictTableau delete_green(const ExtendedCupDiagram& e);

// Iterated-bundle decomposition of a complete black cup diagram.
struct DecompositionNode {
    enum class Kind { Leaf, Nested, Concat };
    Kind kind = Kind::Leaf;
    Arc cup;  // Leaf: the cup; Nested: the outer cup that is peeled off
    std::unique_ptr<DecompositionNode> first;   // Nested: inside; Concat: left part
    std::unique_ptr<DecompositionNode> second;  // Concat: right part

    int leaf_count() const;
    void collect_cups(std::vector<Arc>& out) const;
};

// Empty input gives a null node.  Base type is (CP^1)^{number of cups}.
std::unique_ptr<DecompositionNode> decompose(const ExtendedCupDiagram& cups);
std::vector<Arc> reassemble(const DecompositionNode* node);

}  // namespace twoblock
