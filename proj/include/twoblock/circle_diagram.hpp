#pragma once

#include <vector>

#include "twoblock/arc_diagram.hpp"

namespace twoblock {

enum class CircleColour { Black, Green, Red };

struct Circle {
    std::vector<int> points;  // sorted
    CircleColour colour = CircleColour::Black;
};

// Reflected stacking of two extended cup diagrams of the same type.  Every
// point carries one lower and one upper arc end; surplus points of the
// bigger half are joined left-to-right by green closure arcs (kept with the
// upper half).  A circle is red when it runs through more than one point
// left of 1 or more than one point right of n, green when it contains a
// green arc, black otherwise.
struct CircleDiagram {
    RowStrictTableau lower_tableau, upper_tableau;
    int lo = 1, hi = 0;
    std::vector<int> crosses;
    std::vector<Arc> lower, upper;  // upper includes closure and padding arcs
    std::vector<Circle> circles;    // sorted by smallest point

    int count(CircleColour c) const;
    bool has_red() const { return count(CircleColour::Red) > 0; }
    const Circle& circle_of(int point) const;
    // black circles sorted by smallest point; basis letters index into this
    std::vector<const Circle*> black_circles() const;
};

CircleDiagram circle_diagram(const RowStrictTableau& w, const RowStrictTableau& w2);

// CC+(w,w2): enclosing green circles (one lower + one upper arc each) are
// added until the leftmost point -(n-k-r) of the type is occupied, where r
// counts the double entries; all padded diagrams of a type then share the
// same point range.
CircleDiagram cc_plus(CircleDiagram cc);
CircleDiagram cc_plus(const RowStrictTableau& w, const RowStrictTableau& w2);

// Theorem: the intersection of the two closures is empty iff a red circle
// occurs.
bool is_empty_intersection(const CircleDiagram& cc);

}  // namespace twoblock
