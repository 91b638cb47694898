#include "twoblock/arc_diagram.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoblock {

int ExtendedCupDiagram::black_count() const {
    return static_cast<int>(std::count_if(arcs.begin(), arcs.end(), [](const Arc& a) {
        return a.colour == ArcColour::Black;
    }));
}

int ExtendedCupDiagram::green_count() const {
    return static_cast<int>(arcs.size()) - black_count();
}

std::optional<Arc> ExtendedCupDiagram::arc_at(int point) const {
    for (const Arc& a : arcs)
        if (a.s == point || a.t == point) return a;
    return std::nullopt;
}

bool ExtendedCupDiagram::is_cross(int point) const {
    return std::binary_search(crosses.begin(), crosses.end(), point);
}

void ExtendedCupDiagram::validate(bool require_complete) const {
    std::vector<int> degree(hi - lo + 1, 0);
    for (const Arc& a : arcs) {
        if (a.s >= a.t || a.s < lo || a.t > hi)
            throw std::logic_error("arc diagram: arc endpoints out of range");
        if (is_cross(a.s) || is_cross(a.t))
            throw std::logic_error("arc diagram: arc at a cross position");
        const bool virt = a.s < 1 || a.t > type.n;
        if (virt != (a.colour == ArcColour::Green))
            throw std::logic_error("arc diagram: colour does not match virtual endpoints");
        ++degree[a.s - lo];
        ++degree[a.t - lo];
    }
    for (int p = lo; p <= hi; ++p) {
        const int d = degree[p - lo];
        if (is_cross(p)) {
            if (d != 0) throw std::logic_error("arc diagram: cross with arcs");
        } else if (d > 1 || (require_complete && d != 1)) {
            throw std::logic_error("arc diagram: point degree invalid");
        }
    }
    for (const Arc& a : arcs)
        for (const Arc& b : arcs)
            if (a.s < b.s && b.s < a.t && a.t < b.t)
                throw std::logic_error("arc diagram: arcs cross");
}

namespace {

ArcColour colour_for(int s, int t, int n) {
    return (s < 1 || t > n) ? ArcColour::Green : ArcColour::Black;
}

// Repeated matching of adjacent vee..wedge pairs (ignoring crosses and
// already matched points) is the classic stack match.
std::vector<Arc> stack_match(const std::vector<std::pair<int, Sym>>& points, int n,
                             std::vector<int>* unmatched_vees = nullptr,
                             std::vector<int>* unmatched_wedges = nullptr) {
    std::vector<Arc> arcs;
    std::vector<int> stack;
    for (const auto& [pos, sym] : points) {
        if (sym == Sym::Vee) {
            stack.push_back(pos);
        } else if (sym == Sym::Wedge) {
            if (!stack.empty()) {
                arcs.push_back({stack.back(), pos, colour_for(stack.back(), pos, n)});
                stack.pop_back();
            } else if (unmatched_wedges) {
                unmatched_wedges->push_back(pos);
            }
        }
    }
    if (unmatched_vees) *unmatched_vees = stack;
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

std::vector<std::pair<int, Sym>> real_points(const RowStrictTableau& w) {
    std::vector<std::pair<int, Sym>> pts;
    for (int i = 1; i <= w.type.n; ++i)
        if (w.at(i) != Sym::Cross) pts.emplace_back(i, w.at(i));
    return pts;
}

}  // namespace

ExtendedCupDiagram cup_diagram(const RowStrictTableau& w) {
    const int n = w.type.n;
    std::vector<int> vees, wedges;
    ExtendedCupDiagram out;
    out.type = w.type;
    out.lo = 1;
    out.hi = n;
    out.crosses = w.type.crosses();
    out.arcs = stack_match(real_points(w), n, &vees, &wedges);
    // second phase: adjacent wedge-vee pairs; the leftovers are all wedges
    // before all vees, so the pairs nest around the middle
    const int extra = static_cast<int>(std::min(vees.size(), wedges.size()));
    for (int i = 0; i < extra; ++i)
        out.arcs.push_back({wedges[wedges.size() - 1 - i], vees[i],
                            colour_for(wedges[wedges.size() - 1 - i], vees[i], n)});
    std::sort(out.arcs.begin(), out.arcs.end());
    out.validate(false);
    return out;
}

ExtendedCupDiagram extended_cup_standard(const RowStrictTableau& s) {
    if (!s.is_standard())
        throw std::invalid_argument("extended_cup_standard: input must be standard");
    const int n = s.type.n, k = s.type.k;
    std::vector<std::pair<int, Sym>> pts;
    for (int p = -(n - 2 * k) + 1; p <= 0; ++p) pts.emplace_back(p, Sym::Vee);
    for (const auto& rp : real_points(s)) pts.push_back(rp);
    ExtendedCupDiagram out;
    out.type = s.type;
    out.lo = -(n - 2 * k) + 1;
    out.hi = n;
    out.crosses = s.type.crosses();
    std::vector<int> vees, wedges;
    out.arcs = stack_match(pts, n, &vees, &wedges);
    if (!wedges.empty()) throw std::logic_error("extended_cup_standard: unmatched wedge");
    // virtual vees that stayed unmatched are deleted
    if (!vees.empty()) {
        for (int v : vees)
            if (v >= 1) throw std::logic_error("extended_cup_standard: unmatched real vee");
        out.lo = *std::max_element(vees.begin(), vees.end()) + 1;
    }
    out.validate(true);
    return out;
}

ExtendedCupDiagram extended_cup_rowstrict(const RowStrictTableau& w) {
    const int n = w.type.n, k = w.type.k;
    std::vector<std::pair<int, Sym>> pts;
    for (int p = -(n - k) + 1; p <= 0; ++p) pts.emplace_back(p, Sym::Vee);
    for (const auto& rp : real_points(w)) pts.push_back(rp);
    for (int p = n + 1; p <= n + k; ++p) pts.emplace_back(p, Sym::Wedge);
    std::vector<int> vees, wedges;
    std::vector<Arc> arcs = stack_match(pts, n, &vees, &wedges);
    if (!wedges.empty()) throw std::logic_error("extended_cup_rowstrict: unmatched wedge");
    // matching stops once 1..n is covered: arcs joining two virtual points
    // overshoot that moment and are discarded with their endpoints
    std::erase_if(arcs, [n](const Arc& a) { return a.s < 1 && a.t > n; });

    ExtendedCupDiagram out;
    out.type = w.type;
    out.crosses = w.type.crosses();
    // unmatched virtual points are deleted: the surviving range is the arc span
    out.lo = 1;
    out.hi = n;
    for (const Arc& a : arcs) {
        out.lo = std::min(out.lo, a.s);
        out.hi = std::max(out.hi, a.t);
    }
    out.arcs = std::move(arcs);
    out.validate(true);
    return out;
}

RowStrictTableau s_of_w(const RowStrictTableau& w) {
    const auto cups = cup_diagram(w);
    std::vector<Sym> sym(w.type.n, Sym::Wedge);
    for (int c : w.type.crosses()) sym[c - 1] = Sym::Cross;
    for (const Arc& a : cups.arcs) sym[a.s - 1] = Sym::Vee;
    return RowStrictTableau(w.type, std::move(sym));
}

RowStrictTableau delete_green(const ExtendedCupDiagram& e) {
    std::vector<Arc> black;
    std::vector<int> occupied;
    for (const Arc& a : e.arcs)
        if (a.colour == ArcColour::Black) {
            black.push_back(a);
            occupied.push_back(a.s);
            occupied.push_back(a.t);
        }
    std::sort(occupied.begin(), occupied.end());
    const auto renumber = [&](int p) {
        return static_cast<int>(std::lower_bound(occupied.begin(), occupied.end(), p) -
                                occupied.begin()) + 1;
    };
    const int n2 = static_cast<int>(occupied.size());
    std::vector<Sym> sym(n2, Sym::Wedge);
    for (const Arc& a : black) sym[renumber(a.s) - 1] = Sym::Vee;
    RowStrictTableau out(full_type(n2, n2 / 2), std::move(sym));
    // by construction the extended diagram of the result is the renumbered
    // black part; check it
    const auto back = extended_cup_standard(out);
    std::vector<Arc> renumbered;
    for (const Arc& a : black) renumbered.push_back({renumber(a.s), renumber(a.t), ArcColour::Black});
    std::sort(renumbered.begin(), renumbered.end());
    if (back.arcs != renumbered) throw std::logic_error("delete_green: reconstruction failed");
    return out;
}

int DecompositionNode::leaf_count() const {
    switch (kind) {
        case Kind::Leaf: return 1;
        case Kind::Nested: return 1 + (first ? first->leaf_count() : 0);
        case Kind::Concat: return first->leaf_count() + second->leaf_count();
    }
    return 0;
}

void DecompositionNode::collect_cups(std::vector<Arc>& out) const {
    if (kind != Kind::Concat) out.push_back(cup);
    if (first) first->collect_cups(out);
    if (second) second->collect_cups(out);
}

namespace {

std::unique_ptr<DecompositionNode> decompose_cups(std::vector<Arc> cups) {
    if (cups.empty()) return nullptr;
    auto node = std::make_unique<DecompositionNode>();
    if (cups.size() == 1) {
        node->kind = DecompositionNode::Kind::Leaf;
        node->cup = cups[0];
        return node;
    }
    std::sort(cups.begin(), cups.end());
    int lo = cups.front().s, hi = 0;
    for (const Arc& a : cups) hi = std::max(hi, a.t);
    // nested position: one cup spans all others
    for (const Arc& a : cups)
        if (a.s == lo && a.t == hi) {
            node->kind = DecompositionNode::Kind::Nested;
            node->cup = a;
            std::vector<Arc> inside;
            for (const Arc& b : cups)
                if (!(b == a)) inside.push_back(b);
            node->first = decompose_cups(std::move(inside));
            return node;
        }
    // otherwise split after the cup starting at the leftmost point
    Arc first_cup = cups.front();
    std::vector<Arc> left, right;
    for (const Arc& a : cups)
        (a.t <= first_cup.t ? left : right).push_back(a);
    node->kind = DecompositionNode::Kind::Concat;
    node->first = decompose_cups(std::move(left));
    node->second = decompose_cups(std::move(right));
    return node;
}

}  // namespace

std::unique_ptr<DecompositionNode> decompose(const ExtendedCupDiagram& cups) {
    for (const Arc& a : cups.arcs)
        if (a.colour != ArcColour::Black)
            throw std::invalid_argument("decompose: diagram must be all black");
    if (!cups.crosses.empty())
        throw std::invalid_argument("decompose: diagram must have no crosses");
    cups.validate(false);  // bare points do not affect the nesting structure
    return decompose_cups(cups.arcs);
}

std::vector<Arc> reassemble(const DecompositionNode* node) {
    std::vector<Arc> out;
    if (node) node->collect_cups(out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace twoblock
