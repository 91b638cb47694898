#include "twoblock/circle_diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace twoblock {

int CircleDiagram::count(CircleColour c) const {
    return static_cast<int>(std::count_if(circles.begin(), circles.end(), [c](const Circle& x) {
        return x.colour == c;
    }));
}

const Circle& CircleDiagram::circle_of(int point) const {
    for (const Circle& c : circles)
        if (std::binary_search(c.points.begin(), c.points.end(), point)) return c;
    throw std::invalid_argument("circle_of: unknown point");
}

std::vector<const Circle*> CircleDiagram::black_circles() const {
    std::vector<const Circle*> out;
    for (const Circle& c : circles)
        if (c.colour == CircleColour::Black) out.push_back(&c);
    return out;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

void compute_circles(CircleDiagram& cc) {
    std::vector<int> points;
    for (int p = cc.lo; p <= cc.hi; ++p)
        if (!std::binary_search(cc.crosses.begin(), cc.crosses.end(), p)) points.push_back(p);
    const auto index_of = [&](int p) {
        return static_cast<int>(std::lower_bound(points.begin(), points.end(), p) - points.begin());
    };
    Dsu dsu(static_cast<int>(points.size()));
    std::vector<int> degree(points.size(), 0);
    const auto join = [&](const std::vector<Arc>& arcs) {
        for (const Arc& a : arcs) {
            dsu.unite(index_of(a.s), index_of(a.t));
            ++degree[index_of(a.s)];
            ++degree[index_of(a.t)];
        }
    };
    join(cc.lower);
    join(cc.upper);
    for (int d : degree)
        if (d != 2) throw std::logic_error("circle diagram: point without two arc ends");

    std::map<int, Circle> by_root;
    for (size_t i = 0; i < points.size(); ++i) by_root[dsu.find(static_cast<int>(i))].points.push_back(points[i]);

    const int n = cc.lower_tableau.type.n;
    const auto green_on = [&](const std::vector<Arc>& arcs, const Circle& c) {
        for (const Arc& a : arcs)
            if (a.colour == ArcColour::Green &&
                std::binary_search(c.points.begin(), c.points.end(), a.s))
                return true;
        return false;
    };
    cc.circles.clear();
    for (auto& [root, circle] : by_root) {
        std::sort(circle.points.begin(), circle.points.end());
        int left = 0, right = 0;
        for (int p : circle.points) {
            if (p < 1) ++left;
            if (p > n) ++right;
        }
        if (left > 1 || right > 1)
            circle.colour = CircleColour::Red;
        else if (green_on(cc.lower, circle) || green_on(cc.upper, circle))
            circle.colour = CircleColour::Green;
        else
            circle.colour = CircleColour::Black;
        cc.circles.push_back(std::move(circle));
    }
    std::sort(cc.circles.begin(), cc.circles.end(),
              [](const Circle& a, const Circle& b) { return a.points[0] < b.points[0]; });
}

}  // namespace

CircleDiagram circle_diagram(const RowStrictTableau& w, const RowStrictTableau& w2) {
    if (w.type != w2.type) throw std::invalid_argument("circle_diagram: type mismatch");
    const auto ec1 = extended_cup_rowstrict(w);
    const auto ec2 = extended_cup_rowstrict(w2);
    CircleDiagram cc;
    cc.lower_tableau = w;
    cc.upper_tableau = w2;
    // span of the occupied points; crosses fill 1..n even when no arc does
    cc.lo = std::min({ec1.lo, ec2.lo, 1});
    cc.hi = std::max({ec1.hi, ec2.hi, w.type.n});
    cc.crosses = w.type.crosses();
    cc.lower = ec1.arcs;
    cc.upper = ec2.arcs;
    // surplus points occupied by only one half get green closure arcs, the
    // outermost left one joined to the outermost right one and so on inwards
    std::vector<int> left_surplus, right_surplus;
    const int n = w.type.n;
    for (int p = cc.lo; p <= cc.hi; ++p) {
        if (p >= 1 && p <= n) continue;
        const bool in1 = ec1.arc_at(p).has_value();
        const bool in2 = ec2.arc_at(p).has_value();
        if (in1 == in2) continue;
        (p < 1 ? left_surplus : right_surplus).push_back(p);
    }
    if (left_surplus.size() != right_surplus.size())
        throw std::logic_error("circle_diagram: unbalanced surplus");
    std::sort(left_surplus.begin(), left_surplus.end());
    std::sort(right_surplus.begin(), right_surplus.end(), std::greater<int>());
    for (size_t i = 0; i < left_surplus.size(); ++i)
        cc.upper.push_back({left_surplus[i], right_surplus[i], ArcColour::Green});
    std::sort(cc.upper.begin(), cc.upper.end());
    compute_circles(cc);
    return cc;
}

CircleDiagram cc_plus(CircleDiagram cc) {
    const TableauType& type = cc.lower_tableau.type;
    const int n = type.n, k = type.k;
    const int r = static_cast<int>(type.doubles().size());
    const int target = -(n - k) + r;  // leftmost point that must be occupied
    while (cc.lo > target) {
        const Arc pad{cc.lo - 1, cc.hi + 1, ArcColour::Green};
        cc.lower.push_back(pad);
        cc.upper.push_back(pad);
        --cc.lo;
        ++cc.hi;
    }
    std::sort(cc.lower.begin(), cc.lower.end());
    std::sort(cc.upper.begin(), cc.upper.end());
    compute_circles(cc);
    return cc;
}

CircleDiagram cc_plus(const RowStrictTableau& w, const RowStrictTableau& w2) {
    return cc_plus(circle_diagram(w, w2));
}

bool is_empty_intersection(const CircleDiagram& cc) { return cc.has_red(); }

}  // namespace twoblock
