#include "twoblock/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoblock {

namespace {

const char* colour_str(ArcColour c) { return c == ArcColour::Black ? "black" : "green"; }
const char* colour_str(CircleColour c) {
    return c == CircleColour::Black ? "black" : c == CircleColour::Green ? "green" : "red";
}
const char* kind_str(DepLabel l) {
    return l == DepLabel::Ninv ? "Ninv" : l == DepLabel::Evec ? "Evec" : "Fvec";
}

Json arc_json(const Arc& a) {
    return Json{{"s", a.s}, {"t", a.t}, {"colour", colour_str(a.colour)}};
}

Json arcs_json(const std::vector<Arc>& arcs) {
    Json out = Json::array();
    for (const Arc& a : arcs) out.push_back(arc_json(a));
    return out;
}

}  // namespace

Json tableau_json(const RowStrictTableau& w) {
    return Json{{"n", w.type.n},
                {"k", w.type.k},
                {"type", w.type.dims},
                {"top", w.top_row()},
                {"bottom", w.bottom_row()}};
}

RowStrictTableau tableau_from_json(const Json& j) {
    const TableauType type(j.at("n").get<int>(), j.at("k").get<int>(),
                           j.at("type").get<std::vector<int>>());
    const auto top = j.at("top").get<std::vector<int>>();
    const auto bottom = j.at("bottom").get<std::vector<int>>();
    // a double entry d sits at the two positions d-1, d, so build the symbol
    // string from the entry sets rather than per position
    std::vector<Sym> sym(type.n, Sym{});
    auto place = [&](int e, Sym s) {
        if (e < 1 || e > type.n || (s == Sym::Cross && e < 2) || sym[e - 1] != Sym{})
            throw std::invalid_argument("tableau json: bad entry");
        sym[e - 1] = s;
        if (s == Sym::Cross) {
            if (sym[e - 2] != Sym{}) throw std::invalid_argument("tableau json: bad entry");
            sym[e - 2] = Sym::Cross;
        }
    };
    for (int e : top) {
        const bool doubled = std::find(bottom.begin(), bottom.end(), e) != bottom.end();
        place(e, doubled ? Sym::Cross : Sym::Wedge);
    }
    for (int e : bottom)
        if (std::find(top.begin(), top.end(), e) == top.end()) place(e, Sym::Vee);
    for (Sym s : sym)
        if (s == Sym{}) throw std::invalid_argument("tableau json: missing entry");
    return RowStrictTableau(type, std::move(sym));
}

Json diagram_json(const ExtendedCupDiagram& ec, const RowStrictTableau& w,
                  const std::string& flavour) {
    return Json{{"flavour", flavour},
                {"tableau", tableau_json(w)},
                {"points", {ec.lo, ec.hi}},
                {"crosses", ec.crosses},
                {"arcs", arcs_json(ec.arcs)}};
}

ExtendedCupDiagram diagram_from_json(const Json& j) {
    const RowStrictTableau w = tableau_from_json(j.at("tableau"));
    const std::string flavour = j.at("flavour").get<std::string>();
    ExtendedCupDiagram ec;
    if (flavour == "cup")
        ec = cup_diagram(w);
    else if (flavour == "standard")
        ec = extended_cup_standard(w);
    else if (flavour == "rowstrict")
        ec = extended_cup_rowstrict(w);
    else
        throw std::invalid_argument("diagram json: unknown flavour " + flavour);
    if (arcs_json(ec.arcs) != j.at("arcs"))
        throw std::invalid_argument("diagram json: arcs do not match the tableau");
    return ec;
}

Json circle_json(const CircleDiagram& cc, bool plus) {
    Json circles = Json::array();
    for (const Circle& c : cc.circles)
        circles.push_back(Json{{"points", c.points}, {"colour", colour_str(c.colour)}});
    return Json{{"w", tableau_json(cc.lower_tableau)},
                {"w2", tableau_json(cc.upper_tableau)},
                {"plus", plus},
                {"points", {cc.lo, cc.hi}},
                {"crosses", cc.crosses},
                {"lower", arcs_json(cc.lower)},
                {"upper", arcs_json(cc.upper)},
                {"circles", circles}};
}

CircleDiagram circle_from_json(const Json& j) {
    const RowStrictTableau w = tableau_from_json(j.at("w"));
    const RowStrictTableau w2 = tableau_from_json(j.at("w2"));
    CircleDiagram cc = j.at("plus").get<bool>() ? cc_plus(w, w2) : circle_diagram(w, w2);
    if (circle_json(cc, j.at("plus").get<bool>()) != j)
        throw std::invalid_argument("circle json: diagram does not match the tableaux");
    return cc;
}

Json graph_json(const DependenceGraph& g, const RowStrictTableau& w,
                const RowStrictTableau* w2) {
    Json arcs = Json::array();
    for (const DepArc& a : g.arcs)
        arcs.push_back(Json{{"s", a.s},
                            {"t", a.t},
                            {"colour", colour_str(a.colour)},
                            {"label", Json{{"kind", kind_str(a.label)}, {"l", a.l}}},
                            {"layer", a.layer == Layer::Lower ? "lower" : "upper"}});
    Json out{{"kind", g.pair ? "pair" : "single"}, {"w", tableau_json(w)}};
    if (w2) out["w2"] = tableau_json(*w2);
    out["nodes"] = {g.lo_node, g.hi_node};
    out["arcs"] = std::move(arcs);
    return out;
}

DependenceGraph graph_from_json(const Json& j) {
    const RowStrictTableau w = tableau_from_json(j.at("w"));
    DependenceGraph g;
    if (j.at("kind").get<std::string>() == "pair") {
        const RowStrictTableau w2 = tableau_from_json(j.at("w2"));
        g = dep_graph_pair(w, w2);
        if (graph_json(g, w, &w2) != j)
            throw std::invalid_argument("graph json: arcs do not match the tableaux");
    } else {
        g = dep_graph_rowstrict(w);
        if (graph_json(g, w, nullptr) != j)
            throw std::invalid_argument("graph json: arcs do not match the tableau");
    }
    return g;
}

Json subspace_json(const Subspace& s) {
    Json rows = Json::array();
    for (const Vec& row : s.basis) {
        Json r = Json::array();
        for (const Rational& x : row) r.push_back(rational_to_string(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

Json flag_json(const Flag& f, const TableauType& type) {
    Json spaces = Json::array();
    for (int d : type.dims) spaces.push_back(subspace_json(f.at(d)));
    return Json{{"type", type.dims}, {"spaces", std::move(spaces)}};
}

Json algebra_json(const AlgebraTable& t) {
    Json basis = Json::array();
    for (const BasisElement& e : t.basis)
        basis.push_back(Json{{"w", e.w.row_string()},
                             {"w2", e.w2.row_string()},
                             {"assignment", letters_to_string(e.letters)}});
    Json products = Json::array();
    for (size_t i = 0; i < t.products.size(); ++i)
        for (size_t j = 0; j < t.products[i].size(); ++j) {
            if (t.products[i][j].empty()) continue;
            Json result = Json::array();
            for (const auto& [k, coeff] : t.products[i][j])
                result.push_back(Json{{"k", k}, {"coeff", rational_to_string(coeff)}});
            products.push_back(Json{{"i", i}, {"j", j}, {"result", std::move(result)}});
        }
    Json unit = nullptr;
    if (t.unit) unit = *t.unit;
    return Json{{"n", t.type.n},
                {"k", t.type.k},
                {"type", t.type.dims},
                {"dimension", t.total_dimension},
                {"associative", t.associative},
                {"unit", std::move(unit)},
                {"basis", std::move(basis)},
                {"products", std::move(products)}};
}

}  // namespace twoblock
