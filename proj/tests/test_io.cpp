#include <doctest.h>

#include <string>
#include <vector>

#include "twoblock/json_io.hpp"
#include "twoblock/render.hpp"

using namespace twoblock;

TEST_SUITE("io") {

TEST_CASE("tableau json") {
    RowStrictTableau w = parse_tableau("6543/731");
    Json j = tableau_json(w);
    CHECK(j["n"] == 7);
    CHECK(j["k"] == 3);
    CHECK(j["type"] == Json::array({1, 3, 4, 5, 6, 7}));
    CHECK(j["top"] == Json::array({6, 5, 4, 3}));
    CHECK(j["bottom"] == Json::array({7, 3, 1}));
    CHECK(tableau_from_json(j) == w);

    // string -> json -> string round trip
    Json reparsed = Json::parse(j.dump());
    CHECK(tableau_from_json(reparsed) == w);

    for (const char* s : {"43/21", "21/43", "2/2", "21/", "431/53"}) {
        RowStrictTableau t = parse_tableau(s);
        CHECK(tableau_from_json(tableau_json(t)) == t);
    }
}

TEST_CASE("diagram json") {
    for (const char* s : {"6543/731", "7543/631", "43/21", "41/32", "2/2"}) {
        RowStrictTableau w = parse_tableau(s);
        ExtendedCupDiagram e = extended_cup_rowstrict(w);
        Json j = diagram_json(e, w, "rowstrict");
        CHECK(j["flavour"] == "rowstrict");
        CHECK(j["points"] == Json::array({e.lo, e.hi}));
        CHECK(diagram_from_json(j) == e);

        ExtendedCupDiagram c = cup_diagram(w);
        CHECK(diagram_from_json(diagram_json(c, w, "cup")) == c);
    }
    // colours appear as words
    Json j = diagram_json(extended_cup_rowstrict(parse_tableau("6543/731")),
                          parse_tableau("6543/731"), "rowstrict");
    bool seen_green = false;
    for (const auto& a : j["arcs"])
        if (a["colour"] == "green") seen_green = true;
    CHECK(seen_green);
}

TEST_CASE("circle json") {
    RowStrictTableau w = parse_tableau("6543/731"), w2 = parse_tableau("7543/631");
    CircleDiagram cc = circle_diagram(w, w2);
    Json j = circle_json(cc, false);
    CHECK(j["plus"] == false);
    CHECK(j["w"]["top"] == Json::array({6, 5, 4, 3}));
    CHECK(j["circles"].size() == 3);
    CircleDiagram back = circle_from_json(j);
    CHECK(back.lo == cc.lo);
    CHECK(back.hi == cc.hi);
    CHECK(back.lower == cc.lower);
    CHECK(back.upper == cc.upper);
    CHECK(back.circles.size() == cc.circles.size());

    Json jp = circle_json(cc_plus(w, w2), true);
    CHECK(jp["plus"] == true);
    CHECK(circle_from_json(jp).lower.size() == cc_plus(w, w2).lower.size());
}

TEST_CASE("graph json") {
    RowStrictTableau w = parse_tableau("6543/731");
    DependenceGraph g = dep_graph_rowstrict(w);
    Json j = graph_json(g, w, nullptr);
    CHECK(j["kind"] == "single");
    CHECK(j["nodes"] == Json::array({g.lo_node, g.hi_node}));
    CHECK(graph_from_json(j) == g);

    RowStrictTableau w2 = parse_tableau("7543/631");
    DependenceGraph p = dep_graph_pair(w, w2);
    Json jp = graph_json(p, w, &w2);
    CHECK(jp["kind"] == "pair");
    CHECK(graph_from_json(jp) == p);

    // label kinds spelled out
    bool seen_fvec = false, seen_ninv = false;
    for (const auto& a : j["arcs"]) {
        if (a["label"]["kind"] == "Fvec") seen_fvec = true;
        if (a["label"]["kind"] == "Ninv") seen_ninv = true;
    }
    CHECK(seen_fvec);
    CHECK(seen_ninv);
}

TEST_CASE("subspace and flag json") {
    Subspace s(2, Matrix{{Rational(3, 2), Rational(1)}});
    Json j = subspace_json(s);
    CHECK(j.size() == 1);
    CHECK(j[0][0] == "1");
    CHECK(j[0][1] == "2/3");

    Ambient amb(4, 2);
    RowStrictTableau w = parse_tableau("21/43");
    Json f = flag_json(fixed_point_flag(amb, w), w.type);
    CHECK(f["type"] == Json::array({1, 2, 3, 4}));
    CHECK(f["spaces"].size() == 4);
}

TEST_CASE("algebra json") {
    AlgebraTable tab = algebra_table(full_type(2, 1));
    Json j = algebra_json(tab);
    CHECK(j["n"] == 2);
    CHECK(j["k"] == 1);
    CHECK(j["dimension"] == 5);
    CHECK(j["associative"] == true);
    CHECK(j["basis"].size() == 5);
    CHECK(!j["unit"].is_null());
    for (const auto& p : j["products"]) {
        CHECK(p.contains("i"));
        CHECK(p.contains("j"));
        CHECK(p.contains("result"));
        for (const auto& term : p["result"]) {
            CHECK(term.contains("k"));
            CHECK(term["coeff"].is_string());
        }
    }
}

TEST_CASE("ascii rendering") {
    std::string one = ascii_diagram(extended_cup_rowstrict(parse_tableau("6543/731")));
    CHECK(one.find("-1") != std::string::npos);  // leftmost virtual point label
    CHECK(one.find('g') != std::string::npos);
    CHECK(one.find('b') != std::string::npos);
    CHECK(one == ascii_diagram(extended_cup_rowstrict(parse_tableau("6543/731"))));

    std::string two = ascii_diagram(circle_diagram(parse_tableau("6543/731"),
                                                   parse_tableau("7543/631")));
    CHECK(two.find("circle") != std::string::npos);
    CHECK(two.find("green") != std::string::npos);
    CHECK(two.find("black") != std::string::npos);

    std::string red = ascii_diagram(circle_diagram(parse_tableau("6543/731"),
                                                   parse_tableau("7653/431")));
    CHECK(red.find("red") != std::string::npos);

    std::string graph = ascii_graph(dep_graph_rowstrict(parse_tableau("6543/731")));
    CHECK(graph.find("N^-2") != std::string::npos);
    CHECK(graph.find("e_3") != std::string::npos);
    CHECK(graph.find("f_3") != std::string::npos);
}

TEST_CASE("dep labels") {
    CHECK(dep_label_string(DepArc{0, 4, ArcColour::Black, DepLabel::Ninv, 2, Layer::Lower}) ==
          "N^-2");
    CHECK(dep_label_string(DepArc{-1, 5, ArcColour::Green, DepLabel::Evec, 3, Layer::Lower}) ==
          "e_3");
    CHECK(dep_label_string(DepArc{7, 9, ArcColour::Green, DepLabel::Fvec, 3, Layer::Lower}) ==
          "f_3");
}

TEST_CASE("svg rendering") {
    std::string svg = svg_diagram(extended_cup_rowstrict(parse_tableau("6543/731")));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(svg.find("#2a7f2a") != std::string::npos);       // green arcs present
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
    CHECK(svg.find("#000") != std::string::npos);          // black arc present

    std::string red = svg_diagram(circle_diagram(parse_tableau("6543/731"),
                                                 parse_tableau("7653/431")));
    CHECK(red.find("#c00") != std::string::npos);

    std::string graph = svg_graph(dep_graph_pair(parse_tableau("6543/731"),
                                                 parse_tableau("7543/631")));
    CHECK(graph.rfind("<svg", 0) == 0);
    CHECK(graph.find("N^-1") != std::string::npos);
}

}  // TEST_SUITE
