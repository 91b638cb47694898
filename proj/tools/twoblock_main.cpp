#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "twoblock/json_io.hpp"
#include "twoblock/render.hpp"
#include "twoblock/tqft.hpp"
#include "twoblock/verify.hpp"

namespace {

using namespace twoblock;

struct Options {
    int n = 0, k = 0;
    std::string type;    // comma separated dims, empty = full type
    std::string format = "ascii";
    std::string out;     // output path, empty = stdout
    std::string w, w2;   // "top/bottom" tableaux
    bool standard = false, cup = false, graph = false, plus = false, all = false;
    std::string suite;
    int max_n = 0;       // 0 = per-suite default
    int schedules = 100;
};

TableauType type_from(const Options& o) {
    if (o.type.empty()) return full_type(o.n, o.k);
    std::vector<int> dims;
    std::stringstream ss(o.type);
    std::string item;
    while (std::getline(ss, item, ',')) dims.push_back(std::stoi(item));
    return TableauType(o.n, o.k, std::move(dims));
}

long long max_dim_cap() {
    if (const char* env = std::getenv("CALC_MAX_DIM")) {
        const long long v = std::strtoll(env, nullptr, 10);
        if (v > 0) return v;
    }
    return 4096;
}

std::string poincare_string(const GradedSpace& gs) {
    if (gs.is_zero) return "0";
    const auto p = gs.poincare();
    std::string out;
    for (size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0) continue;
        if (!out.empty()) out += "+";
        if (p[d] != 1 || d == 0) out += std::to_string(p[d]);
        if (d > 0) out += p[d] != 1 ? "*q^" + std::to_string(d) : "q^" + std::to_string(d);
    }
    return out;
}

std::string run_enumerate(const Options& o) {
    const TableauType type = type_from(o);
    const auto list = o.standard ? enumerate_standard(type) : enumerate_row_strict(type);
    if (o.format == "json") {
        Json items = Json::array();
        for (const auto& w : list) {
            Json j = tableau_json(w);
            j["weight"] = w.weight_string();
            j["standard"] = w.is_standard();
            items.push_back(std::move(j));
        }
        return Json{{"n", type.n},
                    {"k", type.k},
                    {"type", type.dims},
                    {"standard_only", o.standard},
                    {"count", list.size()},
                    {"tableaux", std::move(items)}}
                   .dump(2) +
               "\n";
    }
    std::string out;
    for (const auto& w : list) out += w.row_string() + "  " + w.weight_string() + "\n";
    out += "count: " + std::to_string(list.size()) + "\n";
    return out;
}

std::string run_diagram(const Options& o) {
    const RowStrictTableau w = parse_tableau(o.w);
    if (!o.w2.empty()) {
        const RowStrictTableau w2 = parse_tableau(o.w2);
        if (o.graph) {
            const DependenceGraph g = dep_graph_pair(w, w2);
            if (o.format == "json") return graph_json(g, w, &w2).dump(2) + "\n";
            if (o.format == "svg") return svg_graph(g);
            return ascii_graph(g);
        }
        const CircleDiagram cc = o.plus ? cc_plus(w, w2) : circle_diagram(w, w2);
        if (o.format == "json") return circle_json(cc, o.plus).dump(2) + "\n";
        if (o.format == "svg") return svg_diagram(cc);
        return ascii_diagram(cc);
    }
    if (o.graph) {
        const DependenceGraph g = dep_graph_rowstrict(w);
        if (o.format == "json") return graph_json(g, w, nullptr).dump(2) + "\n";
        if (o.format == "svg") return svg_graph(g);
        return ascii_graph(g);
    }
    const ExtendedCupDiagram ec = o.cup ? cup_diagram(w) : extended_cup_rowstrict(w);
    const std::string flavour = o.cup ? "cup" : "rowstrict";
    if (o.format == "json") return diagram_json(ec, w, flavour).dump(2) + "\n";
    if (o.format == "svg") return svg_diagram(ec);
    return ascii_diagram(ec);
}

std::string run_cohomology(const Options& o) {
    std::vector<std::pair<RowStrictTableau, RowStrictTableau>> pairs;
    if (o.all) {
        const auto rs = enumerate_row_strict(type_from(o));
        for (const auto& a : rs)
            for (const auto& b : rs) pairs.emplace_back(a, b);
    } else {
        pairs.emplace_back(parse_tableau(o.w), parse_tableau(o.w2));
    }
    Json rows = Json::array();
    std::string text;
    for (const auto& [a, b] : pairs) {
        const CircleDiagram cc = circle_diagram(a, b);
        const GradedSpace gs = f_of(cc);
        const std::string poly =
            gs.is_zero ? "empty intersection" : poincare_string(gs);
        if (o.format == "json") {
            rows.push_back(Json{{"w", a.row_string()},
                                {"w2", b.row_string()},
                                {"black", cc.count(CircleColour::Black)},
                                {"green", cc.count(CircleColour::Green)},
                                {"red", cc.count(CircleColour::Red)},
                                {"dimension", gs.dimension()},
                                {"poincare", poly}});
        } else {
            text += a.row_string() + "  " + b.row_string() +
                    "  black=" + std::to_string(cc.count(CircleColour::Black)) +
                    " green=" + std::to_string(cc.count(CircleColour::Green)) +
                    " red=" + std::to_string(cc.count(CircleColour::Red)) +
                    " dim=" + std::to_string(gs.dimension()) + "  " + poly + "\n";
        }
    }
    if (o.format == "json") return Json{{"pairs", std::move(rows)}}.dump(2) + "\n";
    return text;
}

std::string run_algebra(const Options& o) {
    const AlgebraTable tab = algebra_table(type_from(o), max_dim_cap());
    if (o.format == "json") return algebra_json(tab).dump(2) + "\n";
    std::string out = "dimension: " + std::to_string(tab.total_dimension) + "\n";
    out += std::string("associative: ") + (tab.associative ? "yes" : "no") + "\n";
    if (tab.unit) {
        out += "unit:";
        for (int i : *tab.unit) out += " " + std::to_string(i);
        out += "\n";
    } else {
        out += "unit: none\n";
    }
    for (size_t i = 0; i < tab.basis.size(); ++i)
        out += std::to_string(i) + ": " + tab.basis[i].w.row_string() + " | " +
               tab.basis[i].w2.row_string() + " | " +
               letters_to_string(tab.basis[i].letters) + "\n";
    for (size_t i = 0; i < tab.basis.size(); ++i)
        for (size_t j = 0; j < tab.basis.size(); ++j) {
            if (tab.products[i][j].empty()) continue;
            out += std::to_string(i) + "*" + std::to_string(j) + " =";
            for (const auto& [k, c] : tab.products[i][j]) {
                out += " ";
                if (c != Rational(1)) out += rational_to_string(c) + "*";
                out += std::to_string(k);
            }
            out += "\n";
        }
    return out;
}

int run_verify(const Options& o, std::string& out) {
    const auto pick = [&](int fallback) { return o.max_n > 0 ? o.max_n : fallback; };
    SuiteResult res;
    if (o.suite == "counts")
        res = verify_counts(pick(10));
    else if (o.suite == "emptiness")
        res = verify_emptiness(pick(6));
    else if (o.suite == "fixedpoints")
        res = verify_fixedpoints(pick(6));
    else if (o.suite == "associativity")
        res = verify_associativity(pick(5), o.schedules);
    else if (o.suite == "relations")
        res = verify_relations();
    else if (o.suite == "bogen")
        res = verify_bogen(pick(8));
    else if (o.suite == "commuting-square")
        res = verify_commuting_square(pick(6));
    else
        throw CLI::ValidationError("verify", "unknown suite " + o.suite);
    out = "suite " + res.suite + ": " + (res.passed ? "PASS" : "FAIL") + " (" + res.detail +
          ")\n";
    if (!res.passed) out += "counterexample: " + res.counterexample + "\n";
    return res.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diagram calculus for two-block Spaltenstein varieties"};
    app.require_subcommand(1);
    Options o;
    int rc = 0;
    std::string output;

    const auto add_common = [&](CLI::App* cmd, bool with_format = true) {
        if (with_format)
            cmd->add_option("--format", o.format, "output format")
                ->check(CLI::IsMember({"ascii", "json", "svg"}));
        cmd->add_option("--out", o.out, "write output to a file");
    };
    const auto add_type = [&](CLI::App* cmd, bool required) {
        auto* n = cmd->add_option("--n", o.n, "number of boxes");
        auto* k = cmd->add_option("--k", o.k, "bottom row length");
        if (required) {
            n->required();
            k->required();
        }
        cmd->add_option("--type", o.type, "comma separated dimension type (default full)");
    };

    auto* enumerate = app.add_subcommand("enumerate", "list tableaux of a type");
    add_type(enumerate, true);
    enumerate->add_flag("--standard", o.standard, "standard tableaux only");
    add_common(enumerate);
    enumerate->callback([&] { output = run_enumerate(o); });

    auto* diagram = app.add_subcommand("diagram", "cup/circle diagrams and dependence graphs");
    diagram->add_option("--w", o.w, "tableau, top/bottom")->required();
    diagram->add_option("--w2", o.w2, "second tableau for a circle diagram");
    diagram->add_flag("--cup", o.cup, "plain cup diagram C(w)");
    diagram->add_flag("--graph", o.graph, "dependence graph");
    diagram->add_flag("--plus", o.plus, "padded circle diagram CC+");
    add_common(diagram);
    diagram->callback([&] { output = run_diagram(o); });

    auto* cohomology = app.add_subcommand("cohomology", "intersection cohomology table");
    cohomology->add_option("--w", o.w, "tableau, top/bottom");
    cohomology->add_option("--w2", o.w2, "second tableau");
    cohomology->add_flag("--all", o.all, "full matrix over a type");
    add_type(cohomology, false);
    add_common(cohomology);
    cohomology->callback([&] {
        if (!o.all && (o.w.empty() || o.w2.empty()))
            throw CLI::ValidationError("cohomology", "need --w and --w2, or --all with a type");
        output = run_cohomology(o);
    });

    auto* algebra = app.add_subcommand("algebra", "structure constants of the arc algebra");
    add_type(algebra, true);
    add_common(algebra);
    algebra->callback([&] { output = run_algebra(o); });

    auto* verify = app.add_subcommand("verify", "exhaustive property suites");
    verify->add_option("--suite", o.suite, "one of counts, emptiness, fixedpoints, "
                                           "associativity, relations, bogen, commuting-square")
        ->required();
    verify->add_option("--max-n", o.max_n, "largest rank to sweep (default per suite)");
    verify->add_option("--schedules", o.schedules, "random schedules per product");
    add_common(verify, false);
    verify->callback([&] { rc = run_verify(o, output); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }

    if (!o.out.empty()) {
        std::ofstream f(o.out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << o.out << "\n";
            return 2;
        }
        f << output;
    } else {
        std::cout << output;
    }
    return rc;
}
