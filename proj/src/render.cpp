#include "twoblock/render.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>
#include <vector>

namespace twoblock {

namespace {

struct Columns {
    int lo = 1, width = 4;
    int anchor(int p) const { return (p - lo) * width + width - 1; }
};

Columns columns_for(int lo, int hi, int minw) {
    int m = 1;
    for (int p = lo; p <= hi; ++p)
        m = std::max(m, static_cast<int>(std::to_string(p).size()));
    return {lo, std::max(minw, m + 2)};
}

std::string label_line(const Columns& cols, int lo, int hi) {
    std::string out;
    for (int p = lo; p <= hi; ++p) {
        const std::string l = std::to_string(p);
        out += std::string(cols.width - l.size(), ' ');
        out += l;
    }
    return out;
}

char colour_letter(ArcColour c) { return c == ArcColour::Black ? 'b' : 'g'; }
char colour_letter(CircleColour c) {
    return c == CircleColour::Black ? 'b' : c == CircleColour::Green ? 'g' : 'r';
}
const char* colour_name(CircleColour c) {
    return c == CircleColour::Black ? "black" : c == CircleColour::Green ? "green" : "red";
}

struct ArcDraw {
    int s = 0, t = 0;
    char letter = 'b';
    std::string label;
};

// greedy row packing, innermost arcs first, so nesting reads as brackets
std::vector<std::string> arc_rows(const Columns& cols, std::vector<ArcDraw> arcs) {
    std::sort(arcs.begin(), arcs.end(), [](const ArcDraw& a, const ArcDraw& b) {
        return std::pair(a.t - a.s, a.s) < std::pair(b.t - b.s, b.s);
    });
    std::vector<std::string> rows;
    for (const ArcDraw& a : arcs) {
        const int x1 = cols.anchor(a.s), x2 = cols.anchor(a.t);
        size_t r = 0;
        for (; r < rows.size(); ++r) {
            bool free = true;
            for (int c = x1; c <= x2 && free; ++c)
                free = c >= static_cast<int>(rows[r].size()) || rows[r][c] == ' ';
            if (free) break;
        }
        if (r == rows.size()) rows.emplace_back();
        std::string& row = rows[r];
        if (static_cast<int>(row.size()) < x2 + 1) row.resize(x2 + 1, ' ');
        for (int c = x1 + 1; c < x2; ++c) row[c] = '-';
        row[x1] = a.letter;
        row[x2] = a.letter;
        if (!a.label.empty()) {
            const int len = static_cast<int>(a.label.size());
            int at = (x1 + x2 + 1 - len) / 2;
            at = std::max(at, x1 + 1);
            if (at + len <= x2) row.replace(at, len, a.label);
        }
    }
    return rows;
}

void append_rows(std::string& out, const std::vector<std::string>& rows, bool reversed) {
    if (reversed)
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) out += *it + "\n";
    else
        for (const std::string& r : rows) out += r + "\n";
}

std::string marker_line(const Columns& cols, int lo, int hi,
                        const std::function<char(int)>& mark) {
    std::string out(cols.anchor(hi) + 1, ' ');
    for (int p = lo; p <= hi; ++p) out[cols.anchor(p)] = mark(p);
    return out;
}

// --- svg helpers ---

constexpr int kStep = 40, kMargin = 40, kBand = 30;

std::string svg_style(CircleColour c) {
    switch (c) {
        case CircleColour::Black: return "stroke=\"#000\" stroke-width=\"1.5\" fill=\"none\"";
        case CircleColour::Green:
            return "stroke=\"#2a7f2a\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\" fill=\"none\"";
        case CircleColour::Red: return "stroke=\"#c00\" stroke-width=\"3.5\" fill=\"none\"";
    }
    return {};
}
std::string svg_style(ArcColour c) {
    return svg_style(c == ArcColour::Black ? CircleColour::Black : CircleColour::Green);
}

struct SvgArc {
    int s = 0, t = 0;
    bool up = false;
    std::string style;
    std::string label;
};

std::string svg_scene(int lo, int hi, const std::vector<int>& crosses,
                      const std::vector<SvgArc>& arcs,
                      const std::function<std::string(int)>& point_label) {
    const auto x = [&](int p) { return kMargin + (p - lo) * kStep; };
    int up = 0, down = 0;
    for (const SvgArc& a : arcs) {
        const int r = (a.t - a.s) * kStep / 2;
        (a.up ? up : down) = std::max(a.up ? up : down, r);
    }
    const int base = kBand + up;
    const int width = 2 * kMargin + (hi - lo) * kStep;
    const int height = base + down + kBand;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<g font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (int p = lo; p <= hi; ++p) {
        const std::string l = point_label(p);
        if (std::find(crosses.begin(), crosses.end(), p) != crosses.end()) {
            out << "<path d=\"M " << x(p) - 4 << ' ' << base - 4 << " L " << x(p) + 4 << ' '
                << base + 4 << " M " << x(p) - 4 << ' ' << base + 4 << " L " << x(p) + 4 << ' '
                << base - 4 << "\" stroke=\"#000\" stroke-width=\"1.5\"/>\n";
        } else {
            out << "<circle cx=\"" << x(p) << "\" cy=\"" << base << "\" r=\"2.5\" fill=\"#000\"/>\n";
        }
        if (!l.empty())
            out << "<text x=\"" << x(p) << "\" y=\"" << height - 8 << "\">" << l << "</text>\n";
    }
    for (const SvgArc& a : arcs) {
        const int r = (a.t - a.s) * kStep / 2;
        out << "<path d=\"M " << x(a.s) << ' ' << base << " A " << r << ' ' << r << " 0 0 "
            << (a.up ? 1 : 0) << ' ' << x(a.t) << ' ' << base << "\" " << a.style << "/>\n";
        if (!a.label.empty())
            out << "<text x=\"" << (x(a.s) + x(a.t)) / 2 << "\" y=\""
                << (a.up ? base - r - 6 : base + r + 14) << "\">" << a.label << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string number_label(int p) { return std::to_string(p); }

}  // namespace

std::string dep_label_string(const DepArc& a) {
    switch (a.label) {
        case DepLabel::Ninv: return "N^-" + std::to_string(a.l);
        case DepLabel::Evec: return "e_" + std::to_string(a.l);
        case DepLabel::Fvec: return "f_" + std::to_string(a.l);
    }
    return {};
}

std::string ascii_diagram(const ExtendedCupDiagram& ec) {
    const Columns cols = columns_for(ec.lo, ec.hi, 4);
    std::string out = label_line(cols, ec.lo, ec.hi) + "\n";
    out += marker_line(cols, ec.lo, ec.hi,
                       [&](int p) { return ec.is_cross(p) ? 'x' : 'o'; }) + "\n";
    std::vector<ArcDraw> draws;
    for (const Arc& a : ec.arcs) draws.push_back({a.s, a.t, colour_letter(a.colour), {}});
    append_rows(out, arc_rows(cols, std::move(draws)), false);
    return out;
}

std::string ascii_diagram(const CircleDiagram& cc) {
    const Columns cols = columns_for(cc.lo, cc.hi, 4);
    const auto draws_of = [&](const std::vector<Arc>& arcs) {
        std::vector<ArcDraw> draws;
        for (const Arc& a : arcs)
            draws.push_back({a.s, a.t, colour_letter(cc.circle_of(a.s).colour), {}});
        return draws;
    };
    std::string out;
    append_rows(out, arc_rows(cols, draws_of(cc.upper)), true);
    out += label_line(cols, cc.lo, cc.hi) + "\n";
    const auto is_cross = [&](int p) {
        return std::binary_search(cc.crosses.begin(), cc.crosses.end(), p);
    };
    out += marker_line(cols, cc.lo, cc.hi, [&](int p) { return is_cross(p) ? 'x' : 'o'; }) + "\n";
    append_rows(out, arc_rows(cols, draws_of(cc.lower)), false);
    for (const Circle& c : cc.circles) {
        out += "circle {";
        for (size_t i = 0; i < c.points.size(); ++i)
            out += (i ? " " : "") + std::to_string(c.points[i]);
        out += "} ";
        out += colour_name(c.colour);
        out += "\n";
    }
    return out;
}

std::string ascii_graph(const DependenceGraph& g) {
    const Columns cols = columns_for(g.lo_node, g.hi_node, 6);
    const auto draws_of = [&](Layer layer) {
        std::vector<ArcDraw> draws;
        for (const DepArc& a : g.arcs)
            if (a.layer == layer)
                draws.push_back({a.s, a.t, colour_letter(a.colour), dep_label_string(a)});
        return draws;
    };
    std::string out;
    if (g.pair) append_rows(out, arc_rows(cols, draws_of(Layer::Upper)), true);
    out += label_line(cols, g.lo_node, g.hi_node) + "\n";
    out += marker_line(cols, g.lo_node, g.hi_node,
                       [&](int p) { return g.is_labelled(p) ? '*' : '.'; }) + "\n";
    append_rows(out, arc_rows(cols, draws_of(Layer::Lower)), false);
    return out;
}

std::string svg_diagram(const ExtendedCupDiagram& ec) {
    std::vector<SvgArc> arcs;
    for (const Arc& a : ec.arcs) arcs.push_back({a.s, a.t, false, svg_style(a.colour), {}});
    return svg_scene(ec.lo, ec.hi, ec.crosses, arcs, number_label);
}

std::string svg_diagram(const CircleDiagram& cc) {
    std::vector<SvgArc> arcs;
    for (const Arc& a : cc.lower)
        arcs.push_back({a.s, a.t, false, svg_style(cc.circle_of(a.s).colour), {}});
    for (const Arc& a : cc.upper)
        arcs.push_back({a.s, a.t, true, svg_style(cc.circle_of(a.s).colour), {}});
    return svg_scene(cc.lo, cc.hi, cc.crosses, arcs, number_label);
}

std::string svg_graph(const DependenceGraph& g) {
    std::vector<SvgArc> arcs;
    for (const DepArc& a : g.arcs)
        arcs.push_back({a.s, a.t, a.layer == Layer::Upper, svg_style(a.colour),
                        dep_label_string(a)});
    return svg_scene(g.lo_node, g.hi_node, {}, arcs, number_label);
}

}  // namespace twoblock
