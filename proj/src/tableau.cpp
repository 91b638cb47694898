#include "twoblock/tableau.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twoblock {

TableauType::TableauType(int n_, int k_, std::vector<int> dims_)
    : n(n_), k(k_), dims(std::move(dims_)) {
    if (k < 0 || n < 2 * k) throw std::invalid_argument("tableau type: need n >= 2k >= 0");
    // n == 0 with no dims is allowed: it is the shape of p_reduce(w) when
    // every entry of w is a double
    if (dims.empty() ? n != 0 : dims.back() != n)
        throw std::invalid_argument("tableau type: dims must end at n");
    int prev = 0;
    for (int d : dims) {
        const int step = d - prev;
        if (step != 1 && step != 2) throw std::invalid_argument("tableau type: dimension steps must be 1 or 2");
        prev = d;
    }
    if (static_cast<int>(doubles().size()) > k)
        throw std::invalid_argument("tableau type: more double entries than bottom row cells");
}

std::vector<int> TableauType::doubles() const {
    std::vector<int> out;
    int prev = 0;
    for (int d : dims) {
        if (d - prev == 2) out.push_back(d);
        prev = d;
    }
    return out;
}

std::vector<int> TableauType::crosses() const {
    std::vector<int> out;
    for (int d : doubles()) {
        out.push_back(d - 1);
        out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> TableauType::singles() const {
    std::vector<int> out;
    int prev = 0;
    for (int d : dims) {
        if (d - prev == 1) out.push_back(d);
        prev = d;
    }
    return out;
}

std::vector<int> TableauType::skipped() const {
    std::vector<int> out;
    for (int d : doubles()) out.push_back(d - 1);
    return out;
}

bool TableauType::is_full() const { return static_cast<int>(dims.size()) == n; }

TableauType full_type(int n, int k) {
    std::vector<int> dims(n);
    for (int i = 0; i < n; ++i) dims[i] = i + 1;
    return TableauType(n, k, std::move(dims));
}

RowStrictTableau::RowStrictTableau(TableauType t, std::vector<Sym> s)
    : type(std::move(t)), sym(std::move(s)) {
    if (static_cast<int>(sym.size()) != type.n)
        throw std::invalid_argument("tableau: weight sequence length mismatch");
    const auto crosses = type.crosses();
    int wedges = 0, vees = 0;
    for (int i = 1; i <= type.n; ++i) {
        const bool is_cross = std::binary_search(crosses.begin(), crosses.end(), i);
        if (is_cross != (at(i) == Sym::Cross))
            throw std::invalid_argument("tableau: cross markers must match the double entries");
        if (at(i) == Sym::Wedge) ++wedges;
        if (at(i) == Sym::Vee) ++vees;
    }
    const int r = static_cast<int>(type.doubles().size());
    if (wedges != type.n - type.k - r || vees != type.k - r)
        throw std::invalid_argument("tableau: row lengths do not match the shape");
}

static bool is_double_entry(const TableauType& type, int i) {
    const auto d = type.doubles();
    return std::binary_search(d.begin(), d.end(), i);
}

std::vector<int> RowStrictTableau::top_row() const {
    std::vector<int> out;
    for (int i = type.n; i >= 1; --i)
        if (at(i) == Sym::Wedge || (at(i) == Sym::Cross && is_double_entry(type, i)))
            out.push_back(i);
    return out;
}

std::vector<int> RowStrictTableau::bottom_row() const {
    std::vector<int> out;
    for (int i = type.n; i >= 1; --i)
        if (at(i) == Sym::Vee || (at(i) == Sym::Cross && is_double_entry(type, i)))
            out.push_back(i);
    return out;
}

bool RowStrictTableau::is_standard() const {
    // ballot reading: with the n-2k implicit leading vees, no prefix of the
    // weight sequence may have more wedges than vees
    int credit = type.n - 2 * type.k;
    bool ballot = true;
    for (int i = 1; i <= type.n; ++i) {
        if (at(i) == Sym::Vee) ++credit;
        if (at(i) == Sym::Wedge) --credit;
        if (credit < 0) { ballot = false; break; }
    }
    // independent check through the column condition: all full columns of
    // distinct entries decrease downwards
    const auto top = top_row();
    const auto bottom = bottom_row();
    bool columns = true;
    for (size_t j = 0; j < bottom.size(); ++j)
        if (top[j] != bottom[j] && top[j] < bottom[j]) { columns = false; break; }
    if (ballot != columns)
        throw std::logic_error("standardness: ballot and column conditions disagree");
    return ballot;
}

std::string RowStrictTableau::weight_string() const {
    std::string out;
    for (Sym s : sym) out.push_back(static_cast<char>(s));
    return out;
}

static std::string row_to_string(const std::vector<int>& row, bool digits) {
    std::string out;
    for (size_t i = 0; i < row.size(); ++i) {
        if (i && !digits) out += ",";
        out += std::to_string(row[i]);
    }
    return out;
}

std::string RowStrictTableau::row_string() const {
    const bool digits = type.n <= 9;
    return row_to_string(top_row(), digits) + "/" + row_to_string(bottom_row(), digits);
}

bool RowStrictTableau::operator<(const RowStrictTableau& o) const {
    if (type.dims != o.type.dims) return type.dims < o.type.dims;
    if (type.k != o.type.k) return type.k < o.type.k;
    return sym < o.sym;
}

std::ostream& operator<<(std::ostream& os, const RowStrictTableau& t) {
    return os << t.row_string();
}

std::vector<RowStrictTableau> enumerate_row_strict(const TableauType& type) {
    const auto singles = type.singles();
    const auto crosses = type.crosses();
    const int m = static_cast<int>(singles.size());
    const int vees_needed = type.k - static_cast<int>(type.doubles().size());
    std::vector<RowStrictTableau> out;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        if (__builtin_popcountl(mask) != vees_needed) continue;
        std::vector<Sym> sym(type.n, Sym::Wedge);
        for (int c : crosses) sym[c - 1] = Sym::Cross;
        // bit for the first single is the most significant, so increasing
        // mask order is lexicographic order with Wedge < Vee
        for (int j = 0; j < m; ++j)
            if (mask >> (m - 1 - j) & 1) sym[singles[j] - 1] = Sym::Vee;
        out.emplace_back(type, std::move(sym));
    }
    return out;
}

std::vector<RowStrictTableau> enumerate_standard(const TableauType& type) {
    std::vector<RowStrictTableau> out;
    for (auto& w : enumerate_row_strict(type))
        if (w.is_standard()) out.push_back(std::move(w));
    return out;
}

// s_of_w lives in arc_diagram.cpp (it needs the cup diagram machinery).

RowStrictTableau phi(const RowStrictTableau& s) {
    // defined on any row strict tableau; it restricts to a bijection
    // standard(type) -> { standard full sigma : skipped dims subset of I_sigma }
    std::vector<Sym> sym = s.sym;
    for (int d : s.type.doubles()) {
        sym[d - 2] = Sym::Vee;
        sym[d - 1] = Sym::Wedge;
    }
    RowStrictTableau out(full_type(s.type.n, s.type.k), std::move(sym));
    if (s.is_standard() && !out.is_standard()) throw std::logic_error("phi: image not standard");
    return out;
}

static std::vector<int> column_positions(const RowStrictTableau& sigma) {
    // col[i-1] = 1-based column of entry i inside its row
    std::vector<int> col(sigma.type.n, 0);
    const auto top = sigma.top_row();
    const auto bottom = sigma.bottom_row();
    for (size_t j = 0; j < top.size(); ++j) col[top[j] - 1] = static_cast<int>(j) + 1;
    for (size_t j = 0; j < bottom.size(); ++j) col[bottom[j] - 1] = static_cast<int>(j) + 1;
    return col;
}

std::vector<int> i_sigma(const RowStrictTableau& sigma) {
    if (!sigma.type.is_full()) throw std::invalid_argument("i_sigma: tableau must have full type");
    const auto col = column_positions(sigma);
    std::vector<int> out;
    for (int i = 1; i < sigma.type.n; ++i)
        if (col[i - 1] <= col[i]) out.push_back(i);
    return out;
}

bool in_phi_image(const RowStrictTableau& sigma, const TableauType& type) {
    if (sigma.type.n != type.n || sigma.type.k != type.k)
        throw std::invalid_argument("in_phi_image: shape mismatch");
    const auto is = i_sigma(sigma);
    for (int i = 1; i < type.n; ++i) {
        if (std::binary_search(type.dims.begin(), type.dims.end(), i)) continue;
        if (!std::binary_search(is.begin(), is.end(), i)) return false;
    }
    return true;
}

RowStrictTableau p_reduce(const RowStrictTableau& w) {
    std::vector<Sym> sym;
    for (int i = 1; i <= w.type.n; ++i)
        if (w.at(i) != Sym::Cross) sym.push_back(w.at(i));
    const int r = static_cast<int>(w.type.doubles().size());
    return RowStrictTableau(full_type(w.type.n - 2 * r, w.type.k - r), std::move(sym));
}

std::vector<std::pair<int, int>> fixed_point_profile(const RowStrictTableau& w) {
    std::vector<std::pair<int, int>> out;
    const auto top = w.top_row();
    const auto bottom = w.bottom_row();
    for (int d : w.type.dims) {
        // count entries, not weight positions: a double entry e sits at the
        // two positions e-1, e but contributes once to each row
        int t = 0, b = 0;
        for (int e : top)
            if (e <= d) ++t;
        for (int e : bottom)
            if (e <= d) ++b;
        out.emplace_back(t, b);
    }
    return out;
}

static std::vector<int> parse_row(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    if (text.find(',') != std::string::npos) {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    } else {
        for (char c : text) {
            if (c < '1' || c > '9') throw std::invalid_argument("tableau: bad entry '" + std::string(1, c) + "'");
            out.push_back(c - '0');
        }
    }
    return out;
}

std::vector<std::vector<int>> type_sequences(int n) {
    std::vector<std::vector<std::vector<int>>> at(n + 1);
    at[0] = {{}};
    for (int s = 1; s <= n; ++s)
        for (int step : {1, 2}) {
            if (s - step < 0) continue;
            for (auto seq : at[s - step]) {
                seq.push_back(s);
                at[s].push_back(std::move(seq));
            }
        }
    std::sort(at[n].begin(), at[n].end());
    return at[n];
}

RowStrictTableau parse_tableau(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw std::invalid_argument("tableau: expected top/bottom");
    const auto top = parse_row(text.substr(0, slash));
    const auto bottom = parse_row(text.substr(slash + 1));
    if (top.size() < bottom.size()) throw std::invalid_argument("tableau: top row shorter than bottom row");
    std::vector<int> all = top;
    all.insert(all.end(), bottom.begin(), bottom.end());
    std::sort(all.begin(), all.end());
    const int n = static_cast<int>(all.size());
    if (all.empty() || all.back() != n) throw std::invalid_argument("tableau: entries must fill 1..n");
    std::vector<int> dims;
    for (size_t i = 0; i < all.size(); ++i)
        if (i + 1 == all.size() || all[i + 1] != all[i]) dims.push_back(all[i]);
    TableauType type(n, static_cast<int>(bottom.size()), std::move(dims));
    std::vector<Sym> sym(n, Sym::Wedge);
    for (int c : type.crosses()) sym[c - 1] = Sym::Cross;
    for (int v : bottom)
        if (sym[v - 1] == Sym::Wedge) sym[v - 1] = Sym::Vee;
    RowStrictTableau out(type, std::move(sym));
    if (out.top_row() != top || out.bottom_row() != bottom)
        throw std::invalid_argument("tableau: rows must be strictly decreasing with doubles in both rows");
    return out;
}

}  // namespace twoblock
