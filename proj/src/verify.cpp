#include "twoblock/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "twoblock/flag_oracle.hpp"
#include "twoblock/json_io.hpp"
#include "twoblock/render.hpp"
#include "twoblock/tqft.hpp"

namespace twoblock {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// Deterministic parallel sweep: runs fn on every index, reports the failure
// with the smallest index (fn returns a counterexample string on failure).
template <class Fn>
std::optional<std::string> sweep(size_t total, const Fn& fn) {
    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(total)));
    std::atomic<size_t> next{0};
    std::mutex m;
    size_t worst = total;
    std::string failure;
    auto run = [&] {
        for (size_t i = next++; i < total; i = next++) {
            if (auto bad = fn(i)) {
                std::lock_guard<std::mutex> lock(m);
                if (i < worst) {
                    worst = i;
                    failure = *bad;
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    if (worst == total) return std::nullopt;
    return failure;
}

struct Pair {
    TableauType type;
    RowStrictTableau w, w2;
};

std::vector<Pair> all_pairs(int max_n) {
    std::vector<Pair> out;
    for (int n = 1; n <= max_n; ++n)
        for (const TableauType& type : all_tableau_types(n)) {
            const auto rs = enumerate_row_strict(type);
            for (const auto& w : rs)
                for (const auto& w2 : rs) out.push_back({type, w, w2});
        }
    return out;
}

Json type_json(const TableauType& t) {
    return Json{{"n", t.n}, {"k", t.k}, {"type", t.dims}};
}

}  // namespace

std::vector<TableauType> all_tableau_types(int n) {
    std::vector<TableauType> out;
    for (const auto& dims : type_sequences(n)) {
        int r = 0, prev = 0;
        for (int d : dims) {
            if (d - prev == 2) ++r;
            prev = d;
        }
        for (int k = r; 2 * k <= n; ++k) out.emplace_back(n, k, dims);
    }
    return out;
}

SuiteResult verify_counts(int max_n) {
    SuiteResult res;
    res.suite = "counts";
    for (int n = 1; n <= max_n && res.passed; ++n)
        for (const TableauType& type : all_tableau_types(n)) {
            const auto rs = enumerate_row_strict(type);
            // brute-force filling oracle: push every single entry into one
            // of the rows and keep what the validating constructor accepts
            const auto singles = type.singles();
            const int m = static_cast<int>(singles.size());
            std::vector<RowStrictTableau> brute;
            for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
                std::vector<Sym> sym(type.n, Sym::Wedge);
                for (int c : type.crosses()) sym[c - 1] = Sym::Cross;
                for (int j = 0; j < m; ++j)
                    if (mask >> j & 1) sym[singles[j] - 1] = Sym::Vee;
                try {
                    brute.emplace_back(type, std::move(sym));
                } catch (const std::invalid_argument&) {
                }
            }
            ++res.cases;
            std::vector<RowStrictTableau> sorted = rs;
            std::sort(sorted.begin(), sorted.end());
            std::sort(brute.begin(), brute.end());
            if (sorted != brute || !std::is_sorted(rs.begin(), rs.end())) {
                res.passed = false;
                Json j = type_json(type);
                j["expected"] = brute.size();
                j["got"] = rs.size();
                j["what"] = "row strict enumeration differs from filling oracle";
                res.counterexample = j.dump();
                break;
            }
            if (type.is_full()) {
                const long long want = binomial(n, type.k) - binomial(n, type.k - 1);
                const long long got =
                    static_cast<long long>(enumerate_standard(type).size());
                ++res.cases;
                if (got != want) {
                    res.passed = false;
                    Json j = type_json(type);
                    j["expected"] = want;
                    j["got"] = got;
                    j["what"] = "standard count differs from C(n,k)-C(n,k-1)";
                    res.counterexample = j.dump();
                    break;
                }
            }
        }
    res.detail = std::to_string(res.cases) + " counting checks, n <= " + std::to_string(max_n);
    return res;
}

SuiteResult verify_emptiness(int max_n) {
    SuiteResult res;
    res.suite = "emptiness";
    const auto pairs = all_pairs(max_n);
    res.cases = static_cast<long long>(pairs.size());
    auto failure = sweep(pairs.size(), [&](size_t i) -> std::optional<std::string> {
        const Pair& p = pairs[i];
        const CircleDiagram cc = circle_diagram(p.w, p.w2);
        const auto fps = fixed_points_in_intersection(p.w, p.w2);
        const bool red = cc.has_red();
        std::string what;
        if (fps.empty() != red)
            what = "fixed points disagree with the red-circle criterion";
        else if (!red &&
                 fps.size() < (1ull << cc.count(CircleColour::Black)))
            what = "fewer fixed points than 2^{black circles}";
        if (what.empty()) return std::nullopt;
        Json j = type_json(p.type);
        j["w"] = p.w.row_string();
        j["w2"] = p.w2.row_string();
        j["red"] = red;
        j["black"] = cc.count(CircleColour::Black);
        j["fixed_points"] = fps.size();
        j["what"] = what;
        return j.dump();
    });
    if (failure) {
        res.passed = false;
        res.counterexample = *failure;
    }
    res.detail = std::to_string(res.cases) + " pairs, n <= " + std::to_string(max_n);
    return res;
}

SuiteResult verify_fixedpoints(int max_n) {
    SuiteResult res;
    res.suite = "fixedpoints";
    for (int n = 1; n <= max_n && res.passed; ++n)
        for (const TableauType& type : all_tableau_types(n)) {
            const Ambient amb(type.n, type.k);
            const auto rs = enumerate_row_strict(type);
            std::set<std::string> seen;
            for (const auto& w : rs) {
                const Flag f = fixed_point_flag(amb, w);
                ++res.cases;
                std::string what;
                if (!is_spaltenstein_flag(amb, type, f))
                    what = "fixed-point flag is not in the variety";
                else if (!seen.insert(flag_json(f, type).dump()).second)
                    what = "fixed-point flags collide";
                else if (!satisfies(amb, dep_graph_rowstrict(w), f))
                    what = "fixed point misses its own dependence graph";
                if (!what.empty()) {
                    res.passed = false;
                    Json j = type_json(type);
                    j["w"] = w.row_string();
                    j["what"] = what;
                    res.counterexample = j.dump();
                    break;
                }
            }
            if (!res.passed) break;
        }
    res.detail = std::to_string(res.cases) + " flags, n <= " + std::to_string(max_n);
    return res;
}

SuiteResult verify_associativity(int max_n, int schedules) {
    SuiteResult res;
    res.suite = "associativity";
    for (int n = 1; n <= max_n && res.passed; ++n)
        for (const TableauType& type : all_tableau_types(n)) {
            AlgebraTable tab;
            try {
                tab = algebra_table(type);
            } catch (const SizeError& e) {
                res.passed = false;
                Json j = type_json(type);
                j["what"] = e.what();
                res.counterexample = j.dump();
                break;
            }
            ++res.cases;
            if (!tab.associative) {
                res.passed = false;
                Json j = type_json(type);
                j["what"] = "associativity failed on some triple";
                res.counterexample = j.dump();
                break;
            }
            if (n != 4 || schedules <= 0) continue;
            // order independence: random surgery schedules at rank four
            std::mt19937 rng(12345);
            for (size_t i = 0; i < tab.basis.size() && res.passed; ++i)
                for (size_t j = 0; j < tab.basis.size() && res.passed; ++j) {
                    const BasisElement &f = tab.basis[i], &g = tab.basis[j];
                    if (!(f.w2 == g.w)) continue;
                    const Combination base = multiply(f, g);
                    std::vector<int> order(surgery_count(f.w2));
                    for (size_t s = 0; s < order.size(); ++s) order[s] = static_cast<int>(s);
                    for (int s = 0; s < schedules; ++s) {
                        std::shuffle(order.begin(), order.end(), rng);
                        ++res.cases;
                        if (multiply(f, g, &order) == base) continue;
                        res.passed = false;
                        Json cj = type_json(type);
                        cj["f"] = Json{{"w", f.w.row_string()},
                                       {"w2", f.w2.row_string()},
                                       {"assignment", letters_to_string(f.letters)}};
                        cj["g"] = Json{{"w", g.w.row_string()},
                                       {"w2", g.w2.row_string()},
                                       {"assignment", letters_to_string(g.letters)}};
                        cj["schedule"] = order;
                        cj["what"] = "surgery order changed the product";
                        res.counterexample = cj.dump();
                        break;
                    }
                }
            if (!res.passed) break;
        }
    res.detail = std::to_string(res.cases) + " tables and schedules, n <= " +
                 std::to_string(max_n);
    return res;
}

SuiteResult verify_relations() {
    SuiteResult res;
    res.suite = "relations";
    const RelationReport rep = check_relations();
    res.cases = static_cast<long long>(rep.checked.size());
    res.passed = rep.ok();
    if (!rep.ok()) res.counterexample = Json{{"what", rep.failures.front()}}.dump();
    res.detail = std::to_string(res.cases) + " relation instances";
    return res;
}

SuiteResult verify_bogen(int max_n) {
    SuiteResult res;
    res.suite = "bogen";
    for (int n = 1; n <= max_n && res.passed; ++n)
        for (const TableauType& type : all_tableau_types(n)) {
            for (const auto& w : enumerate_row_strict(type)) {
                const DependenceGraph g = dep_graph_rowstrict(w);
                for (const DepArc& a : g.arcs) {
                    std::string what;
                    if (a.colour == ArcColour::Black && a.l > 1) {
                        ++res.cases;
                        if (!black_arc_sequence(g, a.s + 1, a.t - 1))
                            what = "no black arc sequence inside a wide black arc";
                    } else if (a.label == DepLabel::Evec && a.l > 1) {
                        ++res.cases;
                        // start at the rightmost endpoint of the green arcs
                        // properly nested inside, or at the zero node
                        int from = 0;
                        for (const DepArc& b : g.arcs)
                            if (b.colour == ArcColour::Green && !(b == a) && b.s >= a.s &&
                                b.t <= a.t)
                                from = std::max(from, b.t);
                        if (!black_arc_sequence(g, from, a.t - 1))
                            what = "no black arc sequence below a wide green arc";
                    }
                    if (!what.empty()) {
                        res.passed = false;
                        Json j = type_json(type);
                        j["w"] = w.row_string();
                        j["arc"] = Json{{"s", a.s}, {"t", a.t}, {"label", dep_label_string(a)}};
                        j["what"] = what;
                        res.counterexample = j.dump();
                        break;
                    }
                }
                if (!res.passed) break;
            }
            if (!res.passed) break;
        }
    res.detail = std::to_string(res.cases) + " wide arcs, n <= " + std::to_string(max_n);
    return res;
}

SuiteResult verify_commuting_square(int max_n) {
    SuiteResult res;
    res.suite = "commuting-square";
    const auto pairs = all_pairs(max_n);
    res.cases = static_cast<long long>(pairs.size());
    auto failure = sweep(pairs.size(), [&](size_t i) -> std::optional<std::string> {
        const Pair& p = pairs[i];
        const CircleDiagram cc = circle_diagram(p.w, p.w2);
        const GradedSpace gs = f_of(cc);
        const auto ind = independents(dep_graph_pair(p.w, p.w2));
        std::string what;
        if (cc.has_red()) {
            if (gs.dimension() != 0) what = "red diagram with nonzero space";
        } else if (gs.dimension() != (1LL << ind.size())) {
            what = "dim F(CC) differs from 2^{independents}";
        }
        if (what.empty()) return std::nullopt;
        Json j = type_json(p.type);
        j["w"] = p.w.row_string();
        j["w2"] = p.w2.row_string();
        j["dimension"] = gs.dimension();
        j["independents"] = ind;
        j["what"] = what;
        return j.dump();
    });
    if (failure) {
        res.passed = false;
        res.counterexample = *failure;
    }
    res.detail = std::to_string(res.cases) + " pairs, n <= " + std::to_string(max_n);
    return res;
}

}  // namespace twoblock
