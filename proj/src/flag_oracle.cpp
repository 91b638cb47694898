#include "twoblock/flag_oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace twoblock {

Ambient::Ambient(int n_, int k_) : n(n_), k(k_) {
    if (n < 0 || k < 0 || n < 2 * k) throw std::invalid_argument("bad ambient shape");
    N.assign(n, Vec(n, 0));
    for (int i = 1; i < n - k; ++i) N[i - 1][i] = 1;
    for (int i = 1; i < k; ++i) N[n - k + i - 1][n - k + i] = 1;
}

Vec Ambient::e(int l) const {
    if (l < 1 || l > n - k) throw std::out_of_range("e index");
    Vec v(n, 0);
    v[l - 1] = 1;
    return v;
}

Vec Ambient::f(int l) const {
    if (l < 1 || l > k) throw std::out_of_range("f index");
    Vec v(n, 0);
    v[n - k + l - 1] = 1;
    return v;
}

Subspace Ambient::full() const { return Subspace(n, mat_identity(n)); }

Flag fixed_point_flag(const Ambient& amb, const RowStrictTableau& w) {
    if (amb.n != w.type.n || amb.k != w.type.k) throw std::invalid_argument("ambient/tableau mismatch");
    std::vector<int> top = w.top_row(), bottom = w.bottom_row();
    Flag flag;
    flag[0] = amb.zero();
    for (int i : w.type.dims) {
        auto below = [i](int x) { return x <= i; };
        const int t = static_cast<int>(std::count_if(top.begin(), top.end(), below));
        const int b = static_cast<int>(std::count_if(bottom.begin(), bottom.end(), below));
        Matrix gens;
        for (int j = 1; j <= t; ++j) gens.push_back(amb.e(j));
        for (int j = 1; j <= b; ++j) gens.push_back(amb.f(j));
        flag[i] = Subspace(amb.n, gens);
    }
    return flag;
}

bool is_n_invariant(const Ambient& amb, const Subspace& s) {
    for (const Vec& v : s.basis)
        if (!s.contains(mat_apply(amb.N, v))) return false;
    return true;
}

Subspace n_preimage(const Ambient& amb, const Subspace& s, int l) {
    return preimage(mat_pow(amb.N, l), s);
}

bool is_spaltenstein_flag(const Ambient& amb, const TableauType& type, const Flag& flag) {
    if (amb.n != type.n || amb.k != type.k) throw std::invalid_argument("ambient/type mismatch");
    auto it = flag.find(0);
    if (it == flag.end() || it->second.dim() != 0) return false;
    const Subspace* prev = &it->second;
    for (int i : type.dims) {
        it = flag.find(i);
        if (it == flag.end()) return false;
        const Subspace& cur = it->second;
        if (cur.n != amb.n || cur.dim() != i) return false;
        if (!cur.contains(*prev)) return false;
        for (const Vec& v : cur.basis)
            if (!prev->contains(mat_apply(amb.N, v))) return false;
        prev = &cur;
    }
    return true;
}

bool satisfies(const Ambient& amb, const DependenceGraph& g, const Flag& flag) {
    for (const DepArc& a : g.arcs) {
        switch (a.label) {
            case DepLabel::Ninv:
                if (flag.at(a.t) != n_preimage(amb, flag.at(a.s), a.l)) return false;
                break;
            case DepLabel::Evec:
                if (flag.at(a.t) != add_vector(flag.at(a.t - 1), amb.e(a.l))) return false;
                break;
            case DepLabel::Fvec:
                if (flag.at(a.s) != add_vector(flag.at(a.s - 1), amb.f(a.l))) return false;
                break;
        }
    }
    return true;
}

std::vector<RowStrictTableau> fixed_points_in_intersection(const RowStrictTableau& w,
                                                           const RowStrictTableau& w2) {
    if (!(w.type == w2.type)) throw std::invalid_argument("type mismatch");
    Ambient amb(w.type.n, w.type.k);
    DependenceGraph g = dep_graph_pair(w, w2);
    std::vector<RowStrictTableau> out;
    for (const RowStrictTableau& v : enumerate_row_strict(w.type))
        if (satisfies(amb, g, fixed_point_flag(amb, v))) out.push_back(v);
    return out;
}

namespace {

// Count of skipped indices below t; the power of N applied to F_t.
int skips_below(const std::vector<int>& skipped, int t) {
    return static_cast<int>(std::lower_bound(skipped.begin(), skipped.end(), t) - skipped.begin());
}

Vec shrink_vec(const Ambient& big, const Ambient& small, const Vec& v) {
    Vec out(small.n, 0);
    for (int i = 0; i < big.n - big.k; ++i) {
        if (i < small.n - small.k)
            out[i] = v[i];
        else if (v[i] != 0)
            throw std::logic_error("vector not inside the reduced ambient space");
    }
    for (int i = 0; i < big.k; ++i) {
        if (i < small.k)
            out[small.n - small.k + i] = v[big.n - big.k + i];
        else if (v[big.n - big.k + i] != 0)
            throw std::logic_error("vector not inside the reduced ambient space");
    }
    return out;
}

Vec embed_vec(const Ambient& big, const Ambient& small, const Vec& v) {
    Vec out(big.n, 0);
    for (int i = 0; i < small.n - small.k; ++i) out[i] = v[i];
    for (int i = 0; i < small.k; ++i) out[big.n - big.k + i] = v[small.n - small.k + i];
    return out;
}

}  // namespace

Flag pi_map(const Ambient& amb, const TableauType& type, const Flag& flag) {
    if (amb.n != type.n || amb.k != type.k) throw std::invalid_argument("ambient/type mismatch");
    std::vector<int> skipped = type.skipped(), doubles = type.doubles();
    const int r = static_cast<int>(skipped.size());
    Ambient small(type.n - 2 * r, type.k - r);
    Flag out;
    out[0] = small.zero();
    for (int t : type.dims) {
        if (std::binary_search(doubles.begin(), doubles.end(), t)) continue;
        const int l = skips_below(skipped, t);
        Matrix power = mat_pow(amb.N, l);
        Matrix gens;
        for (const Vec& v : flag.at(t).basis) gens.push_back(shrink_vec(amb, small, mat_apply(power, v)));
        Subspace s(small.n, gens);
        if (s.dim() != t - 2 * l) throw std::logic_error("pi: flag is not in the variety");
        out[t - 2 * l] = s;
    }
    return out;
}

Flag pi_inverse(const Ambient& amb, const TableauType& type, const Flag& reduced) {
    if (amb.n != type.n || amb.k != type.k) throw std::invalid_argument("ambient/type mismatch");
    std::vector<int> skipped = type.skipped();
    const int r = static_cast<int>(skipped.size());
    Ambient small(type.n - 2 * r, type.k - r);
    Flag out;
    out[0] = amb.zero();
    for (int t : type.dims) {
        const int l = skips_below(skipped, t);
        Matrix gens;
        for (const Vec& v : reduced.at(t - 2 * l).basis) gens.push_back(embed_vec(amb, small, v));
        Subspace s = n_preimage(amb, Subspace(amb.n, gens), l);
        if (s.dim() != t) throw std::logic_error("pi inverse: flag is not in the variety");
        out[t] = s;
    }
    return out;
}

}  // namespace twoblock
