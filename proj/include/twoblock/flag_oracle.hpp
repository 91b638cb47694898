#pragma once

#include <map>

#include "twoblock/dependence_graph.hpp"
#include "twoblock/linalg.hpp"
#include "twoblock/tableau.hpp"

namespace twoblock {

// Q^n with the two-block nilpotent: basis e_1..e_{n-k}, f_1..f_k,
// N e_i = e_{i-1}, N f_i = f_{i-1} (first elements map to zero).
struct Ambient {
    int n = 0, k = 0;
    Matrix N;

    Ambient(int n_, int k_);

    Vec e(int l) const;  // 1-based
    Vec f(int l) const;
    Subspace zero() const { return Subspace(n); }
    Subspace full() const;
};

// Partial flag keyed by dimension; always contains 0 -> {0} plus one
// subspace per entry of the type.
using Flag = std::map<int, Subspace>;

Flag fixed_point_flag(const Ambient& amb, const RowStrictTableau& w);

bool is_n_invariant(const Ambient& amb, const Subspace& s);
// {v : N^l v in s}
Subspace n_preimage(const Ambient& amb, const Subspace& s, int l = 1);

// Member of the variety of the type: correct dimensions, nested, and
// N F_{i_l} contained in F_{i_{l-1}}.
bool is_spaltenstein_flag(const Ambient& amb, const TableauType& type, const Flag& flag);

// Whether the flag satisfies every arc condition of the graph (for pair
// graphs this is the intersection of the two generalised components).
bool satisfies(const Ambient& amb, const DependenceGraph& g, const Flag& flag);

// Tableaux v whose fixed-point flag lies in the intersection of the
// generalised components of w and w2.
std::vector<RowStrictTableau> fixed_points_in_intersection(const RowStrictTableau& w,
                                                           const RowStrictTableau& w2);

// The isomorphism onto the full-type variety of the reduced shape
// (n-2r, k-r): spaces at double entries are dropped and the l-th segment
// maps by N^l into the smaller ambient space.
Flag pi_map(const Ambient& amb, const TableauType& type, const Flag& flag);
// Its inverse, rebuilding every space by iterated preimages.
Flag pi_inverse(const Ambient& amb, const TableauType& type, const Flag& reduced);

}  // namespace twoblock
