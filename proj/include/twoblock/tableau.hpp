#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoblock {

// Entry markers of the weight sequence attached to a two-row tableau:
// Wedge = entry in the top row, Vee = bottom row, Cross = double entry
// occupying one cell of each row.
enum class Sym : char { Wedge = '^', Vee = 'v', Cross = 'x' };

// Shape/type data (n,k,dims): two rows of lengths n-k >= k, entry i_l used
// (i_l - i_{l-1}) times.  Consecutive differences are 1 or 2; i_m = n.
struct TableauType {
    int n = 0;
    int k = 0;
    std::vector<int> dims;

    TableauType() = default;
    TableauType(int n_, int k_, std::vector<int> dims_);

    // entries i_l with i_l - i_{l-1} == 2; they appear once in each row
    std::vector<int> doubles() const;
    // positions marked Cross in weight sequences: {d-1, d} for each double d
    std::vector<int> crosses() const;
    // entries that appear exactly once
    std::vector<int> singles() const;
    // {1..n} \ dims (one index skipped per double)
    std::vector<int> skipped() const;
    bool is_full() const;  // dims == (1,2,...,n)

    bool operator==(const TableauType& o) const = default;
};

TableauType full_type(int n, int k);

// Row strict tableau of two-block shape, stored as the type plus the
// wedge/vee/cross marker of each of 1..n.
struct RowStrictTableau {
    TableauType type;
    std::vector<Sym> sym;  // sym[i-1] is the marker of entry i

    RowStrictTableau() = default;
    RowStrictTableau(TableauType t, std::vector<Sym> s);

    std::vector<int> top_row() const;     // strictly decreasing
    std::vector<int> bottom_row() const;  // strictly decreasing
    Sym at(int i) const { return sym[i - 1]; }
    bool is_standard() const;
    std::string weight_string() const;  // e.g. "^xxv^v"
    std::string row_string() const;     // e.g. "531/643"

    bool operator==(const RowStrictTableau& o) const = default;
    bool operator<(const RowStrictTableau& o) const;
};

std::ostream& operator<<(std::ostream& os, const RowStrictTableau& t);

// All row strict tableaux of the given type, in lexicographic order of the
// wedge/vee assignment of the single entries (Wedge before Vee).
std::vector<RowStrictTableau> enumerate_row_strict(const TableauType& type);
std::vector<RowStrictTableau> enumerate_standard(const TableauType& type);

// Standardisation: tableau with the same cup diagram whose weight sequence
// lists all cup left ends in the bottom row.  Idempotent.
RowStrictTableau s_of_w(const RowStrictTableau& w);

// Moves every bottom-row double entry d to d-1, producing a tableau of
// full type; restricts to a bijection from standard tableaux of the input
// type onto the standard full tableaux passing the in_phi_image test.
RowStrictTableau phi(const RowStrictTableau& s);

// Column positions: i_sigma(s) = { i in 1..n-1 : col(i) <= col(i+1) } for a
// standard tableau of full type.  phi image test: sigma is in the image of
// phi for `type` iff every index missing from type lies in i_sigma(sigma).
std::vector<int> i_sigma(const RowStrictTableau& sigma);
bool in_phi_image(const RowStrictTableau& sigma, const TableauType& type);

// Deletes the double-entry boxes and renumbers the remaining entries so the
// result has full type (1..n-2r).
RowStrictTableau p_reduce(const RowStrictTableau& w);

// (t_i, b_i) per type index: how many of the entries <= i_l sit in the top
// resp. bottom row; determines the attracting fixed point of w.
std::vector<std::pair<int, int>> fixed_point_profile(const RowStrictTableau& w);

// Every dims sequence with steps of one or two ending at n, in
// lexicographic order; pair each with k in [#doubles, n/2] for the valid
// tableau types of rank n.
std::vector<std::vector<int>> type_sequences(int n);

// "top/bottom" notation; entries either single digits or comma separated.
// Type data is inferred from the entries.
RowStrictTableau parse_tableau(const std::string& text);

}  // namespace twoblock
