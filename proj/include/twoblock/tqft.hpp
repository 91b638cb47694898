#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twoblock/circle_diagram.hpp"
#include "twoblock/linalg.hpp"

namespace twoblock {

// The space attached to a circle diagram: one tensor factor C[x]/(x^2) per
// black circle, a factor C per green circle, zero if any circle is red.
struct GradedSpace {
    int black_count = 0;
    bool is_zero = false;

    long long dimension() const { return is_zero ? 0 : (1LL << black_count); }
    // Coefficients of the Poincaré polynomial (1+q^2)^black_count by degree.
    std::vector<long long> poincare() const;
};

GradedSpace f_of(const CircleDiagram& c);

enum class Letter : char { One = '1', X = 'x' };

int letter_degree(Letter l);
int word_degree(const std::vector<Letter>& w);
std::string letters_to_string(const std::vector<Letter>& w);

// A basis vector of f_of(CC(w,w2)): one letter per black circle, in the
// order of CircleDiagram::black_circles().
struct BasisElement {
    RowStrictTableau w, w2;
    std::vector<Letter> letters;

    bool operator<(const BasisElement& o) const;
    bool operator==(const BasisElement& o) const;
};

// A linear combination of letter words over one fixed pair (w, v2).
using Combination = std::map<std::vector<Letter>, Rational>;

// --- generator maps of the coloured cobordism category ---

enum class GenKind { Merge, Split, Birth, Death, Identity, Twist };

struct GeneratorMap {
    GenKind kind = GenKind::Identity;
    std::vector<CircleColour> in_colours, out_colours;
};

// Evaluate one generator on a tensor word of letters; the result is a
// formal sum of output words.  Throws when the colour signature is not a
// row of the value table or the letters do not match the input colours.
std::vector<std::pair<Rational, std::vector<Letter>>> generator_value(
    const GeneratorMap& g, const std::vector<Letter>& input);

// Whether the signature is a row of the value table at all.
bool generator_defined(const GeneratorMap& g);

struct RelationReport {
    std::vector<std::string> checked;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// Verifies the category relations as finite linear-map identities:
// (co)associativity, unit/counit, Frobenius compatibility, twist
// naturality, degree homogeneity, and the one instance computed in full
// in the source material.
RelationReport check_relations();

// --- surgery multiplication ---

// Product of basis vectors f over (w,w2) and g over (v,v2); zero unless
// w2 == v.  The result lives over (w,v2).  `schedule` permutes the order
// of the elementary surgeries (default: left to right); the result is
// independent of it.
Combination multiply(const RowStrictTableau& w, const RowStrictTableau& w2,
                     const RowStrictTableau& v, const RowStrictTableau& v2,
                     const std::vector<Letter>& f, const std::vector<Letter>& g,
                     const std::vector<int>* schedule = nullptr);

Combination multiply(const BasisElement& f, const BasisElement& g,
                     const std::vector<int>* schedule = nullptr);

// Number of elementary surgeries of a product over middle tableau w2.
int surgery_count(const RowStrictTableau& w2);

struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct AlgebraTable {
    TableauType type;
    std::vector<BasisElement> basis;
    // products[i][j]: sparse list of (basis index, coefficient)
    std::vector<std::vector<std::vector<std::pair<int, Rational>>>> products;
    long long total_dimension = 0;
    bool associative = false;
    // index list of a two-sided unit decomposition when one was found
    std::optional<std::vector<int>> unit;

    int index_of(const BasisElement& e) const;
};

// Full structure constants over all basis elements of the type; verifies
// associativity on all triples and searches for a diagonal unit.
// Throws SizeError when the total dimension exceeds max_dim.
AlgebraTable algebra_table(const TableauType& type, long long max_dim = 4096);

}  // namespace twoblock
