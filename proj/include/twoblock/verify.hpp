#pragma once

#include <string>
#include <vector>

#include "twoblock/tableau.hpp"

namespace twoblock {

struct SuiteResult {
    std::string suite;
    long long cases = 0;
    bool passed = true;
    std::string detail;          // one line summary
    std::string counterexample;  // JSON of the first failing case
};

// Valid (type, k) combinations of rank n: every dims sequence paired with
// every k from #doubles to n/2, in deterministic order.
std::vector<TableauType> all_tableau_types(int n);

// Enumerated tableau counts against the brute-force filling oracle, and
// the closed standard count for full types.
SuiteResult verify_counts(int max_n = 10);
// Fixed point in the intersection exists iff no red circle; non-red pairs
// have at least 2^{black circles} of them.
SuiteResult verify_emptiness(int max_n = 6);
// Fixed-point flags are pairwise distinct members of the variety; each
// satisfies its own dependence graph.
SuiteResult verify_fixedpoints(int max_n = 6);
// Structure constants associate on all triples; surgery order independence
// under randomized schedules at n = 4.
SuiteResult verify_associativity(int max_n = 5, int schedules = 100);
// Coloured cobordism relations as matrix identities.
SuiteResult verify_relations();
// Arc sequence property for black and left-green arcs of every graph.
SuiteResult verify_bogen(int max_n = 8);
// dim F(CC(w,w')) = 2^{independents of the pair graph}, red giving zero.
SuiteResult verify_commuting_square(int max_n = 6);

}  // namespace twoblock
