// Independent implementation of the classical Pieri rules in the index-set
// language: skew diagrams D(P,Q), cuts, the relation P -> Q, and the
// multiplicities 2^N(P,Q) (with delta factors in type D). Used to
// cross-validate the partition-side engine; the two share no logic beyond
// candidate generation.

#pragma once

#include <vector>

#include "grassq/core.hpp"
#include "grassq/pieri.hpp"
#include "grassq/ring.hpp"

namespace grassq {

struct SkewDiagram {
    // Row j occupies the column interval [q_j, p_j].
    std::vector<std::pair<int, int>> rows;
};

struct CutProfile {
    std::vector<int> cuts;     // integers c with no row crossing from c to c+1
    std::vector<int> I_set;    // I(P,Q) or I'(P,Q)
    int N = 0;                 // runs counted by the index-set Pieri rule
    int h = 0;                 // |S| + |S'| + n (type D only)
    std::vector<int> S;        // type D ruling data
    std::vector<int> S_prime;
};

// Built only when Q <= P (C/B) or Q is admissible below P (D). Throws
// otherwise.
SkewDiagram skew_diagram(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q);

CutProfile cut_profile(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q);

// The relation P -> Q of the index-set Pieri rules, including the type-D
// exceptions (one 2x2 square allowed across the middle columns; no exactly
// three boxes in the middle columns). Throws on invalid index sets.
bool index_arrow(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q);

// Coefficient of [X_Q] in the product of the special class with [X_P]:
// 2^N(P,Q) (C), 2^N'(P,Q) (B), delta_PQ 2^N'(P,Q) (D). Preconditions:
// index_arrow(P,Q) and codim difference = special.p.
BigInt index_multiplicity(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q,
                          const SpecialClass& special);

// Same contract as classical_pieri, computed entirely on the index-set side.
// raw_enumeration scans every basis label of the right weight instead of the
// shared strip candidates, for extra independence.
RingElement classical_pieri_via_index(const GrassmannianSpec& spec, const SpecialClass& s,
                                      const SchubertLabel& lambda, bool raw_enumeration = false);

}  // namespace grassq
