// Quantum Pieri rules. The classical sum is augmented by q-linear terms
// indexed by partitions one size up (first row n+k+1 in type C; the sets
// P'(k,n+1) / P~'(k,n+1) in the orthogonal types) and, in the orthogonal
// types, q-quadratic terms active only when lambda_1 = n+k. On OG(n,2n+2)
// the linear terms split between two parameters q_1, q_2 by the type of nu
// and the quadratic terms carry q_1 q_2.

#pragma once

#include "grassq/core.hpp"
#include "grassq/pieri.hpp"
#include "grassq/ring.hpp"

namespace grassq {

RingElement quantum_pieri(const GrassmannianSpec& spec, const SpecialClass& s,
                          const SchubertLabel& lambda);

// Largest d whose staircase containment criterion lambda does not violate:
// rho_d in lambda (C); rho_{d-1} in lambda for even d and (rho_{d-1},1) in
// lambda for odd d (B, D, Dmax). Degree-d invariants with any argument
// failing the criterion vanish.
int max_q_degree_bound(const GrassmannianSpec& spec, const SchubertLabel& lambda);

}  // namespace grassq
