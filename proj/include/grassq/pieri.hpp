// The Pieri relation lambda -> mu and the classical Pieri products.
//
// mu is reached from lambda by removing a vertical strip from the first k
// columns and adding a horizontal strip, subject to two conditions phrased in
// terms of k-related boxes. The multiplicity is a power of two counted from
// the connected components of the unmentioned added boxes beyond column k,
// with an extra 0/1/half factor (delta) in type D when multiplying by tau_k
// or tau'_k.

#pragma once

#include <optional>
#include <vector>

#include "grassq/core.hpp"
#include "grassq/ring.hpp"

namespace grassq {

struct SpecialClass {
    int p = 1;
    bool primed = false;  // tau'_k; requires p == k and an even orthogonal spec
    bool operator==(const SpecialClass&) const = default;
    bool operator<(const SpecialClass& o) const {
        if (p != o.p) return p < o.p;
        return primed < o.primed;
    }
};

// delta in {0, 1/2, 1} stored as (numerator, is_half) so the module never
// manufactures rationals: 1/2 always pairs with N' >= 1 and is folded into
// the exponent.
struct DeltaValue {
    int num = 1;
    bool half = false;
    bool operator==(const DeltaValue&) const = default;
};

struct PieriMove {
    SchubertLabel source;
    SchubertLabel target;
    std::vector<Box> removed_boxes;             // vertical strip, columns <= k
    std::vector<Box> added_boxes;               // horizontal strip
    std::vector<Box> set_A;                     // unmentioned added boxes in columns > k
    std::vector<std::vector<Box>> components;   // vertex-connected components of set_A
    int N = 0;        // components with no box in column k+1
    int N_prime = 0;  // all components, minus 1 when p > k
    int p = 0;        // |target| - |source|
    // Type D data (defaults for C/B).
    int g = 0;
    int h = 0;
    DeltaValue delta;
    DeltaValue delta_prime;
};

// Present iff lambda -> mu holds for the spec's convention (BC for C/B, D for
// D/Dmax, which also enforces type(lambda)+type(mu) != 3). The labels need
// not lie in the spec's rectangle; membership is the caller's concern. Throws
// on k-strictness/type-coherence violations.
std::optional<PieriMove> pieri_arrow(const GrassmannianSpec& spec, const SchubertLabel& lambda,
                                     const SchubertLabel& mu);

// sigma_p * sigma_lambda (C: 2^N), tau_p * tau_lambda (B: 2^N'), or
// tau_p/tau'_k * tau_lambda (D: delta * 2^N'); q-free.
RingElement classical_pieri(const GrassmannianSpec& spec, const SpecialClass& s,
                            const SchubertLabel& lambda);

// Exponent of eq. relating B and C structure constants:
// f^nu_{lambda,mu} = 2^(ell_k(nu)-ell_k(lambda)-ell_k(mu)) e^nu_{lambda,mu}.
int bc_comparison_exponent(const GrassmannianSpec& spec, const SchubertLabel& lambda,
                           const SchubertLabel& mu, const SchubertLabel& nu);

namespace detail {

// All k-strict shapes mu with |mu| = |lambda| + p reachable by removing a
// vertical strip from the first k columns and adding a horizontal strip,
// within rows_cap x col_cap. A superset of the actual Pieri targets; callers
// filter through pieri_arrow or the index-set relation.
std::vector<std::vector<int>> strip_candidates(const std::vector<int>& lambda, int p, int k,
                                               int rows_cap, int col_cap);

// Typed expansion of candidate shapes for a spec (two typed labels per shape
// holding a part equal to k on even orthogonal specs).
std::vector<SchubertLabel> typed_candidates(const GrassmannianSpec& spec,
                                            const std::vector<std::vector<int>>& shapes);

BigInt pow2(int e);

}  // namespace detail

}  // namespace grassq
