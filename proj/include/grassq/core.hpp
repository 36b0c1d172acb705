// Grassmannian specifications, k-strict partitions, index sets, duality.
//
// A spec fixes one isotropic Grassmannian:
//   C    IG(m,2n)     k = n-m        symplectic
//   B    OG(m,2n+1)   k = n-m        odd orthogonal
//   D    OG(m,2n+2)   k = n+1-m      even orthogonal, m <= n
//   Dmax OG(n,2n+2)   k = 1, m = n   even orthogonal with rank-two Picard group
//
// Schubert classes are labelled by k-strict partitions inside an m x (n+k)
// rectangle; for D/Dmax a partition with a part equal to k carries a type
// marker in {1,2} distinguishing the two classes. Index sets are the
// geometric parametrization of the same cells: m-subsets of [1,N] avoiding
// complementary pairs i+j = N+1. Everything here is an immutable value and
// every function is pure.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace grassq {

enum class LieType { C, B, D, Dmax };

std::string to_string(LieType t);
std::optional<LieType> lie_type_from_string(const std::string& s);

struct GrassmannianSpec {
    LieType lie_type;
    int m = 0;          // dimension of the isotropic subspaces
    int n = 0;
    int k = 0;          // C,B: n-m;  D,Dmax: n+1-m
    int ambient_N = 0;  // C: 2n;  B: 2n+1;  D,Dmax: 2n+2
    int space_dim = 0;
    std::vector<int> q_degrees;  // one entry, except Dmax: {n+1, n+1}

    int max_part() const { return n + k; }
    int num_q_vars() const { return static_cast<int>(q_degrees.size()); }
    bool is_even_orthogonal() const { return lie_type == LieType::D || lie_type == LieType::Dmax; }
    bool quantum_supported() const;

    bool operator==(const GrassmannianSpec&) const = default;
};

// Throws std::invalid_argument when (m,n) is outside the type's range.
GrassmannianSpec make_spec(LieType lie_type, int m, int n);

struct SchubertLabel {
    std::vector<int> parts;  // weakly decreasing, positive, trailing zeros trimmed
    int type = 0;            // 0 except for D/Dmax labels with a part equal to k

    int weight() const;
    int length() const { return static_cast<int>(parts.size()); }
    int part(int j) const {  // 1-based; 0 beyond the length
        return j >= 1 && j <= length() ? parts[static_cast<std::size_t>(j - 1)] : 0;
    }

    bool operator==(const SchubertLabel&) const = default;
    // Fixed basis order: weight ascending, then parts lexicographically
    // descending (a refinement of dominance descending), then type ascending.
    bool operator<(const SchubertLabel& o) const;
};

SchubertLabel make_label(std::vector<int> parts, int type = 0);

struct Box {
    int row = 0;  // 1-based
    int col = 0;
    bool operator==(const Box&) const = default;
};

enum class RelatedConvention { BC, D };

struct IndexSet {
    std::vector<int> entries;  // strictly increasing, within [1, ambient_N]
    bool operator==(const IndexSet&) const = default;
};

struct PartitionPair {
    std::vector<int> alpha;  // partition inside a k x (n-k) rectangle
    std::vector<int> beta;   // strict partition, beta_1 <= n
};

// Membership in P(k,n) (C,B) or P~(k,n) (D/Dmax), including type coherence.
bool validate_label(const GrassmannianSpec& spec, const SchubertLabel& label);

bool is_valid_index_set(const GrassmannianSpec& spec, const IndexSet& P);

// All basis labels in the fixed order. Count is 2^m*C(n,k) for C,B and
// 2^(n+1-k)*C(n+1,k) for D/Dmax.
std::vector<SchubertLabel> enumerate_basis(const GrassmannianSpec& spec);

IndexSet label_to_index_set(const GrassmannianSpec& spec, const SchubertLabel& label);
SchubertLabel index_set_to_label(const GrassmannianSpec& spec, const IndexSet& P);

// Poincare dual: |label| + |dual| = space_dim, involution.
SchubertLabel dual(const GrassmannianSpec& spec, const SchubertLabel& label);

// |c-k-1|+r = |c'-k-1|+r' (BC), or the same with center (2k+1)/2 (D).
bool k_related(const Box& a, const Box& b, int k, RelatedConvention conv);

// lambda = alpha' + beta (conjugate of alpha plus beta), types C/B only.
SchubertLabel partition_pair_to_label(const PartitionPair& pair, int k);

// Number of parts strictly greater than k.
int ell_k(const SchubertLabel& label, int k);

// Partition helpers shared across modules.
int column_height(const std::vector<int>& parts, int col);
std::vector<int> conjugate(const std::vector<int>& parts);
bool contains_partition(const std::vector<int>& outer, const std::vector<int>& inner);
std::vector<int> staircase(int d);  // (d, d-1, ..., 1)

// Text syntax shared by all front ends: comma-separated parts with an
// optional ":t" type suffix; "-" is the empty partition.
SchubertLabel parse_label(const std::string& text);  // throws std::invalid_argument
std::string to_string(const SchubertLabel& label);
std::string to_string(const IndexSet& P);

}  // namespace grassq
