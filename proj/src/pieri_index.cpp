#include "grassq/pieri_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassq {

namespace {

void require_valid(const GrassmannianSpec& spec, const IndexSet& P, const char* who) {
    if (!is_valid_index_set(spec, P))
        throw std::invalid_argument(std::string(who) + ": invalid index set {" + to_string(P) + "}");
}

// Q below P in the Bruhat-induced order on index sets. For D this is the
// partial order with the extra condition that q_i != n+1 when p_i = n+2.
bool below(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q) {
    for (std::size_t i = 0; i < P.entries.size(); ++i) {
        if (Q.entries[i] > P.entries[i]) return false;
        if (spec.is_even_orthogonal() && P.entries[i] == spec.n + 2 &&
            Q.entries[i] == spec.n + 1)
            return false;
    }
    return true;
}

// c is a crossing iff q_i <= c < p_i for some row; cuts are the rest.
bool is_cut(const IndexSet& P, const IndexSet& Q, int c) {
    for (std::size_t i = 0; i < P.entries.size(); ++i) {
        if (Q.entries[i] <= c && c < P.entries[i]) return false;
    }
    return true;
}

bool has_box_in_column(const IndexSet& P, const IndexSet& Q, int c) {
    for (std::size_t i = 0; i < P.entries.size(); ++i) {
        if (Q.entries[i] <= c && c <= P.entries[i]) return true;
    }
    return false;
}

int codim(const GrassmannianSpec& spec, const IndexSet& P) {
    return index_set_to_label(spec, P).weight();
}

}  // namespace

SkewDiagram skew_diagram(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q) {
    require_valid(spec, P, "skew_diagram");
    require_valid(spec, Q, "skew_diagram");
    if (!below(spec, P, Q)) throw std::invalid_argument("skew_diagram: requires Q below P");
    SkewDiagram d;
    for (std::size_t i = 0; i < P.entries.size(); ++i)
        d.rows.emplace_back(Q.entries[i], P.entries[i]);
    return d;
}

CutProfile cut_profile(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q) {
    require_valid(spec, P, "cut_profile");
    require_valid(spec, Q, "cut_profile");
    if (!below(spec, P, Q)) throw std::invalid_argument("cut_profile: requires Q below P");
    const int n = spec.n, N = spec.ambient_N;
    CutProfile prof;
    for (int c = 0; c <= N; ++c) {
        if (is_cut(P, Q, c)) prof.cuts.push_back(c);
    }
    // I(P,Q) = {c in [0,n] : c or N-c is a cut}; B and D shift the mirrored
    // index by their larger ambient and adjoin n+1.
    for (int c = 0; c <= n; ++c) {
        if (is_cut(P, Q, c) || is_cut(P, Q, N - c)) prof.I_set.push_back(c);
    }
    if (spec.lie_type != LieType::C) prof.I_set.push_back(n + 1);
    auto in_I = [&](int c) {
        return std::find(prof.I_set.begin(), prof.I_set.end(), c) != prof.I_set.end();
    };
    prof.N = 0;
    for (int c : prof.I_set) {
        if (c >= 2 && !in_I(c - 1)) ++prof.N;
    }
    if (spec.is_even_orthogonal()) {
        for (int i = 1; i <= n + 1; ++i) {
            if (has_box_in_column(P, Q, i)) prof.S.push_back(i);
        }
        for (int p : P.entries) {
            if (p >= n + 2 &&
                std::find(prof.S.begin(), prof.S.end(), 2 * n + 3 - p) != prof.S.end())
                prof.S_prime.push_back(p);
        }
        prof.h = static_cast<int>(prof.S.size()) + static_cast<int>(prof.S_prime.size()) + n;
    }
    return prof;
}

bool index_arrow(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q) {
    require_valid(spec, P, "index_arrow");
    require_valid(spec, Q, "index_arrow");
    if (!below(spec, P, Q)) return false;
    const int m = spec.m, n = spec.n, N = spec.ambient_N;
    const auto& p = P.entries;
    const auto& q = Q.entries;
    if (!spec.is_even_orthogonal()) {
        // No 2x2 squares: p_j <= q_{j+1}; a doubled column needs a box in the
        // complementary column.
        for (int j = 0; j + 1 < m; ++j) {
            if (p[static_cast<std::size_t>(j)] > q[static_cast<std::size_t>(j + 1)]) return false;
            if (p[static_cast<std::size_t>(j)] == q[static_cast<std::size_t>(j + 1)]) {
                int c = N + 1 - p[static_cast<std::size_t>(j)];
                if (!has_box_in_column(P, Q, c)) return false;
            }
        }
        return true;
    }
    // Type D: one 2x2 square is allowed when it occupies exactly columns
    // n+1, n+2; and the middle columns may not hold exactly three boxes.
    for (int j = 0; j + 1 < m; ++j) {
        int pj = p[static_cast<std::size_t>(j)];
        int qn = q[static_cast<std::size_t>(j + 1)];
        if (pj > qn) {
            bool middle_square = qn == n + 1 && pj == n + 2;
            if (!middle_square) return false;
        }
        if (pj >= qn) {
            // Columns c in [qn, pj] hold two boxes (rows j, j+1).
            for (int c = qn; c <= pj; ++c) {
                if (!has_box_in_column(P, Q, 2 * n + 3 - c)) return false;
            }
        }
    }
    int middle_boxes = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (q[i] <= n + 1 && n + 1 <= p[i]) ++middle_boxes;
        if (q[i] <= n + 2 && n + 2 <= p[i]) ++middle_boxes;
    }
    if (middle_boxes == 3) return false;
    return true;
}

BigInt index_multiplicity(const GrassmannianSpec& spec, const IndexSet& P, const IndexSet& Q,
                          const SpecialClass& special) {
    if (!index_arrow(spec, P, Q))
        throw std::invalid_argument("index_multiplicity: P -> Q does not hold");
    int r = special.p;
    if (codim(spec, Q) - codim(spec, P) != r)
        throw std::invalid_argument("index_multiplicity: |Q| != |P| + p");
    if (special.primed && (!spec.is_even_orthogonal() || r != spec.k))
        throw std::invalid_argument("index_multiplicity: primed class requires D/Dmax and p = k");
    CutProfile prof = cut_profile(spec, P, Q);
    switch (spec.lie_type) {
        case LieType::C:
            return detail::pow2(prof.N);
        case LieType::B:
            return detail::pow2(prof.N - (r > spec.k ? 1 : 0));
        case LieType::D:
        case LieType::Dmax: {
            int n_prime = prof.N - (r > spec.k ? 1 : 0);
            if (n_prime < 0)
                throw std::logic_error("index_multiplicity: N' < 0 encountered");
            if (r != spec.k) return detail::pow2(n_prime);
            if (n_prime > 0) return detail::pow2(n_prime - 1);
            bool odd = prof.h % 2 != 0;
            bool nonzero = special.primed ? !odd : odd;
            return nonzero ? BigInt(1) : BigInt(0);
        }
    }
    return BigInt(0);
}

RingElement classical_pieri_via_index(const GrassmannianSpec& spec, const SpecialClass& s,
                                      const SchubertLabel& lambda, bool raw_enumeration) {
    if (s.p < 1 || s.p > spec.max_part())
        throw std::invalid_argument("classical_pieri_via_index: p out of range");
    if (s.primed && (!spec.is_even_orthogonal() || s.p != spec.k))
        throw std::invalid_argument("classical_pieri_via_index: bad primed class");
    IndexSet P = label_to_index_set(spec, lambda);
    std::vector<SchubertLabel> candidates;
    if (raw_enumeration) {
        for (const SchubertLabel& mu : enumerate_basis(spec)) {
            if (mu.weight() == lambda.weight() + s.p) candidates.push_back(mu);
        }
    } else {
        candidates = detail::typed_candidates(
            spec, detail::strip_candidates(lambda.parts, s.p, spec.k, spec.m, spec.max_part()));
    }
    RingElement out(spec.num_q_vars());
    for (const SchubertLabel& mu : candidates) {
        if (!validate_label(spec, mu)) continue;
        IndexSet Q = label_to_index_set(spec, mu);
        if (!index_arrow(spec, P, Q)) continue;
        out.add_term(mu, QExponent::zero(spec.num_q_vars()), index_multiplicity(spec, P, Q, s));
    }
    return out;
}

}  // namespace grassq
