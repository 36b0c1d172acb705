#include "grassq/pieri.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassq {

namespace detail {

BigInt pow2(int e) {
    if (e < 0) throw std::logic_error("pow2: negative exponent (N' < 0 should not occur)");
    return BigInt::pow2(e);
}

namespace {

// Row r of a candidate ranges over [lo_r, hi_r] where lo_r allows one removed
// box when lambda_r sits in the first k columns, and hi_r enforces the
// horizontal-strip bound mu_r <= lambda_{r-1} along with weak decrease.
int row_lo(const std::vector<int>& lambda, int k, int r) {
    int lam_r = r <= static_cast<int>(lambda.size()) ? lambda[static_cast<std::size_t>(r - 1)] : 0;
    return (lam_r >= 1 && lam_r <= k) ? lam_r - 1 : lam_r;
}

void extend_candidate(const std::vector<int>& lambda, int k, int rows_cap, int col_cap, int row,
                      int remaining, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (row > rows_cap) {
        if (remaining == 0) {
            std::vector<int> shape = cur;
            while (!shape.empty() && shape.back() == 0) shape.pop_back();
            out.push_back(std::move(shape));
        }
        return;
    }
    int prev = row == 1 ? col_cap : cur[static_cast<std::size_t>(row - 2)];
    int lam_prev = row == 1 ? col_cap
                            : (row - 1 <= static_cast<int>(lambda.size())
                                   ? lambda[static_cast<std::size_t>(row - 2)]
                                   : 0);
    int lo = row_lo(lambda, k, row);
    int hi = std::min({col_cap, prev, lam_prev});
    if (lo > hi) return;
    int min_rest = 0;
    for (int rr = row + 1; rr <= rows_cap; ++rr) min_rest += row_lo(lambda, k, rr);
    for (int v = hi; v >= lo; --v) {
        if (v > k && row >= 2 && v == prev) continue;  // k-strict
        int rem2 = remaining - v;
        int rows_left = rows_cap - row;
        if (rem2 < min_rest || rem2 > rows_left * v) continue;
        cur.push_back(v);
        extend_candidate(lambda, k, rows_cap, col_cap, row + 1, rem2, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> strip_candidates(const std::vector<int>& lambda, int p, int k,
                                               int rows_cap, int col_cap) {
    std::vector<std::vector<int>> out;
    if (static_cast<int>(lambda.size()) > rows_cap) return out;
    if (rows_cap <= 0) {
        if (p == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur;
    int target = p;
    for (int v : lambda) target += v;
    extend_candidate(lambda, k, rows_cap, col_cap, 1, target, cur, out);
    return out;
}

std::vector<SchubertLabel> typed_candidates(const GrassmannianSpec& spec,
                                            const std::vector<std::vector<int>>& shapes) {
    std::vector<SchubertLabel> out;
    for (const auto& sh : shapes) {
        bool has_k = std::find(sh.begin(), sh.end(), spec.k) != sh.end();
        if (spec.is_even_orthogonal() && has_k) {
            out.push_back(SchubertLabel{sh, 1});
            out.push_back(SchubertLabel{sh, 2});
        } else {
            out.push_back(SchubertLabel{sh, 0});
        }
    }
    return out;
}

}  // namespace detail

namespace {

// Collects the boxes of mu\lambda that conditions (1) and (2) mention, or
// reports failure of the arrow.
struct ArrowScan {
    bool ok = true;
    std::vector<Box> mentioned;
};

std::vector<std::vector<Box>> connected_components(const std::vector<Box>& boxes) {
    std::vector<std::vector<Box>> comps;
    std::vector<int> comp_of(boxes.size(), -1);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (comp_of[i] != -1) continue;
        std::vector<std::size_t> stack{i};
        comp_of[i] = static_cast<int>(comps.size());
        std::vector<Box> comp;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            comp.push_back(boxes[a]);
            for (std::size_t b = 0; b < boxes.size(); ++b) {
                if (comp_of[b] != -1) continue;
                if (std::abs(boxes[a].row - boxes[b].row) <= 1 &&
                    std::abs(boxes[a].col - boxes[b].col) <= 1) {
                    comp_of[b] = comp_of[i];
                    stack.push_back(b);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

namespace {

// Shape, k-strictness and type coherence, with no rectangle bound: the
// quantum rules run the arrow one size up on purpose.
void require_well_formed(const GrassmannianSpec& spec, const SchubertLabel& label,
                         const char* who) {
    bool ok = label.type >= 0 && label.type <= 2;
    if (!spec.is_even_orthogonal() && label.type != 0) ok = false;
    bool has_k = false;
    for (std::size_t i = 0; i < label.parts.size() && ok; ++i) {
        int p = label.parts[i];
        if (p <= 0) ok = false;
        if (i > 0 && p > label.parts[i - 1]) ok = false;
        if (i > 0 && p > spec.k && p == label.parts[i - 1]) ok = false;
        if (p == spec.k) has_k = true;
    }
    if (ok && spec.is_even_orthogonal() && (label.type != 0) != has_k) ok = false;
    if (!ok)
        throw std::invalid_argument(std::string(who) + ": invalid label " + to_string(label));
}

}  // namespace

std::optional<PieriMove> pieri_arrow(const GrassmannianSpec& spec, const SchubertLabel& lambda,
                                     const SchubertLabel& mu) {
    require_well_formed(spec, lambda, "pieri_arrow");
    require_well_formed(spec, mu, "pieri_arrow");
    const int k = spec.k;
    const RelatedConvention conv =
        spec.is_even_orthogonal() ? RelatedConvention::D : RelatedConvention::BC;
    if (spec.is_even_orthogonal() && lambda.type + mu.type == 3) return std::nullopt;

    // Removed boxes: a vertical strip (at most one box per row) confined to
    // the first k columns. Added boxes: a horizontal strip.
    std::vector<Box> removed, added;
    int rows = std::max(lambda.length(), mu.length());
    for (int r = 1; r <= rows; ++r) {
        int lr = lambda.part(r), mr = mu.part(r);
        if (mr < lr) {
            if (mr < lr - 1) return std::nullopt;
            if (lr > k) return std::nullopt;
            removed.push_back(Box{r, lr});
        } else if (mr > lr) {
            for (int c = lr + 1; c <= mr; ++c) added.push_back(Box{r, c});
        }
    }
    // Horizontal strip: at most one added box per column.
    {
        std::vector<int> seen;
        for (const Box& b : added) seen.push_back(b.col);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return std::nullopt;
    }

    ArrowScan scan;
    auto related_added = [&](const Box& b) {
        std::vector<Box> rel;
        for (const Box& a : added) {
            if (k_related(b, a, k, conv)) rel.push_back(a);
        }
        return rel;
    };
    int g = 0;
    for (int c = 1; c <= k && scan.ok; ++c) {
        int hl = column_height(lambda.parts, c);
        int hm = column_height(mu.parts, c);
        if (hm <= hl) ++g;
        if (hm == hl && hl >= 1) {
            // (1): the bottom box of an unchanged column is k-related to at
            // most one added box.
            auto rel = related_added(Box{hl, c});
            if (rel.size() > 1) {
                scan.ok = false;
                break;
            }
            if (rel.size() == 1) scan.mentioned.push_back(rel[0]);
        } else if (hm < hl) {
            // (2): each removed box and the new bottom box are k-related to
            // exactly one added box, all of which share a row.
            int common_row = -1;
            auto require_one = [&](const Box& b) {
                auto rel = related_added(b);
                if (rel.size() != 1) {
                    scan.ok = false;
                    return;
                }
                if (common_row == -1) common_row = rel[0].row;
                else if (common_row != rel[0].row) scan.ok = false;
                scan.mentioned.push_back(rel[0]);
            };
            for (int r = hm + 1; r <= hl && scan.ok; ++r) require_one(Box{r, c});
            if (scan.ok && hm >= 1) require_one(Box{hm, c});
        }
    }
    if (!scan.ok) return std::nullopt;

    PieriMove move;
    move.source = lambda;
    move.target = mu;
    move.removed_boxes = removed;
    move.added_boxes = added;
    move.p = mu.weight() - lambda.weight();
    for (const Box& a : added) {
        if (a.col <= k) continue;
        if (std::find(scan.mentioned.begin(), scan.mentioned.end(), a) != scan.mentioned.end())
            continue;
        move.set_A.push_back(a);
    }
    move.components = connected_components(move.set_A);
    move.N = 0;
    for (const auto& comp : move.components) {
        bool touches = false;
        for (const Box& b : comp) {
            if (b.col == k + 1) touches = true;
        }
        if (!touches) ++move.N;
    }
    move.N_prime = static_cast<int>(move.components.size()) - (move.p > k ? 1 : 0);
    if (move.N_prime < 0 && spec.lie_type != LieType::C)
        throw std::logic_error("pieri_arrow: N' < 0 encountered; convention unsettled");

    if (spec.is_even_orthogonal()) {
        move.g = g;
        move.h = g + std::max(lambda.type, mu.type);
        if (move.p != k) {
            move.delta = DeltaValue{1, false};
            move.delta_prime = DeltaValue{1, false};
        } else if (move.N_prime > 0) {
            move.delta = DeltaValue{1, true};
            move.delta_prime = DeltaValue{1, true};
        } else {
            bool odd = move.h % 2 != 0;
            move.delta = DeltaValue{odd ? 1 : 0, false};
            move.delta_prime = DeltaValue{odd ? 0 : 1, false};
        }
    }
    return move;
}

namespace {

// 2^e scaled by delta; delta = 1/2 requires e >= 1.
BigInt apply_delta(const DeltaValue& d, int e) {
    if (d.num == 0) return BigInt(0);
    return detail::pow2(d.half ? e - 1 : e);
}

}  // namespace

RingElement classical_pieri(const GrassmannianSpec& spec, const SpecialClass& s,
                            const SchubertLabel& lambda) {
    if (s.p < 1 || s.p > spec.max_part())
        throw std::invalid_argument("classical_pieri: p out of range [1, n+k]");
    if (s.primed && (!spec.is_even_orthogonal() || s.p != spec.k))
        throw std::invalid_argument("classical_pieri: primed class requires type D/Dmax and p = k");
    if (!validate_label(spec, lambda))
        throw std::invalid_argument("classical_pieri: invalid label " + to_string(lambda));

    RingElement out(spec.num_q_vars());
    auto shapes = detail::strip_candidates(lambda.parts, s.p, spec.k, spec.m, spec.max_part());
    for (const SchubertLabel& mu : detail::typed_candidates(spec, shapes)) {
        auto move = pieri_arrow(spec, lambda, mu);
        if (!move) continue;
        BigInt coeff;
        switch (spec.lie_type) {
            case LieType::C:
                coeff = detail::pow2(move->N);
                break;
            case LieType::B:
                coeff = detail::pow2(move->N_prime);
                break;
            case LieType::D:
            case LieType::Dmax:
                coeff = apply_delta(s.primed ? move->delta_prime : move->delta, move->N_prime);
                break;
        }
        out.add_term(mu, QExponent::zero(spec.num_q_vars()), coeff);
    }
    return out;
}

int bc_comparison_exponent(const GrassmannianSpec& spec, const SchubertLabel& lambda,
                           const SchubertLabel& mu, const SchubertLabel& nu) {
    return ell_k(nu, spec.k) - ell_k(lambda, spec.k) - ell_k(mu, spec.k);
}

std::string to_string(const RingElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, coeff] : x.terms()) {
        if (!first) out += " + ";
        first = false;
        out += coeff.to_string() + "*s[" + to_string(key.label) + "]";
        if (!key.q.is_zero()) {
            if (key.q.e.size() == 1) {
                out += "*q^" + std::to_string(key.q.e[0]);
            } else {
                for (std::size_t i = 0; i < key.q.e.size(); ++i) {
                    out += "*q" + std::to_string(i + 1) + "^" + std::to_string(key.q.e[i]);
                }
            }
        }
    }
    return out;
}

}  // namespace grassq
