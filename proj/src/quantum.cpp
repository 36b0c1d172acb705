#include "grassq/quantum.hpp"

#include <algorithm>
#include <stdexcept>

namespace grassq {

namespace {

// lambda with its first row removed; the type marker survives (the dropped
// row is never the unique part equal to k in the uses below).
SchubertLabel star(const SchubertLabel& lambda, const GrassmannianSpec& spec) {
    std::vector<int> parts(lambda.parts.begin() + (lambda.parts.empty() ? 0 : 1),
                           lambda.parts.end());
    int type = lambda.type;
    if (type != 0 &&
        std::find(parts.begin(), parts.end(), spec.k) == parts.end())
        throw std::logic_error("star: type marker lost its part equal to k");
    return make_label(std::move(parts), type);
}

BigInt delta_coefficient(const GrassmannianSpec& spec, const SpecialClass& s,
                         const PieriMove& move) {
    switch (spec.lie_type) {
        case LieType::C: {
            if (move.N < 1)
                throw std::logic_error("quantum_pieri: N = 0 on a quantum term (expected N >= 1)");
            return detail::pow2(move.N - 1);
        }
        case LieType::B:
            return detail::pow2(move.N_prime);
        case LieType::D:
        case LieType::Dmax: {
            const DeltaValue& d = s.primed ? move.delta_prime : move.delta;
            if (d.num == 0) return BigInt(0);
            return detail::pow2(d.half ? move.N_prime - 1 : move.N_prime);
        }
    }
    return BigInt(0);
}

int second_column_height(const std::vector<int>& parts) { return column_height(parts, 2); }

}  // namespace

RingElement quantum_pieri(const GrassmannianSpec& spec, const SpecialClass& s,
                          const SchubertLabel& lambda) {
    if (!spec.quantum_supported())
        throw std::invalid_argument("quantum_pieri: spec has no supported quantum ring (B needs k>0, D needs k>1)");
    RingElement out = classical_pieri(spec, s, lambda);
    const int n = spec.n, k = spec.k, m = spec.m, p = s.p;
    const int nq = spec.num_q_vars();

    auto q_linear = [&](int which) {  // which = 0 for single-q, 1/2 for Dmax
        QExponent q = QExponent::zero(nq);
        if (nq == 1) {
            q.e[0] = 1;
        } else {
            if (which != 1 && which != 2)
                throw std::logic_error("quantum_pieri: untyped nu cannot pick q_1 vs q_2");
            q.e[static_cast<std::size_t>(which - 1)] = 1;
        }
        return q;
    };
    auto q_square = [&]() {
        QExponent q = QExponent::zero(nq);
        if (nq == 1) q.e[0] = 2;
        else q.e = {1, 1};
        return q;
    };

    if (spec.lie_type == LieType::C) {
        // nu in P(k,n+1), nu_1 = n+k+1, |nu| = |lambda| + p; term 2^(N-1) sigma_{nu*} q.
        auto shapes = detail::strip_candidates(lambda.parts, p, k, m + 1, n + k + 1);
        for (const auto& sh : shapes) {
            if (sh.empty() || sh[0] != n + k + 1) continue;
            SchubertLabel nu{sh, 0};
            auto move = pieri_arrow(spec, lambda, nu);
            if (!move) continue;
            out.add_term(star(nu, spec), q_linear(0), delta_coefficient(spec, s, *move));
        }
        return out;
    }

    // Orthogonal types: linear terms over P'(k,n+1) resp. P~'(k,n+1).
    const int full_len = spec.is_even_orthogonal() ? n + 2 - k : n + 1 - k;
    const int first_row_min = spec.is_even_orthogonal() ? 2 * k - 1 : 2 * k;
    const int second_col_slack = spec.is_even_orthogonal() ? 2 : 1;
    {
        auto shapes = detail::strip_candidates(lambda.parts, p, k, m + 1, n + k);
        for (const SchubertLabel& nu : detail::typed_candidates(spec, shapes)) {
            if (nu.length() != full_len) continue;
            int nu1 = nu.part(1);
            if (nu1 < first_row_min || nu1 > n + k) continue;
            if (second_column_height(nu.parts) > nu1 - 2 * k + second_col_slack) continue;
            auto move = pieri_arrow(spec, lambda, nu);
            if (!move) continue;
            BigInt coeff = delta_coefficient(spec, s, *move);
            if (coeff.is_zero()) continue;
            // Target: rows 2..r of nu (r = nu_1-2k+1 in type B, one more in D),
            // with the type flipped in the even types.
            int keep = spec.is_even_orthogonal() ? nu1 - 2 * k + 1 : nu1 - 2 * k;
            std::vector<int> tail;
            for (int j = 2; j < 2 + keep; ++j) tail.push_back(nu.part(j));
            int type = 0;
            if (spec.is_even_orthogonal() &&
                std::find(tail.begin(), tail.end(), k) != tail.end()) {
                if (nu.type == 0)
                    throw std::logic_error("quantum_pieri: untyped nu produced a typed target");
                type = 3 - nu.type;
            }
            SchubertLabel target = make_label(std::move(tail), type);
            if (!validate_label(spec, target))
                throw std::logic_error("quantum_pieri: q-linear target outside the basis");
            int which = spec.lie_type == LieType::Dmax ? nu.type : 0;
            out.add_term(target, q_linear(which), coeff);
        }
    }

    // Quadratic terms require lambda_1 = n+k.
    if (lambda.part(1) == n + k) {
        SchubertLabel lam_star = star(lambda, spec);
        auto shapes = detail::strip_candidates(lam_star.parts, p, k, m, n + k);
        for (const SchubertLabel& rho : detail::typed_candidates(spec, shapes)) {
            if (rho.part(1) != n + k) continue;
            if (!validate_label(spec, rho)) continue;
            auto move = pieri_arrow(spec, lam_star, rho);
            if (!move) continue;
            BigInt coeff = delta_coefficient(spec, s, *move);
            if (coeff.is_zero()) continue;
            out.add_term(star(rho, spec), q_square(), coeff);
        }
    }
    return out;
}

int max_q_degree_bound(const GrassmannianSpec& spec, const SchubertLabel& lambda) {
    auto criterion = [&](int d) {
        if (d <= 0) return true;
        if (spec.lie_type == LieType::C) return contains_partition(lambda.parts, staircase(d));
        std::vector<int> req = staircase(d - 1);
        if (d % 2 != 0) req.push_back(1);
        return contains_partition(lambda.parts, req);
    };
    int d = 0;
    while (criterion(d + 1)) ++d;
    return d;
}

}  // namespace grassq
