#include "grassq/gw.hpp"

#include <algorithm>
#include <stdexcept>

#include "grassq/pieri_index.hpp"

namespace grassq {

Monomial canonical_monomial(Monomial m) {
    std::sort(m.begin(), m.end(), [](const SpecialClass& a, const SpecialClass& b) {
        if (a.p != b.p) return a.p > b.p;
        return a.primed < b.primed;
    });
    return m;
}

std::string to_string(const SpecialPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : p.terms()) {
        if (!first) out += " + ";
        first = false;
        out += c.to_string();
        for (const SpecialClass& s : key.mono) {
            out += "*s" + std::to_string(s.p) + (s.primed ? "'" : "");
        }
        if (!key.q.is_zero()) {
            if (key.q.e.size() == 1) {
                out += "*q^" + std::to_string(key.q.e[0]);
            } else {
                for (std::size_t i = 0; i < key.q.e.size(); ++i)
                    out += "*q" + std::to_string(i + 1) + "^" + std::to_string(key.q.e[i]);
            }
        }
    }
    return out;
}

Engine::Engine(const GrassmannianSpec& spec, bool use_index_oracle)
    : spec_(spec), use_index_oracle_(use_index_oracle) {}

const RingElement& Engine::special_product(const SpecialClass& s, const SchubertLabel& lambda,
                                           ProductMode mode) {
    auto key = std::make_tuple(s.p, s.primed, mode == ProductMode::Quantum ? 1 : 0, lambda);
    auto it = pieri_cache_.find(key);
    if (it != pieri_cache_.end()) return it->second;
    RingElement value;
    if (mode == ProductMode::Quantum) {
        value = quantum_pieri(spec_, s, lambda);
    } else if (use_index_oracle_) {
        value = classical_pieri_via_index(spec_, s, lambda);
    } else {
        value = classical_pieri(spec_, s, lambda);
    }
    return pieri_cache_.emplace(std::move(key), std::move(value)).first->second;
}

RingElement Engine::apply_special(const SpecialClass& s, const RingElement& x, ProductMode mode) {
    RingElement out(spec_.num_q_vars());
    for (const auto& [key, c] : x.terms()) {
        RingElement piece = special_product(s, key.label, mode);
        piece.shift_q(key.q);
        piece.scale_by(c);
        out += piece;
    }
    return out;
}

RingElement Engine::apply_monomial(const Monomial& mono, const RingElement& x, ProductMode mode) {
    RingElement cur = x;
    for (auto it = mono.rbegin(); it != mono.rend(); ++it) cur = apply_special(*it, cur, mode);
    return cur;
}

RingElement Engine::evaluate_monomial(const Monomial& mono, ProductMode mode) {
    return apply_monomial(mono, RingElement::unit(spec_), mode);
}

RingElement Engine::apply_polynomial(const SpecialPolynomial& poly, const RingElement& x,
                                     ProductMode mode) {
    RingElement out(spec_.num_q_vars());
    for (const auto& [key, c] : poly.terms()) {
        RingElement piece = apply_monomial(key.mono, x, mode);
        piece.shift_q(key.q);
        piece.scale_by(c);
        out += piece;
    }
    return out;
}

RingElement Engine::evaluate_polynomial(const SpecialPolynomial& poly, ProductMode mode) {
    return apply_polynomial(poly, RingElement::unit(spec_), mode);
}

Monomial Engine::monomial_of(const SchubertLabel& label) const {
    Monomial mono;
    for (int p : label.parts) {
        bool primed = label.type == 2 && p == spec_.k;
        mono.push_back(SpecialClass{p, primed});
    }
    return canonical_monomial(std::move(mono));
}

namespace {

// mu strictly dominates lambda (same weight assumed): every prefix sum of mu
// is >= the one of lambda and the partitions differ.
bool strictly_dominates(const std::vector<int>& mu, const std::vector<int>& lambda) {
    if (mu == lambda) return false;
    int sa = 0, sb = 0;
    std::size_t rows = std::max(mu.size(), lambda.size());
    for (std::size_t i = 0; i < rows; ++i) {
        sa += i < mu.size() ? mu[i] : 0;
        sb += i < lambda.size() ? lambda[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

}  // namespace

const SpecialPolynomial& Engine::express_in_specials(const SchubertLabel& lambda,
                                                     ProductMode mode) {
    if (!validate_label(spec_, lambda))
        throw std::invalid_argument("express_in_specials: invalid label " + to_string(lambda));
    if (mode == ProductMode::Quantum && !spec_.quantum_supported())
        throw std::invalid_argument("express_in_specials: quantum ring unsupported for this spec");
    return express_impl(lambda, mode);
}

const SpecialPolynomial& Engine::express_impl(const SchubertLabel& lambda, ProductMode mode) {
    auto& cache = mode == ProductMode::Quantum ? express_quantum_ : express_classical_;
    auto it = cache.find(lambda);
    if (it != cache.end()) return it->second;

    SpecialPolynomial poly;
    const int nq = spec_.num_q_vars();
    const QExponent q0 = QExponent::zero(nq);
    if (lambda.parts.empty()) {
        poly = SpecialPolynomial::one(nq);
        return cache.emplace(lambda, std::move(poly)).first->second;
    }

    Monomial mono = monomial_of(lambda);
    RingElement expansion = evaluate_monomial(mono, mode);
    bool triangular = expansion.extract_coefficient(lambda, q0) == BigInt(1);
    if (triangular) {
        for (const auto& [key, c] : expansion.terms()) {
            if (key.label == lambda && key.q == q0) continue;
            if (key.q.is_zero() && !strictly_dominates(key.label.parts, lambda.parts)) {
                triangular = false;
                break;
            }
        }
    }
    if (!triangular) {
        fallback_used_ = true;
        poly = express_by_linear_solve(lambda, mode);
        return cache.emplace(lambda, std::move(poly)).first->second;
    }

    poly.add_term(mono, q0, BigInt(1));
    for (const auto& [key, c] : expansion.terms()) {
        if (key.label == lambda && key.q == q0) continue;
        SpecialPolynomial corr = express_impl(key.label, mode);
        corr.scale_by(-c);
        SpecialPolynomial shifted;
        for (const auto& [ck, cc] : corr.terms()) shifted.add_term(ck.mono, ck.q + key.q, cc);
        poly += shifted;
    }
    return cache.emplace(lambda, std::move(poly)).first->second;
}

SpecialPolynomial Engine::express_by_linear_solve(const SchubertLabel& lambda, ProductMode mode) {
    // Classical degree-by-degree unitriangular solve: find integers x_i with
    // sigma_lambda = sum_i x_i sigma^{L_i} in H*, then peel the q-corrections
    // (all of strictly lower weight) recursively in quantum mode.
    const int nq = spec_.num_q_vars();
    const QExponent q0 = QExponent::zero(nq);
    std::vector<SchubertLabel> layer;
    for (const SchubertLabel& b : enumerate_basis(spec_)) {
        if (b.weight() == lambda.weight()) layer.push_back(b);
    }
    const std::size_t t = layer.size();
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < t; ++i) {
        if (layer[i] == lambda) pos.push_back(i);
    }
    if (pos.size() != 1) throw std::logic_error("express_by_linear_solve: label not in basis layer");

    std::vector<RingElement> rows(t);
    std::vector<std::vector<BigInt>> B(t, std::vector<BigInt>(t));  // B[j][i] = coeff of L_j in mono(L_i)
    for (std::size_t i = 0; i < t; ++i) {
        rows[i] = evaluate_monomial(monomial_of(layer[i]), ProductMode::Classical);
        for (std::size_t j = 0; j < t; ++j)
            B[j][i] = rows[i].extract_coefficient(layer[j], q0);
    }
    std::vector<BigInt> rhs(t);
    rhs[pos[0]] = BigInt(1);

    // Gauss-Jordan with unit pivots (the matrix is unitriangular up to
    // ordering, so det = +-1 and unit pivots must exist).
    std::vector<bool> used(t, false);
    std::vector<int> pivot_of_col(t, -1);
    for (std::size_t col = 0; col < t; ++col) {
        std::size_t piv = t;
        for (std::size_t r = 0; r < t; ++r) {
            if (!used[r] && (B[r][col] == BigInt(1) || B[r][col] == BigInt(-1))) {
                piv = r;
                break;
            }
        }
        if (piv == t) throw std::logic_error("express_by_linear_solve: no unit pivot");
        used[piv] = true;
        pivot_of_col[col] = static_cast<int>(piv);
        if (B[piv][col] == BigInt(-1)) {
            for (std::size_t c = 0; c < t; ++c) B[piv][c] = -B[piv][c];
            rhs[piv] = -rhs[piv];
        }
        for (std::size_t r = 0; r < t; ++r) {
            if (r == piv || B[r][col].is_zero()) continue;
            BigInt f = B[r][col];
            for (std::size_t c = 0; c < t; ++c) B[r][c] -= f * B[piv][c];
            rhs[r] -= f * rhs[piv];
        }
    }
    std::vector<BigInt> x(t);
    for (std::size_t col = 0; col < t; ++col)
        x[col] = rhs[static_cast<std::size_t>(pivot_of_col[col])];

    SpecialPolynomial poly;
    for (std::size_t i = 0; i < t; ++i) poly.add_term(monomial_of(layer[i]), q0, x[i]);
    if (mode == ProductMode::Classical) return poly;

    RingElement quantum(nq);
    for (std::size_t i = 0; i < t; ++i) {
        if (x[i].is_zero()) continue;
        RingElement e = evaluate_monomial(monomial_of(layer[i]), ProductMode::Quantum);
        e.scale_by(x[i]);
        quantum += e;
    }
    for (const auto& [key, c] : quantum.terms()) {
        if (key.q.is_zero()) {
            if (!(key.label == lambda && c == BigInt(1)))
                throw std::logic_error("express_by_linear_solve: classical part mismatch");
            continue;
        }
        SpecialPolynomial corr = express_impl(key.label, ProductMode::Quantum);
        corr.scale_by(-c);
        for (const auto& [ck, cc] : corr.terms()) poly.add_term(ck.mono, ck.q + key.q, cc);
    }
    return poly;
}

RingElement Engine::product(const SchubertLabel& a, const SchubertLabel& b, ProductMode mode) {
    if (!validate_label(spec_, a) || !validate_label(spec_, b))
        throw std::invalid_argument("product: labels must lie in the basis");
    const SpecialPolynomial& F = express_in_specials(a, mode);
    RingElement base(spec_.num_q_vars());
    base.add_term(b, QExponent::zero(spec_.num_q_vars()), BigInt(1));
    return apply_polynomial(F, base, mode);
}

BigInt Engine::gromov_witten(const SchubertLabel& lambda, const SchubertLabel& mu,
                             const SchubertLabel& nu, const QExponent& d) {
    if (!validate_label(spec_, lambda) || !validate_label(spec_, mu) || !validate_label(spec_, nu))
        throw std::invalid_argument("gromov_witten: labels must lie in the basis");
    if (static_cast<int>(d.e.size()) != spec_.num_q_vars())
        throw std::invalid_argument("gromov_witten: degree arity mismatch");
    for (int v : d.e) {
        if (v < 0) throw std::invalid_argument("gromov_witten: degree must be nonnegative");
    }
    int need = spec_.space_dim + d.degree(spec_);
    if (lambda.weight() + mu.weight() + nu.weight() != need)
        throw std::invalid_argument(
            "gromov_witten: degree condition |lambda|+|mu|+|nu| = dim + sum d_i deg(q_i) fails");
    RingElement prod = product(lambda, mu, ProductMode::Quantum);
    return prod.extract_coefficient(dual(spec_, nu), d);
}

namespace {

SchubertLabel delete_first_column(const SchubertLabel& label) {
    std::vector<int> parts;
    for (int p : label.parts) {
        if (p - 1 > 0) parts.push_back(p - 1);
    }
    return make_label(std::move(parts), label.type);
}

}  // namespace

std::pair<BigInt, BigInt> Engine::degree_one_crosscheck(const SchubertLabel& lambda,
                                                        const SchubertLabel& mu,
                                                        const SpecialClass& s) {
    if (!validate_label(spec_, lambda) || !validate_label(spec_, mu))
        throw std::invalid_argument("degree_one_crosscheck: labels must lie in the basis");
    if (!spec_.quantum_supported() || spec_.lie_type == LieType::Dmax)
        throw std::invalid_argument("degree_one_crosscheck: supported for C, B (k>0), D (k>1)");
    if (lambda.weight() + mu.weight() + s.p != spec_.space_dim + spec_.q_degrees[0])
        throw std::invalid_argument("degree_one_crosscheck: degree condition for d = 1 fails");

    QExponent q1 = QExponent::zero(1);
    q1.e[0] = 1;
    BigInt lhs = special_product(s, lambda, ProductMode::Quantum)
                     .extract_coefficient(dual(spec_, mu), q1);

    BigInt rhs;
    if (spec_.lie_type == LieType::C) {
        if (lambda.length() + mu.length() + 1 > 2 * spec_.m + 1)
            throw std::invalid_argument(
                "degree_one_crosscheck: length condition l(lambda)+l(mu)+l((p)) <= 2m+1 fails");
        GrassmannianSpec up = make_spec(LieType::C, spec_.m + 1, spec_.n + 1);
        Engine e(up);
        BigInt integral = e.special_product(s, lambda, ProductMode::Classical)
                              .extract_coefficient(dual(up, mu), QExponent::zero(1));
        BigInt half = integral.divided_exactly_by(BigInt(2));
        rhs = half;
    } else {
        if (spec_.lie_type == LieType::D && spec_.k < 2)
            throw std::invalid_argument("degree_one_crosscheck: type D needs k > 1");
        GrassmannianSpec down = make_spec(spec_.lie_type, spec_.m + 1, spec_.n);
        Engine e(down);
        SchubertLabel lbar = delete_first_column(lambda);
        SchubertLabel mbar = delete_first_column(mu);
        if (!validate_label(down, lbar) || !validate_label(down, mbar))
            throw std::logic_error("degree_one_crosscheck: column-deleted label invalid");
        if (s.p == 1) {
            rhs = mbar == dual(down, lbar) ? BigInt(1) : BigInt(0);
        } else {
            SpecialClass s_down{s.p - 1, s.primed};
            rhs = e.special_product(s_down, lbar, ProductMode::Classical)
                      .extract_coefficient(dual(down, mbar), QExponent::zero(1));
        }
    }
    return {lhs, rhs};
}

}  // namespace grassq
