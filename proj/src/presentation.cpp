#include "grassq/presentation.hpp"

#include <stdexcept>

namespace grassq {

namespace {

// Generator a_i of the chosen flavor as a polynomial; zero outside [0, n+k].
GeneratorPolynomial flavor_generator(const GrassmannianSpec& spec, int i, DetFlavor flavor) {
    GeneratorPolynomial g;
    const int nq = spec.num_q_vars();
    if (i == 0) return GeneratorPolynomial::one(nq);
    if (i < 0 || i > spec.max_part()) return g;
    const QExponent q0 = QExponent::zero(nq);
    switch (flavor) {
        case DetFlavor::C_d:
            g.add_term({SpecialClass{i, false}}, q0, BigInt(1));
            break;
        case DetFlavor::B_weighted:
            g.add_term({SpecialClass{i, false}}, q0, BigInt(i <= spec.k ? 1 : 2));
            break;
        case DetFlavor::D_Delta:
            if (i < spec.k) {
                g.add_term({SpecialClass{i, false}}, q0, BigInt(1));
            } else if (i == spec.k) {
                g.add_term({SpecialClass{i, false}}, q0, BigInt(1));
                g.add_term({SpecialClass{i, true}}, q0, BigInt(1));
            } else {
                g.add_term({SpecialClass{i, false}}, q0, BigInt(2));
            }
            break;
    }
    return g;
}

}  // namespace

DetFlavor default_flavor(const GrassmannianSpec& spec) {
    switch (spec.lie_type) {
        case LieType::C: return DetFlavor::C_d;
        case LieType::B: return DetFlavor::B_weighted;
        case LieType::D:
        case LieType::Dmax: return DetFlavor::D_Delta;
    }
    return DetFlavor::C_d;
}

GeneratorPolynomial schur_determinant(const GrassmannianSpec& spec, int r, DetFlavor flavor) {
    if (r < 0) throw std::invalid_argument("schur_determinant: r must be nonnegative");
    const int nq = spec.num_q_vars();
    std::vector<GeneratorPolynomial> d(static_cast<std::size_t>(r) + 1);
    d[0] = GeneratorPolynomial::one(nq);
    for (int s = 1; s <= r; ++s) {
        GeneratorPolynomial acc;
        for (int i = 1; i <= s; ++i) {
            GeneratorPolynomial t =
                flavor_generator(spec, i, flavor) * d[static_cast<std::size_t>(s - i)];
            if (i % 2 == 0) t.scale_by(BigInt(-1));
            acc += t;
        }
        d[static_cast<std::size_t>(s)] = std::move(acc);
    }
    return d[static_cast<std::size_t>(r)];
}

RingElement evaluate(Engine& engine, const GeneratorPolynomial& poly, ProductMode mode) {
    return engine.evaluate_polynomial(poly, mode);
}

namespace {

GeneratorPolynomial gen(const GrassmannianSpec& spec, int p, bool primed = false) {
    GeneratorPolynomial g;
    g.add_term({SpecialClass{p, primed}}, QExponent::zero(spec.num_q_vars()), BigInt(1));
    return g;
}

GeneratorPolynomial q_term(const GrassmannianSpec& spec, int which, long long c) {
    GeneratorPolynomial g;
    QExponent q = QExponent::zero(spec.num_q_vars());
    if (spec.num_q_vars() == 1) {
        q.e[0] = 1;
    } else {
        q.e[static_cast<std::size_t>(which)] = 1;
    }
    g.add_term({}, q, BigInt(c));
    return g;
}

// tau_r^2 + sum_{i=1}^{r} (-1)^i w_i tau_{r+i} tau_{r-i}, with weights and the
// tau_0 = 1 convention supplied by the flavor of the trailing factor.
GeneratorPolynomial quadratic_relation(const GrassmannianSpec& spec, int r, DetFlavor flavor) {
    GeneratorPolynomial acc = gen(spec, r) * gen(spec, r);
    for (int i = 1; i <= r; ++i) {
        if (r + i > spec.max_part()) break;
        GeneratorPolynomial t = gen(spec, r + i) * flavor_generator(spec, r - i, flavor);
        if (i % 2 != 0) t.scale_by(BigInt(-1));
        acc += t;
    }
    return acc;
}

// sum_{p=k+1}^{r} (-1)^p tau_p h_{r-p} for the orthogonal "odd row" relations.
GeneratorPolynomial alternating_tail(const GrassmannianSpec& spec, int r, DetFlavor flavor) {
    GeneratorPolynomial acc;
    for (int p = spec.k + 1; p <= r; ++p) {
        if (p > spec.max_part()) break;
        GeneratorPolynomial t = gen(spec, p) * schur_determinant(spec, r - p, flavor);
        if (p % 2 != 0) t.scale_by(BigInt(-1));
        acc += t;
    }
    return acc;
}

void push(PresentationReport& rep, Engine& engine, ProductMode mode, const std::string& name,
          GeneratorPolynomial lhs_minus_rhs) {
    RelationCheck chk;
    chk.name = name;
    chk.residual = evaluate(engine, lhs_minus_rhs, mode);
    chk.pass = chk.residual.is_zero();
    if (!chk.pass) rep.pass = false;
    rep.relations.push_back(std::move(chk));
}

}  // namespace

PresentationReport verify_presentation(Engine& engine, ProductMode mode) {
    const GrassmannianSpec& spec = engine.spec();
    if (mode == ProductMode::Quantum && !spec.quantum_supported())
        throw std::invalid_argument("verify_presentation: quantum ring unsupported for this spec");
    const int n = spec.n, k = spec.k;
    PresentationReport rep;
    const bool quantum = mode == ProductMode::Quantum;

    switch (spec.lie_type) {
        case LieType::C: {
            for (int r = n - k + 1; r <= n + k; ++r)
                push(rep, engine, mode, "R1[r=" + std::to_string(r) + "]",
                     schur_determinant(spec, r, DetFlavor::C_d));
            for (int r = k + 1; r <= n; ++r) {
                GeneratorPolynomial rel = gen(spec, r) * gen(spec, r);
                for (int i = 1; i <= n + k - r; ++i) {
                    GeneratorPolynomial t = gen(spec, r + i) * flavor_generator(spec, r - i, DetFlavor::C_d);
                    t.scale_by(BigInt(i % 2 != 0 ? -2 : 2));
                    rel += t;
                }
                if (quantum) {
                    // RHS (-1)^(n+k-r) sigma_{2r-n-k-1} q, with sigma_0 = 1.
                    int idx = 2 * r - n - k - 1;
                    if (idx >= 0) {
                        GeneratorPolynomial rhs =
                            idx == 0 ? GeneratorPolynomial::one(1) : gen(spec, idx);
                        QExponent q1 = QExponent::zero(1);
                        q1.e[0] = 1;
                        GeneratorPolynomial shifted;
                        for (const auto& [key, c] : rhs.terms())
                            shifted.add_term(key.mono, key.q + q1, c);
                        shifted.scale_by(BigInt((n + k - r) % 2 != 0 ? 1 : -1));
                        rel += shifted;  // LHS - RHS
                    }
                }
                push(rep, engine, mode, std::string(quantum ? "QR2" : "R2") + "[r=" +
                                            std::to_string(r) + "]",
                     std::move(rel));
            }
            break;
        }
        case LieType::B: {
            for (int r = n - k + 1; r <= n; ++r)
                push(rep, engine, mode, "R1[r=" + std::to_string(r) + "]",
                     schur_determinant(spec, r, DetFlavor::B_weighted));
            for (int r = n + 1; r <= n + k; ++r) {
                GeneratorPolynomial rel = alternating_tail(spec, r, DetFlavor::B_weighted);
                std::string name = "R1'[r=" + std::to_string(r) + "]";
                if (quantum && r == n + k) {
                    rel += q_term(spec, 0, -1);  // LHS = q
                    name = "QR1''";
                }
                push(rep, engine, mode, name, std::move(rel));
            }
            for (int r = k + 1; r <= n; ++r)
                push(rep, engine, mode, "R2[r=" + std::to_string(r) + "]",
                     quadratic_relation(spec, r, DetFlavor::B_weighted));
            break;
        }
        case LieType::D:
        case LieType::Dmax: {
            for (int r = n - k + 2; r <= n; ++r)
                push(rep, engine, mode, "R1[r=" + std::to_string(r) + "]",
                     schur_determinant(spec, r, DetFlavor::D_Delta));
            {
                // tau_k Delta_{n+1-k} = tau'_k Delta_{n+1-k} = sum_{p=k+1}^{n+1}
                // (-1)^(p+k+1) tau_p Delta_{n+1-p}; on OG(n,2n+2) the first two
                // members acquire -q_1 resp. -q_2.
                GeneratorPolynomial delta_top = schur_determinant(spec, n + 1 - k, DetFlavor::D_Delta);
                GeneratorPolynomial rhs;
                for (int p = k + 1; p <= n + 1; ++p) {
                    if (p > spec.max_part()) break;
                    GeneratorPolynomial t =
                        gen(spec, p) * schur_determinant(spec, n + 1 - p, DetFlavor::D_Delta);
                    if ((p + k + 1) % 2 != 0) t.scale_by(BigInt(-1));
                    rhs += t;
                }
                GeneratorPolynomial lhs1 = gen(spec, k, false) * delta_top;
                GeneratorPolynomial lhs2 = gen(spec, k, true) * delta_top;
                if (quantum && spec.lie_type == LieType::Dmax) {
                    lhs1 += q_term(spec, 0, -1);
                    lhs2 += q_term(spec, 1, -1);
                }
                GeneratorPolynomial neg_rhs = rhs;
                neg_rhs.scale_by(BigInt(-1));
                lhs1 += neg_rhs;
                lhs2 += neg_rhs;
                push(rep, engine, mode, "R1'[tau_k]", std::move(lhs1));
                push(rep, engine, mode, "R1'[tau'_k]", std::move(lhs2));
            }
            for (int r = n + 2; r <= n + k; ++r) {
                GeneratorPolynomial rel = alternating_tail(spec, r, DetFlavor::D_Delta);
                std::string name = "R1''[r=" + std::to_string(r) + "]";
                if (quantum && r == n + k && spec.lie_type == LieType::D) {
                    rel += q_term(spec, 0, 1);  // LHS = -q
                    name = "QR1q";
                }
                push(rep, engine, mode, name, std::move(rel));
            }
            for (int r = k + 1; r <= n; ++r)
                push(rep, engine, mode, "R2[r=" + std::to_string(r) + "]",
                     quadratic_relation(spec, r, DetFlavor::D_Delta));
            {
                GeneratorPolynomial rel = gen(spec, k, false) * gen(spec, k, true);
                for (int i = 1; i <= k; ++i) {
                    if (k + i > spec.max_part()) break;
                    GeneratorPolynomial t = gen(spec, k + i) * flavor_generator(spec, k - i, DetFlavor::D_Delta);
                    if (i % 2 != 0) t.scale_by(BigInt(-1));
                    rel += t;
                }
                push(rep, engine, mode, "R2'", std::move(rel));
            }
            break;
        }
    }
    return rep;
}

BasisReport basis_check(Engine& engine) {
    const GrassmannianSpec& spec = engine.spec();
    const int n = spec.n, k = spec.k;
    BasisReport rep;
    std::vector<SchubertLabel> basis = enumerate_basis(spec);
    rep.basis_size = static_cast<long long>(basis.size());
    const QExponent q0 = QExponent::zero(spec.num_q_vars());

    rep.unitriangular = true;
    for (const SchubertLabel& lambda : basis) {
        RingElement e = engine.evaluate_monomial(engine.monomial_of(lambda), ProductMode::Classical);
        if (e.extract_coefficient(lambda, q0) != BigInt(1)) {
            rep.unitriangular = false;
            break;
        }
        for (const auto& [key, c] : e.terms()) {
            if (key.label == lambda) continue;
            if (!(key.label < lambda)) {  // corrections precede lambda in the fixed order
                rep.unitriangular = false;
                break;
            }
        }
        if (!rep.unitriangular) break;
    }

    BigInt num(1), den(1);
    auto mul_range = [](BigInt& acc, int lo, int hi, int scale) {
        for (int r = lo; r <= hi; ++r) acc *= BigInt(scale * r);
    };
    switch (spec.lie_type) {
        case LieType::C:
            mul_range(num, n - k + 1, n + k, 1);
            mul_range(num, k + 1, n, 2);
            mul_range(den, 1, n + k, 1);
            break;
        case LieType::B:
            mul_range(num, n - k + 1, n + k, 1);
            mul_range(num, k + 1, n, 2);
            mul_range(den, 1, n + k, 1);
            break;
        case LieType::D:
        case LieType::Dmax:
            mul_range(num, n - k + 2, n, 1);
            num *= BigInt(n + 1) * BigInt(n + 1);
            mul_range(num, n + 2, n + k, 1);
            mul_range(num, k + 1, n, 2);
            num *= BigInt(2 * k);
            mul_range(den, 1, n + k, 1);
            den *= BigInt(k);
            break;
    }
    rep.rank_matches = num == den * BigInt(rep.basis_size);
    return rep;
}

}  // namespace grassq
