#include <doctest.h>

#include "grassq/presentation.hpp"

using namespace grassq;

namespace {

GeneratorPolynomial mono1(const GrassmannianSpec& spec, std::vector<std::pair<int, bool>> gens,
                          long long c = 1) {
    GeneratorPolynomial g;
    Monomial m;
    for (auto [p, primed] : gens) m.push_back(SpecialClass{p, primed});
    g.add_term(std::move(m), QExponent::zero(spec.num_q_vars()), BigInt(c));
    return g;
}

}  // namespace

TEST_CASE("schur determinants expand through the top-row recursion") {
    GrassmannianSpec c = make_spec(LieType::C, 2, 3);
    CHECK(schur_determinant(c, 0, DetFlavor::C_d) == GeneratorPolynomial::one(1));
    CHECK(schur_determinant(c, 1, DetFlavor::C_d) == mono1(c, {{1, false}}));
    GeneratorPolynomial d2 = mono1(c, {{1, false}, {1, false}});
    GeneratorPolynomial s2 = mono1(c, {{2, false}}, -1);
    d2 += s2;
    CHECK(schur_determinant(c, 2, DetFlavor::C_d) == d2);  // sigma_1^2 - sigma_2

    GrassmannianSpec b = make_spec(LieType::B, 2, 3);  // k = 1
    GeneratorPolynomial bd2 = mono1(b, {{1, false}, {1, false}});
    GeneratorPolynomial bt2 = mono1(b, {{2, false}}, -2);
    bd2 += bt2;
    CHECK(schur_determinant(b, 2, DetFlavor::B_weighted) == bd2);  // tau_1^2 - 2 tau_2
}

TEST_CASE("Whitney-sum shapes of evaluated determinants") {
    // IG(2,6): d_r evaluates to sigma_(1^r) for r <= m.
    GrassmannianSpec c = make_spec(LieType::C, 2, 3);
    Engine ec(c);
    const QExponent q0 = QExponent::zero(1);
    for (int r = 1; r <= c.m; ++r) {
        RingElement v = evaluate(ec, schur_determinant(c, r, DetFlavor::C_d),
                                 ProductMode::Classical);
        RingElement expected(1);
        expected.add_term(make_label(std::vector<int>(static_cast<std::size_t>(r), 1)), q0,
                          BigInt(1));
        CHECK(v == expected);
    }
    // ... and to zero beyond m, including the redundant range (n+k, 2n].
    for (int r = c.m + 1; r <= 2 * c.n; ++r) {
        CHECK(evaluate(ec, schur_determinant(c, r, DetFlavor::C_d), ProductMode::Classical)
                  .is_zero());
    }

    // OG(2,6) (type D, k = 1): Delta_{n+1-k} = tau_(1,1) + tau'_(1,1) + shorter terms.
    GrassmannianSpec d = make_spec(LieType::D, 2, 2);
    Engine ed(d);
    RingElement v = evaluate(ed, schur_determinant(d, 2, DetFlavor::D_Delta),
                             ProductMode::Classical);
    CHECK(v.extract_coefficient(parse_label("1,1:1"), q0) == BigInt(1));
    CHECK(v.extract_coefficient(parse_label("1,1:2"), q0) == BigInt(1));
    for (const auto& [key, c2] : v.terms()) CHECK(key.label.length() <= 2);

    // evaluate(1) is the unit class.
    CHECK(evaluate(ec, GeneratorPolynomial::one(1), ProductMode::Classical) ==
          RingElement::unit(c));
}

TEST_CASE("power series identity for the quadratic relations") {
    // sum (-1)^i b_i t^{2i} = (sum a_i t^i)(sum (-1)^i a_i t^i) as formal
    // polynomials in the generator algebra, with b_r = a_r^2 + 2 sum (-1)^i
    // a_{r+i} a_{r-i}.
    GrassmannianSpec c = make_spec(LieType::C, 3, 5);
    const int L = c.max_part();
    std::vector<GeneratorPolynomial> A(static_cast<std::size_t>(2 * L + 1));
    for (int i = 0; i <= 2 * L; ++i) {
        if (i == 0) A[0] = GeneratorPolynomial::one(1);
        else if (i <= L) A[static_cast<std::size_t>(i)] = mono1(c, {{i, false}});
    }
    for (int deg = 0; deg <= 2 * L; ++deg) {
        GeneratorPolynomial rhs;
        for (int i = 0; i <= deg; ++i) {
            int j = deg - i;
            if (i > L || j > L) continue;
            GeneratorPolynomial t = A[static_cast<std::size_t>(i)] * A[static_cast<std::size_t>(j)];
            if (j % 2 != 0) t.scale_by(BigInt(-1));
            rhs += t;
        }
        GeneratorPolynomial lhs;
        if (deg % 2 == 0) {
            int r = deg / 2;
            // b_r expanded directly.
            if (r <= L) {
                lhs = A[static_cast<std::size_t>(r)] * A[static_cast<std::size_t>(r)];
                for (int i = 1; i <= r; ++i) {
                    if (r + i > L) break;
                    GeneratorPolynomial t =
                        A[static_cast<std::size_t>(r + i)] * A[static_cast<std::size_t>(r - i)];
                    t.scale_by(BigInt(i % 2 != 0 ? -2 : 2));
                    lhs += t;
                }
                if (r % 2 != 0) lhs.scale_by(BigInt(-1));
            }
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("presentations verify on the acceptance spaces") {
    std::vector<GrassmannianSpec> specs = {
        make_spec(LieType::C, 2, 3),    // IG(2,6)
        make_spec(LieType::B, 2, 3),    // OG(2,7)
        make_spec(LieType::D, 2, 3),    // OG(2,8)
        make_spec(LieType::Dmax, 2, 2)  // OG(2,6)
    };
    for (auto& spec : specs) {
        Engine engine(spec);
        PresentationReport classical = verify_presentation(engine, ProductMode::Classical);
        CHECK(classical.pass);
        PresentationReport quantum = verify_presentation(engine, ProductMode::Quantum);
        CHECK(quantum.pass);
        for (const auto& rel : quantum.relations) CHECK(rel.residual.is_zero());
    }
}

TEST_CASE("quantum right-hand sides are exactly as printed") {
    // B: sum_{p=k+1}^{n+k} (-1)^p tau_p h_{n+k-p} evaluates to q exactly.
    GrassmannianSpec b = make_spec(LieType::B, 2, 3);
    Engine eb(b);
    GeneratorPolynomial tail;
    for (int p = b.k + 1; p <= b.max_part(); ++p) {
        GeneratorPolynomial t = mono1(b, {{p, false}}) *
                                schur_determinant(b, b.max_part() - p, DetFlavor::B_weighted);
        if (p % 2 != 0) t.scale_by(BigInt(-1));
        tail += t;
    }
    RingElement q_elem(1);
    q_elem.add_term(SchubertLabel{}, QExponent{{1}}, BigInt(1));
    CHECK(evaluate(eb, tail, ProductMode::Quantum) == q_elem);

    // D: the same tail evaluates to -q.
    GrassmannianSpec d = make_spec(LieType::D, 2, 3);
    Engine edd(d);
    GeneratorPolynomial dtail;
    for (int p = d.k + 1; p <= d.max_part(); ++p) {
        GeneratorPolynomial t = mono1(d, {{p, false}}) *
                                schur_determinant(d, d.max_part() - p, DetFlavor::D_Delta);
        if (p % 2 != 0) t.scale_by(BigInt(-1));
        dtail += t;
    }
    RingElement minus_q(1);
    minus_q.add_term(SchubertLabel{}, QExponent{{1}}, BigInt(-1));
    CHECK(evaluate(edd, dtail, ProductMode::Quantum) == minus_q);

    // Dmax appendix: tau_1 Delta_n - q_1 = tau'_1 Delta_n - q_2 = the tail,
    // and tau_1 tau'_1 = tau_2.
    GrassmannianSpec dm = make_spec(LieType::Dmax, 2, 2);
    Engine em(dm);
    GeneratorPolynomial delta_n = schur_determinant(dm, dm.n, DetFlavor::D_Delta);
    GeneratorPolynomial rhs;
    for (int p = 2; p <= dm.n + 1; ++p) {
        GeneratorPolynomial t =
            mono1(dm, {{p, false}}) * schur_determinant(dm, dm.n + 1 - p, DetFlavor::D_Delta);
        if (p % 2 != 0) t.scale_by(BigInt(-1));
        rhs += t;
    }
    RingElement rhs_val = evaluate(em, rhs, ProductMode::Quantum);
    RingElement left1 = evaluate(em, mono1(dm, {{1, false}}) * delta_n, ProductMode::Quantum);
    RingElement q1(2), q2(2);
    q1.add_term(SchubertLabel{}, QExponent{{1, 0}}, BigInt(-1));
    q2.add_term(SchubertLabel{}, QExponent{{0, 1}}, BigInt(-1));
    left1 += q1;
    CHECK(left1 == rhs_val);
    RingElement left2 = evaluate(em, mono1(dm, {{1, true}}) * delta_n, ProductMode::Quantum);
    left2 += q2;
    CHECK(left2 == rhs_val);
    CHECK(evaluate(em, mono1(dm, {{1, false}, {1, true}}), ProductMode::Quantum) ==
          evaluate(em, mono1(dm, {{2, false}}), ProductMode::Quantum));
}

TEST_CASE("basis checks") {
    for (auto spec : {make_spec(LieType::C, 2, 3), make_spec(LieType::B, 2, 3),
                      make_spec(LieType::D, 2, 3), make_spec(LieType::D, 2, 2),
                      make_spec(LieType::Dmax, 2, 2), make_spec(LieType::C, 3, 4)}) {
        Engine engine(spec);
        BasisReport rep = basis_check(engine);
        CHECK(rep.unitriangular);
        CHECK(rep.rank_matches);
    }
    Engine e(make_spec(LieType::C, 2, 3));
    CHECK(basis_check(e).basis_size == 12);
}

TEST_CASE("D averaging: c_k acts as tau_k + tau'_k") {
    GrassmannianSpec d = make_spec(LieType::D, 2, 3);
    Engine engine(d);
    GeneratorPolynomial ck = mono1(d, {{d.k, false}});
    ck += mono1(d, {{d.k, true}});
    for (const SchubertLabel& lambda : enumerate_basis(d)) {
        RingElement base(1);
        base.add_term(lambda, QExponent::zero(1), BigInt(1));
        RingElement via_poly = engine.apply_polynomial(ck, base, ProductMode::Classical);
        RingElement direct = classical_pieri(d, SpecialClass{d.k, false}, lambda);
        direct += classical_pieri(d, SpecialClass{d.k, true}, lambda);
        CHECK(via_poly == direct);
    }
}

TEST_CASE("presentation sweep across all types and sizes") {
    std::vector<GrassmannianSpec> specs;
    for (int n = 2; n <= 5; ++n) {
        specs.push_back(make_spec(LieType::C, 2, n));
        specs.push_back(make_spec(LieType::B, 2, n));
        specs.push_back(make_spec(LieType::D, 2, n));
        specs.push_back(make_spec(LieType::C, n, n));      // Lagrangian k = 0
        specs.push_back(make_spec(LieType::B, n, n));      // maximal odd, k = 0
        specs.push_back(make_spec(LieType::Dmax, n, n));
    }
    specs.push_back(make_spec(LieType::C, 3, 5));
    specs.push_back(make_spec(LieType::D, 4, 5));
    specs.push_back(make_spec(LieType::D, 3, 5));
    for (int n = 2; n <= 4; ++n) {
        specs.push_back(make_spec(LieType::C, 1, n));  // projective space
        specs.push_back(make_spec(LieType::B, 1, n));  // odd quadric
        specs.push_back(make_spec(LieType::D, 1, n));  // even quadric
    }
    for (auto& spec : specs) {
        CAPTURE(to_string(spec.lie_type));
        CAPTURE(spec.m);
        CAPTURE(spec.n);
        Engine engine(spec);
        CHECK(verify_presentation(engine, ProductMode::Classical).pass);
        if (spec.quantum_supported())
            CHECK(verify_presentation(engine, ProductMode::Quantum).pass);
        BasisReport rep = basis_check(engine);
        CHECK(rep.unitriangular);
        CHECK(rep.rank_matches);
    }
}
