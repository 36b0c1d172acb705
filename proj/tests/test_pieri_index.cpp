#include <doctest.h>

#include <algorithm>

#include "grassq/pieri_index.hpp"

using namespace grassq;

TEST_CASE("index_arrow examples") {
    GrassmannianSpec c = make_spec(LieType::C, 4, 6);
    IndexSet P = label_to_index_set(c, parse_label("5,3,2,2"));
    IndexSet Q1 = label_to_index_set(c, parse_label("8,4,2,2"));
    IndexSet Q2 = label_to_index_set(c, parse_label("8,5,2,1"));
    CHECK(index_arrow(c, P, Q1));
    CHECK_FALSE(index_arrow(c, P, Q2));
    CHECK(index_arrow(c, P, P));  // empty strip
    CHECK_THROWS(index_arrow(c, IndexSet{{1, 2, 3}}, P));           // wrong cardinality
    CHECK_THROWS(index_arrow(c, IndexSet{{1, 2, 3, 12}}, P));       // complementary pair 1+12
}

TEST_CASE("index multiplicities on worked examples") {
    GrassmannianSpec c = make_spec(LieType::C, 4, 6);
    IndexSet P = label_to_index_set(c, parse_label("5,3,2,2"));
    CHECK(index_multiplicity(c, P, label_to_index_set(c, parse_label("8,4,2,2")),
                             SpecialClass{4}) == BigInt(4));

    GrassmannianSpec b = make_spec(LieType::B, 4, 6);
    IndexSet Pb = label_to_index_set(b, parse_label("5,3,2,2"));
    CHECK(index_multiplicity(b, Pb, label_to_index_set(b, parse_label("7,5,2,2")),
                             SpecialClass{4}) == BigInt(1));

    GrassmannianSpec d = make_spec(LieType::D, 5, 6);
    IndexSet Pd = label_to_index_set(d, parse_label("8,7,2,1,1:1"));
    IndexSet Qd = label_to_index_set(d, parse_label("8,7,6"));
    CHECK(index_arrow(d, Pd, Qd));
    CHECK(index_multiplicity(d, Pd, Qd, SpecialClass{2, false}) == BigInt(1));
    CHECK(index_multiplicity(d, Pd, Qd, SpecialClass{2, true}) == BigInt(0));

    // Degree precondition enforced.
    CHECK_THROWS(index_multiplicity(c, P, label_to_index_set(c, parse_label("8,4,2,2")),
                                    SpecialClass{3}));
}

TEST_CASE("crossings are the union of the row intervals") {
    GrassmannianSpec c = make_spec(LieType::C, 4, 6);
    IndexSet P = label_to_index_set(c, parse_label("5,3,2,2"));
    IndexSet Q = label_to_index_set(c, parse_label("8,4,2,2"));
    CutProfile prof = cut_profile(c, P, Q);
    for (int x = 0; x <= c.ambient_N; ++x) {
        bool crossing = false;
        for (std::size_t i = 0; i < P.entries.size(); ++i)
            if (Q.entries[i] <= x && x < P.entries[i]) crossing = true;
        bool cut = std::find(prof.cuts.begin(), prof.cuts.end(), x) != prof.cuts.end();
        CHECK(cut == !crossing);
    }
}

TEST_CASE("classical_pieri_via_index agrees termwise with the partition rule") {
    // Oracle equivalence over whole small spaces, all specials, all labels.
    std::vector<GrassmannianSpec> specs;
    for (int n = 1; n <= 4; ++n)
        for (int m = 1; m <= n; ++m) {
            specs.push_back(make_spec(LieType::C, m, n));
            specs.push_back(make_spec(LieType::B, m, n));
        }
    for (int n = 2; n <= 3; ++n)
        for (int m = 1; m <= n; ++m) specs.push_back(make_spec(LieType::D, m, n));
    specs.push_back(make_spec(LieType::Dmax, 3, 3));
    for (const auto& spec : specs) {
        for (const SchubertLabel& lambda : enumerate_basis(spec)) {
            for (int p = 1; p <= spec.max_part(); ++p) {
                CHECK(classical_pieri(spec, SpecialClass{p}, lambda) ==
                      classical_pieri_via_index(spec, SpecialClass{p}, lambda));
                if (spec.is_even_orthogonal() && p == spec.k) {
                    CHECK(classical_pieri(spec, SpecialClass{p, true}, lambda) ==
                          classical_pieri_via_index(spec, SpecialClass{p, true}, lambda));
                }
            }
        }
    }
}

TEST_CASE("raw index-set enumeration gives the same products") {
    std::vector<GrassmannianSpec> specs = {make_spec(LieType::C, 2, 4),
                                           make_spec(LieType::C, 3, 4),
                                           make_spec(LieType::B, 2, 3),
                                           make_spec(LieType::D, 2, 3),
                                           make_spec(LieType::D, 3, 4),
                                           make_spec(LieType::Dmax, 3, 3)};
    for (const auto& spec : specs) {
        for (const SchubertLabel& lambda : enumerate_basis(spec)) {
            for (int p = 1; p <= spec.max_part(); ++p) {
                CHECK(classical_pieri_via_index(spec, SpecialClass{p}, lambda, true) ==
                      classical_pieri(spec, SpecialClass{p}, lambda));
                if (spec.is_even_orthogonal() && p == spec.k)
                    CHECK(classical_pieri_via_index(spec, SpecialClass{p, true}, lambda, true) ==
                          classical_pieri(spec, SpecialClass{p, true}, lambda));
            }
        }
    }
}

TEST_CASE("D: positive types agree along index arrows") {
    GrassmannianSpec d = make_spec(LieType::D, 3, 4);
    auto basis = enumerate_basis(d);
    for (const SchubertLabel& a : basis) {
        IndexSet P = label_to_index_set(d, a);
        for (const SchubertLabel& b : basis) {
            if (b.weight() <= a.weight()) continue;
            IndexSet Q = label_to_index_set(d, b);
            if (!index_arrow(d, P, Q)) continue;
            if (a.type > 0 && b.type > 0) CHECK(a.type == b.type);
        }
    }
}

TEST_CASE("skew diagram shape") {
    GrassmannianSpec c = make_spec(LieType::C, 3, 5);
    IndexSet P = label_to_index_set(c, parse_label("5,3,1"));
    SkewDiagram dg = skew_diagram(c, P, P);
    REQUIRE(dg.rows.size() == 3);
    for (std::size_t i = 0; i < dg.rows.size(); ++i) {
        CHECK(dg.rows[i].first == P.entries[i]);
        CHECK(dg.rows[i].second == P.entries[i]);
    }
    CHECK_THROWS(skew_diagram(c, P, label_to_index_set(c, parse_label("-"))));  // Q not below P
}
