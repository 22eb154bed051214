#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "padk1/group.hpp"

using namespace padk1;

TEST_CASE("trivial group") {
    auto g = catalog_group("C1");
    CHECK(g->order() == 1);
    CHECK(g->classes().classes.size() == 1);
}

TEST_CASE("dihedral presentation enumerates to order 8 with 5 classes") {
    auto g = group_from_presentation(parse_presentation("gens 2\na^4\nb^2\nb a b^-1 a"), 256);
    CHECK(g->order() == 8);
    CHECK(g->classes().classes.size() == 5);
    CHECK(!g->is_abelian());
}

TEST_CASE("quaternion presentation enumerates to Q8") {
    auto g = catalog_group("Q8");
    CHECK(g->order() == 8);
    auto sizes = g->classes().sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<i64>({1, 1, 2, 2, 2}));
    // center is {1, -1}
    CHECK(g->center().size() == 2);
}

TEST_CASE("S3 classes have sizes 1, 2, 3") {
    auto g = catalog_group("S3");
    REQUIRE(g->order() == 6);
    auto sizes = g->classes().sizes;
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<i64>({1, 2, 3}));
}

TEST_CASE("Heisenberg group of order 27") {
    auto g = catalog_group("Heis3");
    CHECK(g->order() == 27);
    CHECK(g->classes().classes.size() == 11);
    CHECK(g->center().size() == 3);
    CHECK(g->is_p_group(3));
    CHECK(g->abelianization().invariants == AbelianInvariants{{3, 3}});
}

TEST_CASE("abelianization of Q8 is C2 x C2, of S3 is C2") {
    CHECK(catalog_group("Q8")->abelianization().invariants == AbelianInvariants{{2, 2}});
    CHECK(catalog_group("S3")->abelianization().invariants == AbelianInvariants{{2}});
    auto c6 = catalog_group("C6");
    CHECK(c6->abelianization().invariants == AbelianInvariants{{6}});
}

TEST_CASE("derived subgroup of Q8 is {1, -1}") {
    auto g = catalog_group("Q8");
    CHECK(g->derived_subgroup().size() == 2);
}

TEST_CASE("p-regular classes") {
    auto s3 = catalog_group("S3");
    // p = 3: identity and the transposition class remain
    auto pr3 = s3->p_regular_classes(3);
    CHECK(pr3.size() == 2);
    for (i64 c : pr3) CHECK(s3->elem_order(s3->classes().reps[c]) % 3 != 0);
    // p = 2: identity and the 3-cycles
    auto pr2 = s3->p_regular_classes(2);
    CHECK(pr2.size() == 2);
    // p-group: only the identity class
    CHECK(catalog_group("Heis3")->p_regular_classes(3).size() == 1);
}

TEST_CASE("central order-p element and omega sets") {
    auto cp = catalog_group("C3");
    auto z = cp->central_order_p_element(3);
    REQUIRE(z.has_value());
    CHECK(cp->omega_set(*z).empty());  // abelian: g never conjugate to zg

    auto q8 = catalog_group("Q8");
    auto z2 = q8->central_order_p_element(2);
    REQUIRE(z2.has_value());
    auto om = q8->omega_set(*z2);
    CHECK(om.size() == 6);  // the six elements of order 4
    for (i64 g : om) CHECK(q8->elem_order(g) == 4);

    auto d4 = catalog_group("D4");
    auto zd = d4->central_order_p_element(2);
    REQUIRE(zd.has_value());
    // oracle: exhaustive check of the conjugacy condition
    std::set<i64> expect;
    const auto& cd = d4->classes();
    for (i64 g = 0; g < d4->order(); ++g)
        if (cd.class_of[g] == cd.class_of[d4->mul(*zd, g)]) expect.insert(g);
    auto got = d4->omega_set(*zd);
    CHECK(std::set<i64>(got.begin(), got.end()) == expect);

    CHECK_THROWS_AS(q8->omega_set(om[0]), NotCentral);
}

TEST_CASE("power map on classes") {
    auto c4 = catalog_group("C4");
    CHECK(c4->power_map_on_classes(1) == std::vector<i64>({0, 1, 2, 3}));
    auto pm = c4->power_map_on_classes(2);
    // classes of C4 are singletons {0},{1},{2},{3}: squares are 0,2,0,2
    CHECK(pm == std::vector<i64>({0, 2, 0, 2}));

    auto q8 = catalog_group("Q8");
    auto pm2 = q8->power_map_on_classes(2);
    const auto& cd = q8->classes();
    i64 minus1_class = -1;
    for (size_t c = 0; c < cd.reps.size(); ++c)
        if (cd.sizes[c] == 1 && cd.reps[c] != 0) minus1_class = static_cast<i64>(c);
    for (size_t c = 0; c < cd.reps.size(); ++c) {
        if (cd.sizes[c] == 2) CHECK(pm2[c] == minus1_class);  // non-central classes square to -1
    }
    // composition property: (g^2)^2 = g^4
    auto pm4 = q8->power_map_on_classes(4);
    for (size_t c = 0; c < pm2.size(); ++c) CHECK(pm4[c] == pm2[pm2[c]]);
}

TEST_CASE("k-conjugacy bookkeeping") {
    // p-group: single tuple (1, G, G)
    auto h = catalog_group("C9");
    auto ks = h->k_conjugacy_bookkeeping(3, 2);
    REQUIRE(ks.size() == 1);
    CHECK(ks[0].rep == 0);
    CHECK(static_cast<i64>(ks[0].n_subgroup.size()) == h->order());
    CHECK(static_cast<i64>(ks[0].z_subgroup.size()) == h->order());

    // C3 at p = 2, K = Q_2: 2 generates (Z/3)^x so g and g^2 fuse
    auto c3 = catalog_group("C3");
    auto kc = c3->k_conjugacy_bookkeeping(2, 2);
    CHECK(kc.size() == 2);  // identity class + one fused nontrivial class
    bool found_fused = false;
    for (const auto& k : kc)
        if (k.fused_classes.size() == 2) found_fused = true;
    CHECK(found_fused);

    // S3 at p = 3: transposition class has N = Z = its centralizer (order 2)
    auto s3 = catalog_group("S3");
    auto k3 = s3->k_conjugacy_bookkeeping(3, 3);
    for (const auto& k : k3) {
        if (s3->elem_order(k.rep) == 2) {
            CHECK(k.n_subgroup == k.z_subgroup);
            CHECK(k.z_subgroup.size() == 2);
        }
    }
    // S3 at p = 2: the 3-cycle rep has Z = C3 but N = S3 (inverted by transpositions)
    auto k2 = s3->k_conjugacy_bookkeeping(2, 2);
    for (const auto& k : k2) {
        if (s3->elem_order(k.rep) == 3) {
            CHECK(k.z_subgroup.size() == 3);
            CHECK(k.n_subgroup.size() == 6);
        }
    }
}

TEST_CASE("abelian invariants from order counting match construction") {
    auto g = catalog_group("C2xC4");
    std::vector<i64> all(g->order());
    for (i64 i = 0; i < g->order(); ++i) all[i] = i;
    CHECK(g->abelian_invariants_of(all) == AbelianInvariants{{2, 4}});
    auto g2 = catalog_group("C3xC9");
    std::vector<i64> all2(g2->order());
    for (i64 i = 0; i < g2->order(); ++i) all2[i] = i;
    CHECK(g2->abelian_invariants_of(all2) == AbelianInvariants{{3, 9}});
    auto g3 = catalog_group("C6");
    std::vector<i64> all3(6);
    for (i64 i = 0; i < 6; ++i) all3[i] = i;
    CHECK(g3->abelian_invariants_of(all3) == AbelianInvariants{{6}});
}

TEST_CASE("central quotient of Heis3 is C3 x C3") {
    auto g = catalog_group("Heis3");
    auto z = g->central_order_p_element(3);
    REQUIRE(z.has_value());
    auto q = g->quotient_by_central(*z);
    CHECK(q.quotient->order() == 9);
    CHECK(q.quotient->is_abelian());
    // projection is a homomorphism and the section is a right inverse
    for (i64 a = 0; a < g->order(); ++a)
        for (i64 b = 0; b < g->order(); ++b)
            CHECK(q.proj[g->mul(a, b)] == q.quotient->mul(q.proj[a], q.proj[b]));
    for (i64 c = 0; c < q.quotient->order(); ++c) CHECK(q.proj[q.section[c]] == c);
}

TEST_CASE("presentation parser rejects malformed input") {
    CHECK_THROWS_AS(parse_presentation("nope"), BadPresentation);
    CHECK_THROWS_AS(parse_presentation("gens 1\nz^2"), BadPresentation);
    CHECK_THROWS_AS(parse_presentation("gens 1"), BadPresentation);
}

TEST_CASE("enumeration budget is enforced") {
    CHECK_THROWS_AS(group_from_presentation(parse_presentation("gens 1\na^100"), 10),
                    EnumerationBudgetExceeded);
}

TEST_CASE("invariants_minus removes a direct summand") {
    AbelianInvariants sum{{2, 4}};
    AbelianInvariants part{{2}};
    CHECK(invariants_minus(sum, part) == AbelianInvariants{{4}});
    CHECK_THROWS_AS(invariants_minus(part, sum), Error);
    AbelianInvariants a{{6}};
    CHECK(invariants_minus(a, AbelianInvariants{{2}}) == AbelianInvariants{{3}});
}

TEST_CASE("torsion and quotient parts of invariants") {
    AbelianInvariants a{{2, 8}};
    CHECK(a.torsion_part(2, 1) == AbelianInvariants{{2, 2}});
    CHECK(a.torsion_part(2, 2) == AbelianInvariants{{2, 4}});
    CHECK(a.quotient_part(2, 3) == AbelianInvariants{{2, 8}});
    CHECK(a.torsion_part(3, 1).trivial());
}
