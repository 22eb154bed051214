#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "padk1/unram_ring.hpp"

using namespace padk1;

namespace {

RElt random_elt(const Ring& R, int level, Rng& rng) {
    RElt x = R->zero(level);
    for (auto& c : x.a) c = rng.below(R->pN());
    return x;
}

// oracle: high-precision series evaluation of Log on scalars of Z/p^N
i64 oracle_log_int(i64 x, i64 p, i64 N, i64 extra) {
    i64 P = N + extra;
    i64 pP = ipow(p, P);
    i64 y = mod_floor(x - 1, pP);
    __int128 acc = 0;
    i64 ypow = 1;
    for (i64 k = 1; k <= 4 * P; ++k) {
        ypow = mulmod(ypow, y, pP);
        if (ypow == 0) break;
        i64 a = val_p(k, p);
        i64 t = mulmod(ypow / ipow(p, a) % pP, invmod(k / ipow(p, a), pP), pP);
        // division exactness: ypow divisible by p^a because v(ypow) >= k > a
        REQUIRE(ypow % ipow(p, a) == 0);
        if (k % 2 == 0) t = mod_floor(-t, pP);
        acc = (acc + t) % pP;
    }
    return static_cast<i64>(acc % ipow(p, N));
}

}  // namespace

TEST_CASE("frobenius lift fixes scalars and satisfies the mod-p congruence") {
    Ring R = make_unramified_ring(3, 2, 3);
    auto& tw = *R->tower();
    RElt x = R->from_int(14);
    CHECK(R->eq(ring_frobenius(x), x));
    Rng rng(42);
    for (int t = 0; t < 30; ++t) {
        RElt y = random_elt(R, 0, rng);
        RElt fy = ring_frobenius(y);
        // fy = y^p mod p
        FElt lhs = R->residue(fy);
        FElt rhs = tw.frobenius(R->residue(y));
        CHECK(lhs.a == rhs.a);
    }
}

TEST_CASE("frobenius lift of the generator is a modulus root congruent to g^3") {
    Ring R = make_unramified_ring(3, 2, 3);
    RElt g = R->gen(0);
    RElt fg = ring_frobenius(g);
    // evaluate lifted modulus at fg
    std::vector<i64> f = R->lifted_modulus();
    RElt acc = R->zero(0);
    for (i64 i = static_cast<i64>(f.size()) - 1; i >= 0; --i) {
        acc = R->mul(acc, fg);
        acc = R->add(acc, R->from_int(f[i]));
    }
    CHECK(R->is_zero(acc));
}

TEST_CASE("frobenius lift has order n (n = 2, p = 3, N = 4)") {
    Ring R = make_unramified_ring(3, 2, 4);
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        RElt x = random_elt(R, 0, rng);
        CHECK(R->eq(R->frobenius_iter(x, 2), x));
    }
}

TEST_CASE("teichmuller of 2 in Z/27 is 26") {
    Ring R = make_unramified_ring(3, 1, 3);
    FElt two{Field{R->tower(), 0}, {2}};
    RElt w = teichmuller(R, two);
    CHECK(w.a[0] == 26);
}

TEST_CASE("teichmuller of a primitive element of F_9 has order 8") {
    Ring R = make_unramified_ring(3, 2, 2);
    auto& tw = *R->tower();
    // find a multiplicative generator by exhaustive order check
    FElt theta = tw.gen(0);
    for (i64 c0 = 0; c0 < 3; ++c0) {
        FElt cand = tw.add(tw.gen(0), tw.from_int(0, c0));
        bool prim = !tw.is_zero(cand);
        for (i64 k : {2, 4})
            prim = prim && !tw.is_zero(tw.sub(tw.pow(cand, k), tw.one(0)));
        if (prim) { theta = cand; break; }
    }
    REQUIRE(!tw.is_zero(tw.sub(tw.pow(theta, 8), tw.one(0))) == false);
    RElt w = teichmuller(R, theta);
    CHECK(R->residue(w).a == theta.a);
    CHECK(R->is_zero(R->sub(R->pow(w, 8), R->one(0))));
    CHECK(!R->is_zero(R->sub(R->pow(w, 4), R->one(0))));
    CHECK_THROWS_AS(teichmuller(R, tw.zero(0)), ZeroInput);
}

TEST_CASE("solve_one_minus_frobenius verifies and normalizes zero") {
    Ring R = make_unramified_ring(3, 2, 3);
    RElt z = R->zero(0);
    CHECK(R->is_zero(solve_one_minus_frobenius(z)));

    Rng rng(9);
    for (int t = 0; t < 50; ++t) {
        RElt r = random_elt(R, 0, rng);
        RElt s = solve_one_minus_frobenius(r);
        RElt lhs = s.R->sub(s, ring_frobenius(s));
        CHECK(s.R->eq(lhs, s.R->embed_up(s.R->to_ctx(r, s.R), s.level)));
    }
}

TEST_CASE("solve_one_minus_frobenius extends the tower for r = 1 over Z_3") {
    Ring R = make_unramified_ring(3, 1, 2);
    RElt r = R->from_int(1);
    RElt s = solve_one_minus_frobenius(r);
    CHECK(s.level >= 1);
    RElt lhs = R->sub(s, ring_frobenius(s));
    CHECK(R->eq(lhs, R->embed_up(r, s.level)));
}

TEST_CASE("kernel of 1 - phi is exactly Z/p^N at (3, 2, 2)") {
    Ring R = make_unramified_ring(3, 2, 2);
    // exhaustive over all 81 elements of W(F_9)/9
    int kernel = 0;
    for (i64 a0 = 0; a0 < 9; ++a0)
        for (i64 a1 = 0; a1 < 9; ++a1) {
            RElt x = R->zero(0);
            x.a = {a0, a1};
            RElt d = R->sub(x, ring_frobenius(x));
            if (R->is_zero(d)) {
                ++kernel;
                CHECK(x.a[1] == 0);  // scalar
            }
        }
    CHECK(kernel == 9);
}

TEST_CASE("scalar_log of 4 at p = 3, N = 4 is 48 (high-precision oracle)") {
    Ring R = make_unramified_ring(3, 1, 4);
    RElt x = R->from_int(4);
    RElt lg = scalar_log(x);
    CHECK(lg.a[0] == 48);
    CHECK(lg.a[0] == oracle_log_int(4, 3, 4, 2));
    CHECK(lg.prec == 4);
}

TEST_CASE("scalar log and exp are mutually inverse on 1 + pO") {
    Ring R = make_unramified_ring(3, 2, 4);
    Rng rng(23);
    for (int t = 0; t < 25; ++t) {
        RElt u = random_elt(R, 0, rng);
        RElt x = R->add(R->one(0), R->mul_int(u, 3));
        RElt back = scalar_exp(scalar_log(x));
        CHECK(R->eq(back, x));
    }
    for (int t = 0; t < 10; ++t) {
        RElt u = random_elt(R, 0, rng);
        RElt a = R->mul_int(u, 3);
        RElt back = scalar_log(scalar_exp(a));
        CHECK(R->eq(back, a));
    }
}

TEST_CASE("scalar_log rejects arguments not congruent to 1") {
    Ring R = make_unramified_ring(3, 1, 3);
    CHECK_THROWS_AS(scalar_log(R->from_int(2)), DomainError);
    CHECK_THROWS_AS(scalar_exp(R->from_int(1)), DomainError);
}

TEST_CASE("(p - phi) solve is exact") {
    Ring R = make_unramified_ring(3, 2, 4);
    Rng rng(5);
    for (int t = 0; t < 25; ++t) {
        RElt w = random_elt(R, 0, rng);
        RElt y = R->solve_p_minus_frobenius(w);
        RElt lhs = R->sub(R->mul_int(y, 3), ring_frobenius(y));
        CHECK(R->eq(lhs, w));
    }
}

TEST_CASE("ring inverse by Newton iteration") {
    Ring R = make_unramified_ring(5, 2, 4);
    Rng rng(17);
    for (int t = 0; t < 20; ++t) {
        RElt x = random_elt(R, 0, rng);
        if (!R->is_unit(x)) continue;
        CHECK(R->is_zero(R->sub(R->mul(x, R->inv(x)), R->one(0))));
    }
    CHECK_THROWS_AS(R->inv(R->mul_int(R->one(0), 5)), NotAUnit);
}

TEST_CASE("frobenius on a solver-grown tower level keeps order equal to degree") {
    Ring R = make_unramified_ring(3, 1, 2);
    RElt s = solve_one_minus_frobenius(R->from_int(1));
    REQUIRE(s.level >= 1);
    // phi^(degree) = id at that level
    i64 deg = R->degree(s.level);
    CHECK(R->eq(R->frobenius_iter(s, deg), s));
}

TEST_CASE("ring embedding W(F_3)/27 -> W(F_9)/27 commutes with frobenius") {
    Ring Rsmall = make_unramified_ring(3, 1, 3);
    Ring Rbig = make_unramified_ring(3, 2, 3);
    auto e = embed_ring(Rsmall, Rbig);
    Rng rng(31);
    for (int t = 0; t < 10; ++t) {
        RElt x = random_elt(Rsmall, 0, rng);
        RElt lhs = apply_ring_embedding(e, ring_frobenius(x));
        RElt rhs = ring_frobenius(apply_ring_embedding(e, x));
        CHECK(Rbig->eq(lhs, rhs));
    }
    // embedding is a ring homomorphism on a sample
    RElt x = random_elt(Rsmall, 0, rng), y = random_elt(Rsmall, 0, rng);
    CHECK(Rbig->eq(apply_ring_embedding(e, Rsmall->mul(x, y)),
                   Rbig->mul(apply_ring_embedding(e, x), apply_ring_embedding(e, y))));
}

TEST_CASE("cyclotomic_extend: e = 1 and e = 2 stay rank 1; e = 4 adjoins i") {
    Ring R = make_unramified_ring(3, 1, 2);
    CHECK(cyclotomic_extend(R, 1)->dim() == 1);
    CHECK(cyclotomic_extend(R, 2)->dim() == 1);
    // e = 2: root is -1
    Cyc C2 = cyclotomic_extend(R, 2);
    CHECK(C2->root().c[0].a[0] == R->pN() - 1);
    Cyc C4 = cyclotomic_extend(R, 4);
    CHECK(C4->dim() == 2);
    CycElt i = C4->root();
    CycElt i2 = C4->mul(i, i);
    CHECK(C4->eq(i2, C4->neg(C4->one()), 2));
    // frobenius fixes i and reduces to the p-power map on the residue level:
    CycElt fi = C4->frobenius(i);
    CHECK(C4->eq(fi, i, 2));
}

TEST_CASE("cyclotomic polynomial table") {
    CHECK(cyclotomic_polynomial(1) == std::vector<i64>({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == std::vector<i64>({1, 1}));
    CHECK(cyclotomic_polynomial(4) == std::vector<i64>({1, 0, 1}));
    CHECK(cyclotomic_polynomial(3) == std::vector<i64>({1, 1, 1}));
    CHECK(cyclotomic_polynomial(6) == std::vector<i64>({1, -1, 1}));
    CHECK(cyclotomic_polynomial(9) == std::vector<i64>({1, 0, 0, 1, 0, 0, 1}));
}
