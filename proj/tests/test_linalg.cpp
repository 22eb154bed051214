#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "padk1/zp_linalg.hpp"

using namespace padk1;

namespace {

// brute force: enumerate the full row span of small generator sets
std::set<std::vector<i64>> brute_span(i64 pe, const std::vector<std::vector<i64>>& gens, i64 n) {
    std::set<std::vector<i64>> span{std::vector<i64>(n, 0)};
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<std::vector<i64>> next = span;
        for (const auto& v : span)
            for (const auto& g : gens) {
                std::vector<i64> w(n);
                for (i64 i = 0; i < n; ++i) w[i] = (v[i] + g[i]) % pe;
                if (next.insert(w).second) grew = true;
            }
        span = next;
    }
    return span;
}

std::vector<std::vector<i64>> random_rows(Rng& rng, i64 count, i64 n, i64 pe) {
    std::vector<std::vector<i64>> rows(count, std::vector<i64>(n));
    for (auto& r : rows)
        for (auto& x : r) x = rng.below(pe);
    return rows;
}

}  // namespace

TEST_CASE("ZpeSpace membership matches brute-force span") {
    Rng rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        i64 p = trial % 2 ? 2 : 3, e = 2 + trial % 2, n = 3;
        i64 pe = ipow(p, e);
        auto gens = random_rows(rng, 2, n, pe);
        ZpeSpace sp(p, e, n);
        for (auto g : gens) sp.insert(g);
        auto span = brute_span(pe, gens, n);
        // every span element reduces to zero; random non-members do not
        for (const auto& v : span) CHECK(sp.contains(v));
        int outside = 0, checked = 0;
        for (int t = 0; t < 30; ++t) {
            std::vector<i64> v(n);
            for (auto& x : v) x = rng.below(pe);
            ++checked;
            bool in_span = span.count(v) > 0;
            CHECK(sp.contains(v) == in_span);
            if (!in_span) ++outside;
        }
        (void)checked;
        (void)outside;
    }
}

TEST_CASE("right kernel matches brute force on small systems") {
    Rng rng(123);
    for (int trial = 0; trial < 25; ++trial) {
        i64 p = trial % 2 ? 2 : 3, e = 2, n = 3;
        i64 pe = ipow(p, e);
        auto eqs = random_rows(rng, 2, n, pe);
        auto gens = zpe_right_kernel(p, e, eqs, n);
        // verify generators solve the system
        for (const auto& x : gens)
            for (const auto& a : eqs) {
                i64 s = 0;
                for (i64 i = 0; i < n; ++i) s = (s + a[i] * x[i]) % pe;
                CHECK(s == 0);
            }
        // brute force kernel and compare sizes via span
        std::set<std::vector<i64>> truth;
        std::vector<i64> x(n, 0);
        for (i64 code = 0; code < ipow(pe, n); ++code) {
            i64 c = code;
            for (i64 i = 0; i < n; ++i) { x[i] = c % pe; c /= pe; }
            bool ok = true;
            for (const auto& a : eqs) {
                i64 s = 0;
                for (i64 i = 0; i < n; ++i) s = (s + a[i] * x[i]) % pe;
                ok = ok && s == 0;
            }
            if (ok) truth.insert(x);
        }
        auto span = brute_span(pe, gens, n);
        CHECK(span == truth);
    }
}

TEST_CASE("module invariants: known quotients") {
    // (Z/8)^2 / <(2,0)> = Z/2 + Z/8
    auto inv = zpe_module_invariants(2, 3, {{2, 0}}, 2);
    CHECK(inv == std::vector<i64>({2, 8}));
    // (Z/9)^2 / <(3,3),(0,3)> = Z/3 + Z/3
    inv = zpe_module_invariants(3, 2, {{3, 3}, {0, 3}}, 2);
    CHECK(inv == std::vector<i64>({3, 3}));
    // full quotient by identity rows: trivial
    inv = zpe_module_invariants(3, 2, {{1, 0}, {0, 1}}, 2);
    CHECK(inv.empty());
    // no relations: free of rank 2
    inv = zpe_module_invariants(5, 2, {}, 2);
    CHECK(inv == std::vector<i64>({25, 25}));
}

TEST_CASE("module invariants against brute-force order") {
    Rng rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        i64 p = 2, e = 2, k = 3;
        i64 pe = ipow(p, e);
        auto rel = random_rows(rng, 2, k, pe);
        auto inv = zpe_module_invariants(p, e, rel, k);
        i64 order = 1;
        for (i64 d : inv) order *= d;
        // |quotient| = pe^k / |span|
        auto span = brute_span(pe, rel, k);
        CHECK(order * static_cast<i64>(span.size()) == ipow(pe, k));
    }
}

TEST_CASE("quotient invariants of nested spans") {
    // W = <(1,0),(0,2)>, U = <(0,4)> inside (Z/8)^2: W/U = Z/8 + Z/2
    auto inv = zpe_quotient_invariants(2, 3, {{1, 0}, {0, 2}}, {{0, 4}}, 2);
    CHECK(inv == std::vector<i64>({2, 8}));
    // U = W: trivial quotient
    inv = zpe_quotient_invariants(3, 2, {{1, 2}}, {{1, 2}}, 2);
    CHECK(inv.empty());
}
