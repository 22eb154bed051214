#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace padk1 {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Library error types. Each maps to a named error contract of some operation.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CompositeP : Error { using Error::Error; };
struct ZeroInput : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct NotAGroup : Error { using Error::Error; };
struct NotAPGroup : Error { using Error::Error; };
struct NotCentral : Error { using Error::Error; };
struct NoEmbedding : Error { using Error::Error; };
struct EnumerationBudgetExceeded : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NewtonDivisionFailure : Error { using Error::Error; };
struct UnknownGroup : Error { using Error::Error; };
struct BadPresentation : Error { using Error::Error; };

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline i64 ipow(i64 b, i64 e) {
    i64 r = 1;
    for (; e > 0; --e) r *= b;
    return r;
}

inline i64 mod_floor(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

inline i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

inline i64 powmod(i64 a, i64 e, i64 m) {
    a = mod_floor(a, m);
    i64 r = 1 % m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Inverse mod m of a unit; throws DomainError otherwise.
inline i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = mod_floor(a, m);
    while (a1 != 0) {
        i64 q = g / a1;
        g -= q * a1; std::swap(g, a1);
        x -= q * x1; std::swap(x, x1);
    }
    if (g != 1) throw DomainError("invmod: not a unit mod " + std::to_string(m));
    return mod_floor(x, m);
}

inline i64 val_p(i64 x, i64 p) {
    if (x == 0) return -1;  // convention: infinite
    i64 v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

// splitmix64: the seeded deterministic stream used by all sampling.
struct Rng {
    u64 state;
    explicit Rng(u64 seed) : state(seed) {}
    u64 next() {
        u64 z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    i64 below(i64 n) { return static_cast<i64>(next() % static_cast<u64>(n)); }
};

}  // namespace padk1
