#include "padk1/finite_field.hpp"

#include <algorithm>
#include <cassert>

namespace padk1 {

namespace {

// --- dense F_p[x] helpers (coeff[i] on x^i, entries in [0,p)) ---

void poly_trim(std::vector<i64>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<i64> poly_mul(i64 p, const std::vector<i64>& f, const std::vector<i64>& g) {
    if (f.empty() || g.empty()) return {};
    std::vector<i64> r(f.size() + g.size() - 1, 0);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + f[i] * g[j]) % p;
    }
    poly_trim(r);
    return r;
}

// f mod g, g monic
std::vector<i64> poly_mod(i64 p, std::vector<i64> f, const std::vector<i64>& g) {
    const size_t dg = g.size() - 1;
    while (f.size() > dg) {
        i64 lead = f.back();
        size_t shift = f.size() - 1 - dg;
        if (lead != 0)
            for (size_t i = 0; i <= dg; ++i)
                f[shift + i] = mod_floor(f[shift + i] - lead * g[i], p);
        f.pop_back();
        poly_trim(f);
        if (f.size() <= dg) break;
    }
    poly_trim(f);
    return f;
}

std::vector<i64> poly_gcd(i64 p, std::vector<i64> a, std::vector<i64> b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        // make b monic before reduction
        i64 inv = invmod(b.back(), p);
        for (auto& c : b) c = c * inv % p;
        a = poly_mod(p, a, b);
        std::swap(a, b);
    }
    return a;
}

std::vector<i64> poly_powmod_xq(i64 p, i64 k, const std::vector<i64>& f) {
    // x^(p^k) mod f by k successive p-th powers
    std::vector<i64> g = poly_mod(p, {0, 1}, f);
    for (i64 step = 0; step < k; ++step) {
        // g^p via square-and-multiply on exponent p
        std::vector<i64> acc{1}, base = g;
        i64 e = p;
        while (e > 0) {
            if (e & 1) acc = poly_mod(p, poly_mul(p, acc, base), f);
            base = poly_mod(p, poly_mul(p, base, base), f);
            e >>= 1;
        }
        g = acc;
    }
    return g;
}

}  // namespace

bool poly_is_irreducible(i64 p, const std::vector<i64>& f) {
    const i64 n = static_cast<i64>(f.size()) - 1;
    if (n < 1 || f[n] != 1) return false;
    if (n == 1) return true;
    if (f[0] == 0) return false;  // divisible by x
    // no irreducible factor of degree k for any k <= n/2
    for (i64 k = 1; k <= n / 2; ++k) {
        std::vector<i64> xq = poly_powmod_xq(p, k, f);
        // xq - x
        std::vector<i64> d = xq;
        if (d.size() < 2) d.resize(2, 0);
        d[1] = mod_floor(d[1] - 1, p);
        poly_trim(d);
        std::vector<i64> g = poly_gcd(p, f, d);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<i64> smallest_irreducible(i64 p, i64 n) {
    if (n == 1) return {0, 1};  // x itself: F_p = F_p[x]/(x)
    std::vector<i64> f(n + 1, 0);
    f[n] = 1;
    // lexicographic scan over (c_0, ..., c_{n-1}), c_0 most significant
    const i64 count = ipow(p, n);
    for (i64 code = 0; code < count; ++code) {
        i64 c = code;
        for (i64 i = n - 1; i >= 0; --i) {
            f[i] = c % p;
            c /= p;
        }
        if (poly_is_irreducible(p, f)) return f;
    }
    throw Error("smallest_irreducible: none found (unreachable)");
}

// ---------------------------------------------------------------------------
// Field / FieldTower
// ---------------------------------------------------------------------------

i64 Field::p() const { return tower->p(); }
i64 Field::degree() const { return tower->degree(level); }
i64 Field::size_if_small(i64 cap) const {
    i64 s = 1;
    for (i64 i = 0; i < degree(); ++i) {
        s *= p();
        if (s > cap) return -1;
    }
    return s;
}

FieldTower::FieldTower(i64 p, std::vector<i64> modulus) : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p_)) throw CompositeP("field characteristic must be prime");
    n0_ = static_cast<i64>(modulus_.size()) - 1;
    if (n0_ < 1 || modulus_[n0_] != 1) throw Error("modulus must be monic of degree >= 1");
    for (auto& c : modulus_) c = mod_floor(c, p_);
    if (n0_ > 1 && !poly_is_irreducible(p_, modulus_))
        throw Error("modulus is not irreducible over F_p");
    build_flat_tables();
}

void FieldTower::build_flat_tables() {
    const i64 n = n0_;
    // basis Frobenius images and traces
    std::vector<std::vector<i64>> frob_basis(n);
    for (i64 i = 0; i < n; ++i) {
        std::vector<i64> b(i + 1, 0);
        b[i] = 1;
        // b^p mod modulus
        std::vector<i64> acc{1}, base = b;
        i64 e = p_;
        while (e > 0) {
            if (e & 1) acc = poly_mod(p_, poly_mul(p_, acc, base), modulus_);
            base = poly_mod(p_, poly_mul(p_, base, base), modulus_);
            e >>= 1;
        }
        acc.resize(n, 0);
        frob_basis[i] = acc;
    }
    tr_basis_.assign(n, 0);
    for (i64 i = 0; i < n; ++i) {
        std::vector<i64> it(n, 0);
        it[i] = 1;
        std::vector<i64> sum(n, 0);
        for (i64 k = 0; k < n; ++k) {
            for (i64 j = 0; j < n; ++j) sum[j] = (sum[j] + it[j]) % p_;
            // it <- it^p
            std::vector<i64> next(n, 0);
            for (i64 j = 0; j < n; ++j)
                if (it[j])
                    for (i64 t = 0; t < n; ++t)
                        next[t] = (next[t] + it[j] * frob_basis[j][t]) % p_;
            it = next;
        }
        for (i64 j = 1; j < n; ++j) assert(sum[j] == 0);
        tr_basis_[i] = sum[0];
    }
    one_minus_frob_.assign(n, std::vector<i64>(n, 0));
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j)
            one_minus_frob_[i][j] = mod_floor((j == i ? 1 : 0) - frob_basis[i][j], p_);
}

FElt FieldTower::level_constant(int j) {
    std::lock_guard<std::mutex> lk(mtx_);
    return FElt{Field{shared_from_this(), j - 1}, levels_.at(j - 1).c};
}

int FieldTower::extend(const FElt& c) {
    std::lock_guard<std::mutex> lk(mtx_);
    if (c.F.level < top_level()) {
        // a racing extension happened; reuse it
        return c.F.level + 1;
    }
    if (v_trace(c.F.level, c.a.data()) == 0)
        throw Error("tower extension needs a constant with nonzero trace");
    Level L;
    L.c = c.a;
    build_level_tables(L, top_level() + 1);
    levels_.push_back(std::move(L));
    return top_level();
}

void FieldTower::build_level_tables(Level& L, int j) {
    const i64 sub = degree(j - 1);
    const i64 dim = sub * p_;
    L.c_pow.assign(p_, std::vector<i64>(sub, 0));
    L.c_pow[0][0] = 1;
    for (i64 m = 1; m < p_; ++m) v_mul(j - 1, L.c_pow[m - 1].data(), L.c.data(), L.c_pow[m].data());
    L.tau.assign(p_, 0);
    for (i64 m = 0; m < p_; ++m) L.tau[m] = v_trace(j - 1, L.c_pow[m].data());
    // (T+c)^i, i < p, as level-j elements
    L.tc_pow.assign(p_, std::vector<i64>(dim, 0));
    L.tc_pow[0][0] = 1;
    std::vector<i64> tpc(dim, 0);  // T + c
    std::copy(L.c.begin(), L.c.end(), tpc.begin());
    tpc[sub] = 1;
    for (i64 i = 1; i < p_; ++i) {
        // multiply tc_pow[i-1] by (T+c); degree stays < p, no reduction needed
        const i64* a = L.tc_pow[i - 1].data();
        i64* out = L.tc_pow[i].data();
        std::vector<i64> tmp(sub);
        for (i64 bi = 0; bi < p_; ++bi) {
            const i64* blk = a + bi * sub;
            bool z = true;
            for (i64 t = 0; t < sub; ++t) z = z && blk[t] == 0;
            if (z) continue;
            // * c into block bi
            v_mul(j - 1, blk, L.c.data(), tmp.data());
            for (i64 t = 0; t < sub; ++t) out[bi * sub + t] = (out[bi * sub + t] + tmp[t]) % p_;
            // * T into block bi+1
            for (i64 t = 0; t < sub; ++t)
                out[(bi + 1) * sub + t] = (out[(bi + 1) * sub + t] + blk[t]) % p_;
        }
    }
}

FElt FieldTower::zero(int level) { return FElt{Field{shared_from_this(), level}, std::vector<i64>(degree(level), 0)}; }

FElt FieldTower::one(int level) { return from_int(level, 1); }

FElt FieldTower::from_int(int level, i64 v) {
    FElt r = zero(level);
    r.a[0] = mod_floor(v, p_);
    return r;
}

FElt FieldTower::gen(int level) {
    FElt r = zero(level);
    if (level == 0) {
        if (n0_ == 1)
            r.a[0] = mod_floor(-modulus_[0], p_);  // degree-1 modulus: x = -c0
        else
            r.a[1] = 1;
    } else {
        r.a[degree(level - 1)] = 1;
    }
    return r;
}

void FieldTower::v_add(int level, const i64* x, const i64* y, i64* out) const {
    const i64 d = degree(level);
    for (i64 i = 0; i < d; ++i) out[i] = (x[i] + y[i]) % p_;
}

void FieldTower::v_sub(int level, const i64* x, const i64* y, i64* out) const {
    const i64 d = degree(level);
    for (i64 i = 0; i < d; ++i) out[i] = mod_floor(x[i] - y[i], p_);
}

void FieldTower::v_mul(int level, const i64* x, const i64* y, i64* out) const {
    if (level == 0) {
        const i64 n = n0_;
        if (n == 1) {
            out[0] = x[0] * y[0] % p_;
            return;
        }
        std::vector<i64> conv(2 * n - 1, 0);
        for (i64 i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (i64 j = 0; j < n; ++j) conv[i + j] = (conv[i + j] + x[i] * y[j]) % p_;
        }
        for (i64 d = 2 * n - 2; d >= n; --d) {
            i64 lead = conv[d];
            if (lead) {
                for (i64 i = 0; i < n; ++i)
                    conv[d - n + i] = mod_floor(conv[d - n + i] - lead * modulus_[i], p_);
            }
            conv[d] = 0;
        }
        std::copy(conv.begin(), conv.begin() + n, out);
        return;
    }
    const Level& L = levels_[level - 1];
    const i64 sub = degree(level - 1);
    std::vector<i64> conv((2 * p_ - 1) * sub, 0);
    std::vector<i64> tmp(sub);
    for (i64 i = 0; i < p_; ++i) {
        const i64* xi = x + i * sub;
        bool z = true;
        for (i64 t = 0; t < sub; ++t) z = z && xi[t] == 0;
        if (z) continue;
        for (i64 j = 0; j < p_; ++j) {
            const i64* yj = y + j * sub;
            bool zy = true;
            for (i64 t = 0; t < sub; ++t) zy = zy && yj[t] == 0;
            if (zy) continue;
            v_mul(level - 1, xi, yj, tmp.data());
            i64* dst = conv.data() + (i + j) * sub;
            for (i64 t = 0; t < sub; ++t) dst[t] = (dst[t] + tmp[t]) % p_;
        }
    }
    // reduce T^d = T^(d-p+1) + c*T^(d-p) for d from 2p-2 down to p
    for (i64 d = 2 * p_ - 2; d >= p_; --d) {
        i64* q = conv.data() + d * sub;
        bool z = true;
        for (i64 t = 0; t < sub; ++t) z = z && q[t] == 0;
        if (z) continue;
        i64* lo1 = conv.data() + (d - p_ + 1) * sub;
        for (i64 t = 0; t < sub; ++t) lo1[t] = (lo1[t] + q[t]) % p_;
        v_mul(level - 1, q, L.c.data(), tmp.data());
        i64* lo0 = conv.data() + (d - p_) * sub;
        for (i64 t = 0; t < sub; ++t) lo0[t] = (lo0[t] + tmp[t]) % p_;
        std::fill(q, q + sub, 0);
    }
    std::copy(conv.begin(), conv.begin() + p_ * sub, out);
}

void FieldTower::v_frob(int level, const i64* x, i64* out) const {
    if (level == 0) {
        const i64 n = n0_;
        // (sum a_i x^i)^p = sum a_i (x^p)^i; horner with x^p = frobenius of gen
        // direct: exponentiation is fine at flat sizes
        std::vector<i64> acc{1}, base(x, x + n);
        poly_trim(base);
        std::vector<i64> f = modulus_;
        i64 e = p_;
        while (e > 0) {
            if (e & 1) acc = poly_mod(p_, poly_mul(p_, acc, base), f);
            base = poly_mod(p_, poly_mul(p_, base, base), f);
            e >>= 1;
        }
        acc.resize(n, 0);
        std::copy(acc.begin(), acc.end(), out);
        return;
    }
    const Level& L = levels_[level - 1];
    const i64 sub = degree(level - 1);
    const i64 dim = sub * p_;
    std::vector<i64> res(dim, 0), fa(sub), tmp(dim);
    for (i64 i = 0; i < p_; ++i) {
        const i64* xi = x + i * sub;
        bool z = true;
        for (i64 t = 0; t < sub; ++t) z = z && xi[t] == 0;
        if (z) continue;
        v_frob(level - 1, xi, fa.data());
        // res += fa * (T+c)^i   (fa lives in the subfield: blockwise product)
        const std::vector<i64>& tc = L.tc_pow[i];
        std::vector<i64> prod(sub);
        for (i64 b = 0; b < p_; ++b) {
            const i64* blk = tc.data() + b * sub;
            bool zb = true;
            for (i64 t = 0; t < sub; ++t) zb = zb && blk[t] == 0;
            if (zb) continue;
            v_mul(level - 1, blk, fa.data(), prod.data());
            for (i64 t = 0; t < sub; ++t)
                res[b * sub + t] = (res[b * sub + t] + prod[t]) % p_;
        }
    }
    std::copy(res.begin(), res.end(), out);
}

i64 FieldTower::v_trace(int level, const i64* x) const {
    if (level == 0) {
        i64 t = 0;
        for (i64 i = 0; i < n0_; ++i) t = (t + x[i] * tr_basis_[i]) % p_;
        return t;
    }
    // Tr_{level/level-1}(sum a_i T^i) = -a_{p-1}
    const i64 sub = degree(level - 1);
    std::vector<i64> m(sub);
    for (i64 t = 0; t < sub; ++t) m[t] = mod_floor(-x[(p_ - 1) * sub + t], p_);
    return v_trace(level - 1, m.data());
}

bool FieldTower::v_solve(int level, const i64* d, i64* out) const {
    if (level == 0) {
        // solve (1 - frob) t = d over F_p, matrix columns one_minus_frob_
        const i64 n = n0_;
        std::vector<std::vector<i64>> M(n, std::vector<i64>(n + 1, 0));
        for (i64 r = 0; r < n; ++r) {
            for (i64 c = 0; c < n; ++c) M[r][c] = one_minus_frob_[c][r];
            M[r][n] = d[r];
        }
        std::vector<i64> piv_col;
        i64 row = 0;
        for (i64 col = 0; col < n && row < n; ++col) {
            i64 sel = -1;
            for (i64 r = row; r < n; ++r)
                if (M[r][col] != 0) { sel = r; break; }
            if (sel < 0) continue;
            std::swap(M[sel], M[row]);
            i64 inv = invmod(M[row][col], p_);
            for (i64 c = col; c <= n; ++c) M[row][c] = M[row][c] * inv % p_;
            for (i64 r = 0; r < n; ++r) {
                if (r == row || M[r][col] == 0) continue;
                i64 f = M[r][col];
                for (i64 c = col; c <= n; ++c) M[r][c] = mod_floor(M[r][c] - f * M[row][c], p_);
            }
            piv_col.push_back(col);
            ++row;
        }
        for (i64 r = row; r < n; ++r)
            if (M[r][n] != 0) return false;
        std::fill(out, out + n, 0);
        for (size_t k = 0; k < piv_col.size(); ++k) out[piv_col[k]] = M[k][n];
        return true;
    }
    const Level& L = levels_[level - 1];
    const i64 sub = degree(level - 1);
    std::vector<std::vector<i64>> t(p_, std::vector<i64>(sub, 0));
    std::vector<std::vector<i64>> tp(p_, std::vector<i64>(sub, 0));  // t_i^p
    // binomials mod p
    std::vector<std::vector<i64>> C(p_, std::vector<i64>(p_, 0));
    for (i64 i = 0; i < p_; ++i) {
        C[i][0] = 1;
        for (i64 j = 1; j <= i; ++j)
            C[i][j] = (C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0)) % p_;
    }
    std::vector<i64> w(sub), tmp(sub);
    for (i64 k = p_ - 1; k >= 0; --k) {
        std::copy(d + k * sub, d + (k + 1) * sub, w.begin());
        for (i64 i = k + 1; i < p_; ++i) {
            if (C[i][k] == 0) continue;
            v_mul(level - 1, L.c_pow[i - k].data(), tp[i].data(), tmp.data());
            for (i64 s = 0; s < sub; ++s) w[s] = (w[s] + C[i][k] * tmp[s]) % p_;
        }
        if (k == p_ - 1) {
            if (v_trace(level - 1, w.data()) != 0) return false;  // global obstruction
        } else {
            // adjust t_{k+1} by eps in F_p to make w solvable
            i64 lam = v_trace(level - 1, w.data());
            if (lam != 0) {
                i64 coef = (k + 1) % p_ * L.tau[1] % p_;
                i64 eps = mod_floor(-lam * invmod(coef, p_), p_);
                t[k + 1][0] = (t[k + 1][0] + eps) % p_;
                tp[k + 1][0] = (tp[k + 1][0] + eps) % p_;
                // w gains C(k+1,k) * c * eps = (k+1) c eps
                i64 f = (k + 1) % p_ * eps % p_;
                for (i64 s = 0; s < sub; ++s) w[s] = (w[s] + f * L.c[s]) % p_;
            }
        }
        bool ok = v_solve(level - 1, w.data(), t[k].data());
        if (!ok) throw Error("inner Artin-Schreier solve unexpectedly failed");
        v_frob(level - 1, t[k].data(), tp[k].data());
    }
    for (i64 k = 0; k < p_; ++k) std::copy(t[k].begin(), t[k].end(), out + k * sub);
    return true;
}

std::vector<i64> FieldTower::v_inv(int level, const std::vector<i64>& x) const {
    if (level == 0) {
        // extended euclid in F_p[x] mod modulus
        std::vector<i64> r0 = modulus_, r1(x);
        poly_trim(r1);
        if (r1.empty()) throw DomainError("field inverse of zero");
        std::vector<i64> s0{}, s1{1};
        while (!r1.empty()) {
            // divide r0 by r1
            std::vector<i64> q;
            std::vector<i64> rem = r0;
            i64 linv = invmod(r1.back(), p_);
            while (rem.size() >= r1.size() && !rem.empty()) {
                i64 coef = rem.back() * linv % p_;
                size_t shift = rem.size() - r1.size();
                if (q.size() < shift + 1) q.resize(shift + 1, 0);
                q[shift] = coef;
                for (size_t i = 0; i < r1.size(); ++i)
                    rem[shift + i] = mod_floor(rem[shift + i] - coef * r1[i], p_);
                poly_trim(rem);
            }
            std::vector<i64> s2 = s0;
            std::vector<i64> qs = poly_mul(p_, q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
            for (size_t i = 0; i < qs.size(); ++i) s2[i] = mod_floor(s2[i] - qs[i], p_);
            poly_trim(s2);
            r0 = r1; r1 = rem;
            s0 = s1; s1 = s2;
        }
        if (r0.size() != 1) throw DomainError("field inverse: gcd not constant");
        i64 cinv = invmod(r0[0], p_);
        for (auto& c : s0) c = c * cinv % p_;
        s0.resize(n0_, 0);
        return s0;
    }
    // extended euclid in (sub)[T] mod T^p - T - c
    const Level& L = levels_[level - 1];
    const i64 sub = degree(level - 1);
    using Poly = std::vector<std::vector<i64>>;  // coeffs over subfield
    auto trim = [&](Poly& f) {
        while (!f.empty()) {
            bool z = true;
            for (i64 t = 0; t < sub; ++t) z = z && f.back()[t] == 0;
            if (!z) break;
            f.pop_back();
        }
    };
    auto zero_c = [&]() { return std::vector<i64>(sub, 0); };
    Poly r0(p_ + 1, zero_c());
    r0[0] = L.c;
    for (i64 t = 0; t < sub; ++t) r0[0][t] = mod_floor(-r0[0][t], p_);
    r0[1][0] = mod_floor(-1, p_);
    r0[p_][0] = 1;
    Poly r1(p_, zero_c());
    for (i64 i = 0; i < p_; ++i)
        std::copy(x.begin() + i * sub, x.begin() + (i + 1) * sub, r1[i].begin());
    trim(r1);
    if (r1.empty()) throw DomainError("field inverse of zero");
    Poly s0, s1{std::vector<i64>(sub, 0)};
    s1[0][0] = 1;
    std::vector<i64> tmp(sub);
    while (!r1.empty()) {
        Poly rem = r0, q;
        std::vector<i64> linv = v_inv(level - 1, r1.back());
        while (rem.size() >= r1.size() && !rem.empty()) {
            std::vector<i64> coef(sub);
            v_mul(level - 1, rem.back().data(), linv.data(), coef.data());
            size_t shift = rem.size() - r1.size();
            if (q.size() < shift + 1) q.resize(shift + 1, zero_c());
            q[shift] = coef;
            for (size_t i = 0; i < r1.size(); ++i) {
                v_mul(level - 1, coef.data(), r1[i].data(), tmp.data());
                for (i64 t = 0; t < sub; ++t)
                    rem[shift + i][t] = mod_floor(rem[shift + i][t] - tmp[t], p_);
            }
            trim(rem);
        }
        // s2 = s0 - q*s1
        Poly qs(q.size() + s1.size() - 1, zero_c());
        for (size_t i = 0; i < q.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) {
                v_mul(level - 1, q[i].data(), s1[j].data(), tmp.data());
                for (i64 t = 0; t < sub; ++t) qs[i + j][t] = (qs[i + j][t] + tmp[t]) % p_;
            }
        Poly s2 = s0;
        if (s2.size() < qs.size()) s2.resize(qs.size(), zero_c());
        for (size_t i = 0; i < qs.size(); ++i)
            for (i64 t = 0; t < sub; ++t) s2[i][t] = mod_floor(s2[i][t] - qs[i][t], p_);
        trim(s2);
        r0 = r1; r1 = rem;
        s0 = s1; s1 = s2;
    }
    if (r0.size() != 1) throw DomainError("field inverse: gcd not constant");
    std::vector<i64> cinv = v_inv(level - 1, r0[0]);
    std::vector<i64> out(p_ * sub, 0);
    for (size_t i = 0; i < s0.size() && i < static_cast<size_t>(p_); ++i) {
        v_mul(level - 1, s0[i].data(), cinv.data(), tmp.data());
        std::copy(tmp.begin(), tmp.end(), out.begin() + i * sub);
    }
    return out;
}

#define CHECK_SAME(x, y)                                               \
    if (!(x).F.same((y).F)) throw Error("field element level mismatch")

FElt FieldTower::add(const FElt& x, const FElt& y) {
    CHECK_SAME(x, y);
    FElt r = x;
    v_add(x.F.level, x.a.data(), y.a.data(), r.a.data());
    return r;
}

FElt FieldTower::sub(const FElt& x, const FElt& y) {
    CHECK_SAME(x, y);
    FElt r = x;
    v_sub(x.F.level, x.a.data(), y.a.data(), r.a.data());
    return r;
}

FElt FieldTower::neg(const FElt& x) {
    FElt r = x;
    for (auto& c : r.a) c = mod_floor(-c, p_);
    return r;
}

FElt FieldTower::mul(const FElt& x, const FElt& y) {
    CHECK_SAME(x, y);
    FElt r = zero(x.F.level);
    v_mul(x.F.level, x.a.data(), y.a.data(), r.a.data());
    return r;
}

FElt FieldTower::mul_scalar(const FElt& x, i64 s) {
    FElt r = x;
    s = mod_floor(s, p_);
    for (auto& c : r.a) c = c * s % p_;
    return r;
}

FElt FieldTower::inv(const FElt& x) { return FElt{x.F, v_inv(x.F.level, x.a)}; }

FElt FieldTower::pow(const FElt& x, i64 e) {
    if (e < 0) return pow(inv(x), -e);
    FElt acc = one(x.F.level), base = x;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

FElt FieldTower::frobenius(const FElt& x) {
    FElt r = zero(x.F.level);
    v_frob(x.F.level, x.a.data(), r.a.data());
    return r;
}

FElt FieldTower::frobenius_inv(const FElt& x) {
    FElt r = x;
    for (i64 i = 1; i < degree(x.F.level); ++i) r = frobenius(r);
    return r;
}

i64 FieldTower::trace_to_prime(const FElt& x) { return v_trace(x.F.level, x.a.data()); }

bool FieldTower::is_zero(const FElt& x) const {
    for (i64 c : x.a)
        if (c != 0) return false;
    return true;
}

FElt FieldTower::embed_up(const FElt& x, int target_level) {
    if (target_level < x.F.level) throw NoEmbedding("embed_up goes only up the tower");
    FElt r = zero(target_level);
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    return r;
}

std::optional<FElt> FieldTower::solve_one_minus_frob_field(const FElt& d) {
    FElt out = zero(d.F.level);
    if (!v_solve(d.F.level, d.a.data(), out.a.data())) return std::nullopt;
    return out;
}

// ---------------------------------------------------------------------------
// public helpers
// ---------------------------------------------------------------------------

namespace {
std::mutex g_registry_mtx;
std::map<std::pair<i64, i64>, std::shared_ptr<FieldTower>>& registry() {
    static std::map<std::pair<i64, i64>, std::shared_ptr<FieldTower>> r;
    return r;
}
}  // namespace

Field make_extension(i64 p, i64 n) {
    if (!is_prime(p)) throw CompositeP("make_extension: p must be prime");
    if (n < 1) throw Error("make_extension: n must be >= 1");
    std::lock_guard<std::mutex> lk(g_registry_mtx);
    auto& r = registry();
    auto it = r.find({p, n});
    if (it == r.end()) {
        auto tw = std::make_shared<FieldTower>(p, smallest_irreducible(p, n));
        it = r.emplace(std::make_pair(p, n), tw).first;
    }
    return Field{it->second, 0};
}

Field make_field_with_modulus(i64 p, const std::vector<i64>& modulus) {
    return Field{std::make_shared<FieldTower>(p, modulus), 0};
}

FElt field_frobenius(const FElt& x) { return x.F.tower->frobenius(x); }

std::pair<FElt, Field> solve_artin_schreier(const FElt& a) {
    auto& tw = *a.F.tower;
    if (auto s = tw.solve_one_minus_frob_field(a)) return {*s, a.F};
    if (a.F.level < tw.top_level()) {
        Field up{a.F.tower, a.F.level + 1};
        FElt ae = tw.embed_up(a, up.level);
        auto s = tw.solve_one_minus_frob_field(ae);
        if (!s) throw Error("Artin-Schreier solve failed after embedding");
        return {*s, up};
    }
    int nl = tw.extend(a);
    Field up{a.F.tower, nl};
    // with the new modulus T^p - T - a the element s = -T satisfies s - s^p = a
    FElt s = tw.neg(tw.gen(nl));
    return {s, up};
}

std::optional<FElt> find_root(const std::vector<i64>& poly, const Field& F) {
    i64 size = F.size_if_small();
    if (size < 0) throw BudgetExceeded("find_root: field too large for exhaustive search");
    auto& tw = *F.tower;
    const i64 p = F.p();
    const i64 d = F.degree();
    FElt x = tw.zero(F.level);
    for (i64 code = 0; code < size; ++code) {
        i64 c = code;
        for (i64 i = 0; i < d; ++i) {
            x.a[i] = c % p;
            c /= p;
        }
        // horner
        FElt acc = tw.zero(F.level);
        for (i64 i = static_cast<i64>(poly.size()) - 1; i >= 0; --i) {
            acc = tw.mul(acc, x);
            acc.a[0] = (acc.a[0] + mod_floor(poly[i], p)) % p;
        }
        if (tw.is_zero(acc)) return x;
    }
    return std::nullopt;
}

FieldEmbedding embed_field(const Field& src, const Field& dst) {
    if (src.level != 0) throw NoEmbedding("embed_field: source must be a flat field");
    if (dst.degree() % src.degree() != 0)
        throw NoEmbedding("embed_field: source degree does not divide target degree");
    auto root = find_root(src.tower->base_modulus(), dst);
    if (!root) throw NoEmbedding("embed_field: defining polynomial has no root in target");
    return FieldEmbedding{src, dst, *root};
}

FElt apply_embedding(const FieldEmbedding& e, const FElt& x) {
    if (!x.F.same(e.src)) throw NoEmbedding("apply_embedding: element not in source field");
    auto& tw = *e.dst.tower;
    FElt acc = tw.zero(e.dst.level);
    for (i64 i = static_cast<i64>(x.a.size()) - 1; i >= 0; --i) {
        acc = tw.mul(acc, e.gen_image);
        acc.a[0] = (acc.a[0] + x.a[i]) % e.dst.p();
    }
    return acc;
}

}  // namespace padk1
