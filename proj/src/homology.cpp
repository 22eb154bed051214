#include "padk1/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <tuple>

namespace padk1 {

namespace {

using i32 = std::int32_t;

// Dense row echelon over Z/p^e with Howell closure, tuned for the bar-complex
// widths (int32 entries, small modulus).
class Ech32 {
  public:
    Ech32(i64 p, i64 e, i64 cols)
        : p_(static_cast<i32>(p)), pe_(static_cast<i32>(ipow(p, e))), e_(static_cast<i32>(e)),
          mask_(p == 2 ? pe_ - 1 : 0), cols_(cols), rows_(cols), lead_val_(cols, -1) {}

    i64 val(i32 x) const {
        i64 v = 0;
        while (x % p_ == 0) { x /= p_; ++v; }
        return v;
    }

    i32 redmul(i32 a, i32 b) const {  // a*b mod pe, inputs in [0, pe)
        return mask_ ? static_cast<i32>((u64(a) * u64(b)) & u64(mask_))
                     : static_cast<i32>(i64(a) * b % pe_);
    }

    void scale_row(std::vector<i32>& r, i64 from, i32 f) const {
        if (mask_) {
            const u64 m = static_cast<u64>(mask_);
            for (i64 j = from; j < cols_; ++j) r[j] = static_cast<i32>((u64(r[j]) * f) & m);
        } else {
            for (i64 j = from; j < cols_; ++j) r[j] = static_cast<i32>(i64(r[j]) * f % pe_);
        }
    }

    // r -= f * pv, entries kept in [0, pe)
    void elim_row(std::vector<i32>& r, const std::vector<i32>& pv, i64 from, i32 f) const {
        const i32 nf = pe_ - f;
        if (mask_) {
            const u64 m = static_cast<u64>(mask_);
            for (i64 j = from; j < cols_; ++j)
                r[j] = static_cast<i32>((u64(r[j]) + u64(nf) * u64(pv[j])) & m);
        } else {
            for (i64 j = from; j < cols_; ++j)
                r[j] = static_cast<i32>((i64(r[j]) + i64(nf) * pv[j]) % pe_);
        }
    }

    void insert(std::vector<i32> r) {
        i64 c = 0;
        while (true) {
            while (c < cols_ && r[c] == 0) ++c;
            if (c == cols_) return;
            i64 v = val(r[c]);
            if (lead_val_[c] < 0) {
                i32 u = r[c] / static_cast<i32>(ipow(p_, v));
                scale_row(r, c, static_cast<i32>(invmod(u, pe_)));
                rows_[c] = r;
                lead_val_[c] = v;
                if (v > 0) {
                    std::vector<i32> tail(cols_, 0);
                    i32 f = static_cast<i32>(ipow(p_, e_ - v));
                    for (i64 j = c; j < cols_; ++j) tail[j] = redmul(r[j], f);
                    insert(std::move(tail));
                }
                return;
            }
            if (lead_val_[c] <= v) {
                i32 f = r[c] / static_cast<i32>(ipow(p_, lead_val_[c]));
                elim_row(r, rows_[c], c, f);
            } else {
                std::vector<i32> old = std::move(rows_[c]);
                i32 u = r[c] / static_cast<i32>(ipow(p_, v));
                scale_row(r, c, static_cast<i32>(invmod(u, pe_)));
                rows_[c] = r;
                lead_val_[c] = v;
                if (v > 0) {
                    std::vector<i32> tail(cols_, 0);
                    i32 f = static_cast<i32>(ipow(p_, e_ - v));
                    for (i64 j = c; j < cols_; ++j) tail[j] = redmul(rows_[c][j], f);
                    insert(std::move(tail));
                }
                r = std::move(old);
            }
        }
    }

    // elementary-divisor exponents (capped at e) of the row module, by
    // full-pivot diagonalization of the basis rows
    std::vector<i64> exponents() const {
        std::vector<std::vector<i32>> m;
        for (i64 c = 0; c < cols_; ++c)
            if (lead_val_[c] >= 0) m.push_back(rows_[c]);
        const i64 nr = static_cast<i64>(m.size());
        std::vector<i64> out;
        i64 t = 0;
        // compact columns: track active column indices
        std::vector<i64> colmap(cols_);
        for (i64 j = 0; j < cols_; ++j) colmap[j] = j;
        i64 ncols = cols_;
        while (t < nr && t < ncols) {
            i64 bi = -1, bj = -1, bv = e_ + 1;
            for (i64 i = t; i < nr; ++i)
                for (i64 j = t; j < ncols; ++j) {
                    i32 x = m[i][colmap[j]];
                    if (x != 0) {
                        i64 v = val(x);
                        if (v < bv) { bv = v; bi = i; bj = j; }
                    }
                }
            if (bi < 0) break;
            std::swap(m[t], m[bi]);
            std::swap(colmap[t], colmap[bj]);
            i64 ct = colmap[t];
            i32 u = m[t][ct] / static_cast<i32>(ipow(p_, bv));
            i32 ui = static_cast<i32>(invmod(u, pe_));
            for (i64 j = t; j < ncols; ++j) {
                i64 cj = colmap[j];
                m[t][cj] = redmul(m[t][cj], ui);
            }
            i32 pbv = static_cast<i32>(ipow(p_, bv));
            for (i64 i = t + 1; i < nr; ++i) {
                if (m[i][ct] == 0) continue;
                i32 f = pe_ - m[i][ct] / pbv;
                if (mask_) {
                    const u64 mk = static_cast<u64>(mask_);
                    for (i64 j = t; j < ncols; ++j) {
                        i64 cj = colmap[j];
                        m[i][cj] = static_cast<i32>((u64(m[i][cj]) + u64(f) * u64(m[t][cj])) & mk);
                    }
                } else {
                    for (i64 j = t; j < ncols; ++j) {
                        i64 cj = colmap[j];
                        m[i][cj] = static_cast<i32>((i64(m[i][cj]) + i64(f) * m[t][cj]) % pe_);
                    }
                }
            }
            for (i64 j = t + 1; j < ncols; ++j) {
                i64 cj = colmap[j];
                if (m[t][cj] == 0) continue;
                i32 f = pe_ - m[t][cj] / pbv;
                if (mask_) {
                    const u64 mk = static_cast<u64>(mask_);
                    for (i64 i = t; i < nr; ++i)
                        m[i][cj] = static_cast<i32>((u64(m[i][cj]) + u64(f) * u64(m[i][ct])) & mk);
                } else {
                    for (i64 i = t; i < nr; ++i)
                        m[i][cj] = static_cast<i32>((i64(m[i][cj]) + i64(f) * m[i][ct]) % pe_);
                }
            }
            out.push_back(bv);
            ++t;
        }
        return out;
    }

    Ech32 clone() const { return *this; }

  private:
    i32 p_, pe_, e_, mask_;
    i64 cols_;
    std::vector<std::vector<i32>> rows_;
    std::vector<i64> lead_val_;
};

i64 imlog(const std::vector<i64>& exps, i64 j) {
    i64 s = 0;
    for (i64 v : exps) s += std::max<i64>(j - v, 0);
    return s;
}

// invariant prime powers of a module with exponent dividing p^e from its
// level sizes logsize(j) = log_p |A[p^j]|
std::vector<i64> pattern_to_prime_powers(i64 p, i64 e, const std::vector<i64>& logsize) {
    std::vector<i64> pps;
    for (i64 j = 1; j <= e; ++j) {
        i64 cj = logsize[j] - logsize[j - 1];
        i64 cj1 = j + 1 <= e ? logsize[j + 1] - logsize[j] : 0;
        for (i64 t = 0; t < cj - cj1; ++t) pps.push_back(ipow(p, j));
    }
    return pps;
}

}  // namespace

i64 H2Prime::log_h2_size(i64 j) const {
    return j * n2 - imlog(d2_exps, j) - imlog(d3_exps, j);
}

i64 H2Prime::log_h2ab_size(i64 j) const { return imlog(u_exps, j) - imlog(d3_exps, j); }

i64 H2Prime::log_sk1_quot_size(i64 j) const {
    return j * n2 - imlog(d2_exps, j) - imlog(u_exps, j);
}

H2Prime h2_prime_data(const Group& g, i64 p, i64 order_bound) {
    const i64 n = g.order();
    const std::string cache_key = "h2p:" + std::to_string(p);
    if (auto c = g.aux_get(cache_key)) return *std::static_pointer_cast<const H2Prime>(c);
    if (n > order_bound) throw BudgetExceeded("group too large for homology computation");
    i64 e = 0, m = n;
    while (m % p == 0) { m /= p; ++e; }
    if (e == 0) throw Error("h2_prime_data: p does not divide the group order");
    H2Prime out;
    out.p = p;
    out.e = e;
    out.n2 = n * n;
    const i32 pe = static_cast<i32>(ipow(p, e));
    auto pair_idx = [n](i64 x, i64 y) { return x * n + y; };

    // im(d2) in C1:  d2[x|y] = [y] - [xy] + [x]
    {
        Ech32 b1(p, e, n);
        std::vector<i32> row(n);
        for (i64 x = 0; x < n; ++x)
            for (i64 y = 0; y < n; ++y) {
                std::fill(row.begin(), row.end(), 0);
                auto bump = [&](i64 g1, i32 c) { row[g1] = ((row[g1] + c) % pe + pe) % pe; };
                bump(y, 1);
                bump(g.mul(x, y), -1);
                bump(x, 1);
                b1.insert(row);
            }
        out.d2_exps = b1.exponents();
    }

    // im(d3) in C2:  d3[x|y|z] = [y|z] - [xy|z] + [x|yz] - [x|y]
    Ech32 b2(p, e, out.n2);
    {
        std::vector<i32> row(out.n2);
        for (i64 x = 0; x < n; ++x)
            for (i64 y = 0; y < n; ++y) {
                i64 xy = g.mul(x, y);
                for (i64 z = 0; z < n; ++z) {
                    std::fill(row.begin(), row.end(), 0);
                    auto bump = [&](i64 a, i64 b, i32 c) {
                        i64 i = pair_idx(a, b);
                        row[i] = ((row[i] + c) % pe + pe) % pe;
                    };
                    bump(y, z, 1);
                    bump(xy, z, -1);
                    bump(x, g.mul(y, z), 1);
                    bump(x, y, -1);
                    b2.insert(row);
                }
            }
        out.d3_exps = b2.exponents();
    }

    // im(d3) + commuting-pair cycles [x|y] - [y|x]
    {
        Ech32 u = b2.clone();
        std::vector<i32> row(out.n2);
        for (i64 x = 0; x < n; ++x)
            for (i64 y = x; y < n; ++y) {
                if (g.mul(x, y) != g.mul(y, x)) continue;
                std::fill(row.begin(), row.end(), 0);
                row[pair_idx(x, y)] = 1;
                i64 j = pair_idx(y, x);
                row[j] = ((row[j] - 1) % pe + pe) % pe;
                u.insert(row);
            }
        out.u_exps = u.exponents();
    }
    g.aux_set(cache_key, std::make_shared<const H2Prime>(out));
    return out;
}

namespace {

std::vector<i64> primes_of(i64 n) {
    std::vector<i64> ps;
    for (i64 p = 2; p <= n; ++p)
        if (is_prime(p) && n % p == 0) ps.push_back(p);
    return ps;
}

AbelianInvariants h1_p_part(const Group& g, i64 p) {
    std::vector<i64> pps;
    for (i64 q : g.abelianization().invariants.prime_power_list())
        if (q % p == 0) pps.push_back(q);
    return AbelianInvariants::from_prime_powers(pps);
}

}  // namespace

AbelianInvariants schur_multiplier(const Group& g, i64 order_bound) {
    std::vector<i64> pps;
    for (i64 p : primes_of(g.order())) {
        H2Prime d = h2_prime_data(g, p, order_bound);
        std::vector<i64> logsize(d.e + 1, 0);
        for (i64 j = 1; j <= d.e; ++j) logsize[j] = d.log_h2_size(j);
        auto combined = pattern_to_prime_powers(p, d.e, logsize);
        // remove the Tor(H1) part supplied by universal coefficients
        AbelianInvariants with_h1 = AbelianInvariants::from_prime_powers(combined);
        AbelianInvariants h2p = invariants_minus(with_h1, h1_p_part(g, p));
        for (i64 q : h2p.prime_power_list()) pps.push_back(q);
    }
    return AbelianInvariants::from_prime_powers(pps);
}

AbelianInvariants h2_ab_part(const Group& g, i64 order_bound) {
    std::vector<i64> pps;
    for (i64 p : primes_of(g.order())) {
        H2Prime d = h2_prime_data(g, p, order_bound);
        std::vector<i64> logsize(d.e + 1, 0);
        for (i64 j = 1; j <= d.e; ++j) logsize[j] = d.log_h2ab_size(j);
        for (i64 q : pattern_to_prime_powers(p, d.e, logsize)) pps.push_back(q);
    }
    return AbelianInvariants::from_prime_powers(pps);
}

AbelianInvariants sk1_pgroup(const Group& g, i64 p, i64 order_bound) {
    if (!g.is_p_group(p)) throw NotAPGroup("sk1_pgroup requires a p-group");
    if (g.order() == 1) return {};
    H2Prime d = h2_prime_data(g, p, order_bound);
    std::vector<i64> logsize(d.e + 1, 0);
    for (i64 j = 1; j <= d.e; ++j) logsize[j] = d.log_sk1_quot_size(j);
    AbelianInvariants with_h1 =
        AbelianInvariants::from_prime_powers(pattern_to_prime_powers(p, d.e, logsize));
    return invariants_minus(with_h1, h1_p_part(g, p));
}

}  // namespace padk1
