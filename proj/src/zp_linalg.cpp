#include "padk1/zp_linalg.hpp"

#include <algorithm>

namespace padk1 {

ZpeSpace::ZpeSpace(i64 p, i64 e, i64 cols)
    : p_(p), e_(e), pe_(ipow(p, e)), cols_(cols), rows_(cols), lead_val_(cols, -1) {}

void ZpeSpace::insert(std::vector<i64> r) {
    for (auto& x : r) x = mod_floor(x, pe_);
    while (true) {
        i64 c = -1;
        for (i64 j = 0; j < cols_; ++j)
            if (r[j] != 0) { c = j; break; }
        if (c < 0) return;
        i64 v = val_p(r[c], p_);
        if (lead_val_[c] < 0) {
            i64 u = r[c] / ipow(p_, v);
            i64 ui = invmod(u, pe_);
            for (auto& x : r) x = mulmod(x, ui, pe_);
            rows_[c] = r;
            lead_val_[c] = v;
            if (v > 0) {
                std::vector<i64> tail = r;
                i64 f = ipow(p_, e_ - v);
                for (auto& x : tail) x = mulmod(x, f, pe_);
                insert(std::move(tail));  // Howell closure
            }
            return;
        }
        if (lead_val_[c] <= v) {
            i64 f = r[c] / ipow(p_, lead_val_[c]);
            const auto& pv = rows_[c];
            for (i64 j = c; j < cols_; ++j) r[j] = mod_floor(r[j] - mulmod(f, pv[j], pe_), pe_);
        } else {
            // steal the pivot slot; reinsert the old pivot row
            std::vector<i64> old = rows_[c];
            i64 u = r[c] / ipow(p_, v);
            i64 ui = invmod(u, pe_);
            for (auto& x : r) x = mulmod(x, ui, pe_);
            rows_[c] = r;
            lead_val_[c] = v;
            if (v > 0) {
                std::vector<i64> tail = r;
                i64 f = ipow(p_, e_ - v);
                for (auto& x : tail) x = mulmod(x, f, pe_);
                insert(std::move(tail));
            }
            r = std::move(old);
        }
    }
}

std::vector<i64> ZpeSpace::reduce(std::vector<i64> r) const {
    for (auto& x : r) x = mod_floor(x, pe_);
    for (i64 c = 0; c < cols_; ++c) {
        if (r[c] == 0 || lead_val_[c] < 0) continue;
        i64 v = val_p(r[c], p_);
        if (v < lead_val_[c]) continue;  // this pivot cannot clear the entry
        i64 f = r[c] / ipow(p_, lead_val_[c]);
        const auto& pv = rows_[c];
        for (i64 j = c; j < cols_; ++j) r[j] = mod_floor(r[j] - mulmod(f, pv[j], pe_), pe_);
    }
    return r;
}

bool ZpeSpace::contains(std::vector<i64> r) const {
    auto res = reduce(std::move(r));
    return std::all_of(res.begin(), res.end(), [](i64 x) { return x == 0; });
}

std::vector<std::vector<i64>> zpe_right_kernel(i64 p, i64 e,
                                               const std::vector<std::vector<i64>>& equations,
                                               i64 n) {
    ZpeSpace ech(p, e, n);
    for (const auto& eq : equations) ech.insert(eq);
    std::vector<const std::vector<i64>*> basis;
    for (i64 c = 0; c < n; ++c)
        if (!ech.basis()[c].empty()) basis.push_back(&ech.basis()[c]);
    const i64 s = static_cast<i64>(basis.size());
    // rows of (E^T | I): combinations with zero left part give the kernel
    ZpeSpace big(p, e, s + n);
    for (i64 i = 0; i < n; ++i) {
        std::vector<i64> row(s + n, 0);
        for (i64 j = 0; j < s; ++j) row[j] = (*basis[j])[i];
        row[s + i] = 1;
        big.insert(std::move(row));
    }
    std::vector<std::vector<i64>> out;
    for (i64 c = 0; c < s + n; ++c) {
        const auto& r = big.basis()[c];
        if (r.empty()) continue;
        bool leftzero = std::all_of(r.begin(), r.begin() + s, [](i64 x) { return x == 0; });
        if (!leftzero) continue;
        std::vector<i64> x(r.begin() + s, r.end());
        if (std::any_of(x.begin(), x.end(), [](i64 v) { return v != 0; })) out.push_back(std::move(x));
    }
    return out;
}

std::vector<i64> zpe_module_invariants(i64 p, i64 e, std::vector<std::vector<i64>> rel, i64 k) {
    const i64 pe = ipow(p, e);
    for (auto& r : rel) {
        r.resize(k, 0);
        for (auto& x : r) x = mod_floor(x, pe);
    }
    const i64 nr = static_cast<i64>(rel.size());
    std::vector<i64> diag_vals;
    i64 t = 0;
    while (t < nr && t < k) {
        i64 bi = -1, bj = -1, bv = e + 1;
        for (i64 i = t; i < nr; ++i)
            for (i64 j = t; j < k; ++j)
                if (rel[i][j] != 0) {
                    i64 v = val_p(rel[i][j], p);
                    if (v < bv) { bv = v; bi = i; bj = j; }
                }
        if (bi < 0) break;
        std::swap(rel[t], rel[bi]);
        for (i64 i = 0; i < nr; ++i) std::swap(rel[i][t], rel[i][bj]);
        i64 u = rel[t][t] / ipow(p, bv);
        i64 ui = invmod(u, pe);
        for (i64 j = t; j < k; ++j) rel[t][j] = mulmod(rel[t][j], ui, pe);
        for (i64 i = t + 1; i < nr; ++i) {
            if (rel[i][t] == 0) continue;
            i64 f = rel[i][t] / ipow(p, bv);
            for (i64 j = t; j < k; ++j)
                rel[i][j] = mod_floor(rel[i][j] - mulmod(f, rel[t][j], pe), pe);
        }
        for (i64 j = t + 1; j < k; ++j) {
            if (rel[t][j] == 0) continue;
            i64 f = rel[t][j] / ipow(p, bv);
            for (i64 i = t; i < nr; ++i)
                rel[i][j] = mod_floor(rel[i][j] - mulmod(f, rel[i][t], pe), pe);
        }
        diag_vals.push_back(bv);
        ++t;
    }
    std::vector<i64> inv;
    for (i64 j = 0; j < k; ++j) {
        i64 v = j < static_cast<i64>(diag_vals.size()) ? diag_vals[j] : e;
        if (v > 0) inv.push_back(ipow(p, v));
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

std::vector<i64> zpe_quotient_invariants(i64 p, i64 e,
                                         const std::vector<std::vector<i64>>& gens_w,
                                         const std::vector<std::vector<i64>>& gens_u, i64 n) {
    const i64 kw = static_cast<i64>(gens_w.size());
    const i64 ku = static_cast<i64>(gens_u.size());
    if (kw == 0) return {};
    std::vector<std::vector<i64>> eqs;  // columns of [W; U] as equations on (x, y)
    for (i64 j = 0; j < n; ++j) {
        std::vector<i64> eq(kw + ku, 0);
        for (i64 i = 0; i < kw; ++i) eq[i] = gens_w[i][j];
        for (i64 i = 0; i < ku; ++i) eq[kw + i] = gens_u[i][j];
        eqs.push_back(std::move(eq));
    }
    auto ker = zpe_right_kernel(p, e, eqs, kw + ku);
    std::vector<std::vector<i64>> rel;
    for (auto& z : ker) rel.emplace_back(z.begin(), z.begin() + kw);
    return zpe_module_invariants(p, e, rel, kw);
}

}  // namespace padk1
