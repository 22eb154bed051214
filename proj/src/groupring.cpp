#include "padk1/groupring.hpp"

#include <algorithm>

namespace padk1 {

namespace {
void check_compat(const GrElt& x, const GrElt& y) {
    if (x.R != y.R || x.G != y.G || x.level != y.level)
        throw Error("group ring element context mismatch");
}
}  // namespace

GrElt gr_zero(const Ring& R, const GroupPtr& G, int level) {
    return GrElt{R, G, level, std::vector<RElt>(G->order(), R->zero(level))};
}

GrElt gr_one(const Ring& R, const GroupPtr& G, int level) {
    GrElt r = gr_zero(R, G, level);
    r.c[0] = R->one(level);
    return r;
}

GrElt gr_group_elt(const Ring& R, const GroupPtr& G, i64 g, int level) {
    GrElt r = gr_zero(R, G, level);
    r.c[g] = R->one(level);
    return r;
}

GrElt gr_scalar(const GroupPtr& G, const RElt& x) {
    GrElt r = gr_zero(x.R, G, x.level);
    r.c[0] = x;
    return r;
}

GrElt gr_add(const GrElt& x, const GrElt& y) {
    check_compat(x, y);
    GrElt r = x;
    for (i64 g = 0; g < x.G->order(); ++g) r.c[g] = x.R->add(x.c[g], y.c[g]);
    return r;
}

GrElt gr_sub(const GrElt& x, const GrElt& y) {
    check_compat(x, y);
    GrElt r = x;
    for (i64 g = 0; g < x.G->order(); ++g) r.c[g] = x.R->sub(x.c[g], y.c[g]);
    return r;
}

GrElt gr_neg(const GrElt& x) {
    GrElt r = x;
    for (auto& v : r.c) v = x.R->neg(v);
    return r;
}

GrElt gr_mul(const GrElt& x, const GrElt& y) {
    check_compat(x, y);
    GrElt r = gr_zero(x.R, x.G, x.level);
    const i64 n = x.G->order();
    i64 prec = std::min(gr_min_prec(x), gr_min_prec(y));
    for (i64 g = 0; g < n; ++g) {
        if (x.R->is_zero(x.c[g])) continue;
        for (i64 h = 0; h < n; ++h) {
            if (x.R->is_zero(y.c[h])) continue;
            i64 gh = x.G->mul(g, h);
            r.c[gh] = x.R->add(r.c[gh], x.R->mul(x.c[g], y.c[h]));
        }
    }
    for (auto& v : r.c) v.prec = prec;
    return r;
}

GrElt gr_mul_relt(const GrElt& x, const RElt& s) {
    GrElt r = x;
    for (auto& v : r.c) v = x.R->mul(v, s);
    return r;
}

GrElt gr_mul_int(const GrElt& x, i64 s) {
    GrElt r = x;
    for (auto& v : r.c) v = x.R->mul_int(v, s);
    return r;
}

GrElt gr_pow(const GrElt& x, i64 e) {
    if (e < 0) return gr_pow(invert(x), -e);
    GrElt acc = gr_one(x.R, x.G, x.level), base = x;
    while (e > 0) {
        if (e & 1) acc = gr_mul(acc, base);
        base = gr_mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool gr_eq(const GrElt& x, const GrElt& y) {
    if (x.G != y.G || x.level != y.level) return false;
    for (i64 g = 0; g < x.G->order(); ++g)
        if (!x.R->eq(x.c[g], y.c[g])) return false;
    return true;
}

bool gr_is_zero(const GrElt& x) {
    for (const auto& v : x.c)
        if (!x.R->is_zero(v)) return false;
    return true;
}

i64 gr_min_prec(const GrElt& x) {
    i64 m = x.R->N();
    for (const auto& v : x.c) m = std::min(m, v.prec);
    return m;
}

GrElt gr_embed_up(const GrElt& x, int level) {
    GrElt r = x;
    r.level = level;
    for (auto& v : r.c) v = x.R->embed_up(v, level);
    return r;
}

GrElt gr_to_ctx(const GrElt& x, const Ring& dst) {
    GrElt r{dst, x.G, x.level, {}};
    for (const auto& v : x.c) r.c.push_back(x.R->to_ctx(v, dst));
    return r;
}

RElt aug(const GrElt& x) {
    RElt s = x.R->zero(x.level);
    for (const auto& v : x.c) s = x.R->add(s, v);
    return s;
}

ClassFn classproj(const GrElt& x) {
    const auto& cd = x.G->classes();
    ClassFn r{x.R, x.G, x.level, std::vector<RElt>(cd.classes.size(), x.R->zero(x.level))};
    for (i64 g = 0; g < x.G->order(); ++g) r.c[cd.class_of[g]] = x.R->add(r.c[cd.class_of[g]], x.c[g]);
    return r;
}

ClassFn cf_zero(const Ring& R, const GroupPtr& G, int level) {
    return ClassFn{R, G, level, std::vector<RElt>(G->classes().classes.size(), R->zero(level))};
}

ClassFn cf_add(const ClassFn& x, const ClassFn& y) {
    ClassFn r = x;
    for (size_t i = 0; i < x.c.size(); ++i) r.c[i] = x.R->add(x.c[i], y.c[i]);
    return r;
}

ClassFn cf_sub(const ClassFn& x, const ClassFn& y) {
    ClassFn r = x;
    for (size_t i = 0; i < x.c.size(); ++i) r.c[i] = x.R->sub(x.c[i], y.c[i]);
    return r;
}

ClassFn cf_mul_int(const ClassFn& x, i64 s) {
    ClassFn r = x;
    for (auto& v : r.c) v = x.R->mul_int(v, s);
    return r;
}

bool cf_eq(const ClassFn& x, const ClassFn& y) {
    if (x.G != y.G || x.level != y.level) return false;
    for (size_t i = 0; i < x.c.size(); ++i)
        if (!x.R->eq(x.c[i], y.c[i])) return false;
    return true;
}

bool cf_eq_mod(const ClassFn& x, const ClassFn& y, i64 digits) {
    const i64 pk = ipow(x.R->p(), std::min(digits, x.R->N()));
    for (size_t i = 0; i < x.c.size(); ++i)
        for (size_t t = 0; t < x.c[i].a.size(); ++t)
            if (mod_floor(x.c[i].a[t] - y.c[i].a[t], pk) != 0) return false;
    return true;
}

ClassFn cf_div_exact_p(const ClassFn& x, i64 k) {
    ClassFn r = x;
    for (auto& v : r.c) v = x.R->div_exact_p(v, k);
    return r;
}

i64 cf_min_prec(const ClassFn& x) {
    i64 m = x.R->N();
    for (const auto& v : x.c) m = std::min(m, v.prec);
    return m;
}

// ---------------------------------------------------------------------------
// units
// ---------------------------------------------------------------------------

namespace {

// solve the residue linear system M t = rhs over the residue field, where M is
// the regular representation of x mod p; returns empty on singularity
std::vector<FElt> residue_regular_solve(const GrElt& x, i64 rhs_index) {
    const i64 n = x.G->order();
    auto tw = x.R->tower();
    const int lvl = x.level;
    // columns indexed by h: x * h has coefficient at g of xbar[g h^-1]
    std::vector<std::vector<FElt>> M(n, std::vector<FElt>(n + 1, tw->zero(lvl)));
    // column h = coefficients of x * h
    for (i64 h = 0; h < n; ++h) {
        for (i64 g = 0; g < n; ++g) {
            i64 target = x.G->mul(g, h);
            M[target][h] = tw->add(M[target][h], x.R->residue(x.c[g]));
        }
    }
    for (i64 g = 0; g < n; ++g) M[g][n] = tw->from_int(lvl, g == rhs_index ? 1 : 0);
    // gaussian elimination over the field
    i64 row = 0;
    std::vector<i64> piv_col(n, -1);
    for (i64 col = 0; col < n && row < n; ++col) {
        i64 sel = -1;
        for (i64 r = row; r < n; ++r)
            if (!tw->is_zero(M[r][col])) { sel = r; break; }
        if (sel < 0) continue;
        std::swap(M[sel], M[row]);
        FElt inv = tw->inv(M[row][col]);
        for (i64 c2 = col; c2 <= n; ++c2) M[row][c2] = tw->mul(M[row][c2], inv);
        for (i64 r = 0; r < n; ++r) {
            if (r == row || tw->is_zero(M[r][col])) continue;
            FElt f = M[r][col];
            for (i64 c2 = col; c2 <= n; ++c2)
                M[r][c2] = tw->sub(M[r][c2], tw->mul(f, M[row][c2]));
        }
        piv_col[row] = col;
        ++row;
    }
    for (i64 r = row; r < n; ++r)
        if (!tw->is_zero(M[r][n])) return {};
    if (row < n) return {};  // singular: not a unit
    std::vector<FElt> t(n, tw->zero(lvl));
    for (i64 r = 0; r < n; ++r) t[piv_col[r]] = M[r][n];
    return t;
}

}  // namespace

bool is_unit(const GrElt& x) { return !residue_regular_solve(x, 0).empty(); }

GrElt invert(const GrElt& x) {
    auto t = residue_regular_solve(x, 0);
    if (t.empty()) throw NotAUnit("group ring element is not a unit");
    GrElt y = gr_zero(x.R, x.G, x.level);
    for (i64 g = 0; g < x.G->order(); ++g) y.c[g] = x.R->from_residue(t[g]);
    for (i64 digits = 1; digits < x.R->N(); digits *= 2) {
        GrElt two = gr_mul_int(gr_one(x.R, x.G, x.level), 2);
        y = gr_mul(y, gr_sub(two, gr_mul(x, y)));
    }
    i64 prec = gr_min_prec(x);
    for (auto& v : y.c) v.prec = prec;
    return y;
}

GrElt sample_unit(const Ring& R, const GroupPtr& G, UnitKind kind, u64 seed, int level) {
    Rng rng(seed);
    const i64 n = G->order();
    const i64 p = R->p();
    GrElt u = gr_one(R, G, level);
    switch (kind) {
        case UnitKind::OnePlusI: {
            if (!G->is_p_group(p)) throw NotAPGroup("1+I sampling needs a p-group");
            for (i64 g = 1; g < n; ++g) {
                i64 r = rng.below(R->pN());
                // r*(g - 1)
                u.c[g] = R->add(u.c[g], R->from_int(r, level));
                u.c[0] = R->sub(u.c[0], R->from_int(r, level));
            }
            break;
        }
        case UnitKind::OnePlusA: {
            if (!G->is_p_group(p)) throw NotAPGroup("1+A sampling needs a p-group");
            const auto& ab = G->abelianization();
            // section: first group element mapping to each quotient element
            std::vector<i64> section(ab.quotient->order(), -1);
            for (i64 g = 0; g < n; ++g)
                if (section[ab.proj[g]] < 0) section[ab.proj[g]] = g;
            for (i64 g = 0; g < n; ++g) {
                i64 s = section[ab.proj[g]];
                if (s == g) continue;
                i64 r = rng.below(R->pN());
                u.c[g] = R->add(u.c[g], R->from_int(r, level));
                u.c[s] = R->sub(u.c[s], R->from_int(r, level));
            }
            break;
        }
        case UnitKind::OnePlusPR: {
            for (i64 g = 0; g < n; ++g) {
                i64 r = rng.below(R->pN() / p);
                u.c[g] = R->add(u.c[g], R->from_int(r * p, level));
            }
            break;
        }
        case UnitKind::TeichTimesGroup: {
            auto tw = R->tower();
            FElt a = tw->zero(level);
            do {
                for (auto& v : a.a) v = rng.below(p);
            } while (tw->is_zero(a));
            RElt w = R->teichmuller(a);
            i64 g = rng.below(n);
            u = gr_mul_relt(gr_group_elt(R, G, g, level), w);
            break;
        }
    }
    if (!is_unit(u)) throw Error("sample_unit produced a non-unit");
    return u;
}

GrElt ab_pushforward(const GrElt& x) {
    const auto& ab = x.G->abelianization();
    GrElt r = gr_zero(x.R, ab.quotient, x.level);
    for (i64 g = 0; g < x.G->order(); ++g)
        r.c[ab.proj[g]] = x.R->add(r.c[ab.proj[g]], x.c[g]);
    return r;
}

bool a_ideal_membership(const GrElt& x) { return gr_is_zero(ab_pushforward(x)); }

GrElt psi_operator(const GrElt& x) {
    GrElt r = gr_zero(x.R, x.G, x.level);
    const i64 p = x.R->p();
    for (i64 g = 0; g < x.G->order(); ++g) {
        if (x.R->is_zero(x.c[g])) continue;
        i64 gp = x.G->pow(g, p);
        r.c[gp] = x.R->add(r.c[gp], x.R->frobenius(x.c[g]));
    }
    return r;
}

ClassFn phi_operator(const ClassFn& x) {
    ClassFn r = cf_zero(x.R, x.G, x.level);
    auto pm = x.G->power_map_on_classes(x.R->p());
    for (size_t c = 0; c < x.c.size(); ++c)
        r.c[pm[c]] = x.R->add(r.c[pm[c]], x.R->frobenius(x.c[c]));
    return r;
}

GrElt coeff_frobenius(const GrElt& x) {
    GrElt r = x;
    for (auto& v : r.c) v = x.R->frobenius(v);
    return r;
}

GrElt i_star(const GrElt& x, const RingEmbedding& e, const GroupPtr& G) {
    if (x.level != 0) throw NoEmbedding("i_star applies to flat coefficients");
    GrElt r = gr_zero(e.dst, G, 0);
    for (i64 g = 0; g < G->order(); ++g) r.c[g] = apply_ring_embedding(e, x.c[g]);
    return r;
}

// ---------------------------------------------------------------------------
// transfer
// ---------------------------------------------------------------------------

TransferData make_transfer_data(const Ring& src, const Ring& dst) {
    TransferData td;
    td.emb = embed_ring(src, dst);
    const i64 nr = src->degree(0), ns = dst->degree(0);
    if (ns % nr != 0) throw NoEmbedding("transfer: degrees incompatible");
    td.n = ns / nr;
    const i64 pN = dst->pN();
    // basis matrix columns: gS^j * e(gR^k), j < n, k < nr
    std::vector<std::vector<i64>> B(ns, std::vector<i64>(ns, 0));
    RElt gS = dst->gen(0);
    RElt gSj = dst->one(0);
    for (i64 j = 0; j < td.n; ++j) {
        RElt gRk = dst->one(0);
        for (i64 k = 0; k < nr; ++k) {
            RElt col = dst->mul(gSj, gRk);
            for (i64 t = 0; t < ns; ++t) B[t][j * nr + k] = col.a[t];
            gRk = dst->mul(gRk, td.emb.gen_image);
        }
        gSj = dst->mul(gSj, gS);
    }
    // invert B mod p^N by gaussian elimination on [B | I] (unit pivots exist)
    std::vector<std::vector<i64>> M(ns, std::vector<i64>(2 * ns, 0));
    for (i64 i = 0; i < ns; ++i) {
        for (i64 j = 0; j < ns; ++j) M[i][j] = B[i][j];
        M[i][ns + i] = 1;
    }
    for (i64 col = 0; col < ns; ++col) {
        i64 sel = -1;
        for (i64 r = col; r < ns; ++r)
            if (M[r][col] % dst->p() != 0) { sel = r; break; }
        if (sel < 0) throw Error("transfer basis matrix is singular");
        std::swap(M[sel], M[col]);
        i64 inv = invmod(M[col][col], pN);
        for (i64 j2 = 0; j2 < 2 * ns; ++j2) M[col][j2] = mulmod(M[col][j2], inv, pN);
        for (i64 r = 0; r < ns; ++r) {
            if (r == col || M[r][col] == 0) continue;
            i64 f = M[r][col];
            for (i64 j2 = 0; j2 < 2 * ns; ++j2)
                M[r][j2] = mod_floor(M[r][j2] - mulmod(f, M[col][j2], pN), pN);
        }
    }
    td.inv_basis.assign(ns, std::vector<i64>(ns, 0));
    for (i64 i = 0; i < ns; ++i)
        for (i64 j = 0; j < ns; ++j) td.inv_basis[i][j] = M[i][ns + j];
    return td;
}

std::vector<RElt> transfer_decompose(const TransferData& td, const RElt& x) {
    const Ring& src = td.emb.src;
    const Ring& dst = td.emb.dst;
    const i64 nr = src->degree(0), ns = dst->degree(0);
    std::vector<i64> coeffs(ns, 0);
    for (i64 i = 0; i < ns; ++i) {
        i64 s = 0;
        for (i64 j = 0; j < ns; ++j)
            s = (s + mulmod(td.inv_basis[i][j], x.a[j], dst->pN())) % dst->pN();
        coeffs[i] = s;
    }
    std::vector<RElt> out;
    for (i64 j = 0; j < td.n; ++j) {
        RElt y = src->zero(0);
        for (i64 k = 0; k < nr; ++k) y.a[k] = coeffs[j * nr + k];
        y.prec = std::min(x.prec, src->N());
        out.push_back(y);
    }
    return out;
}

GroupRingMatrix transfer_matrix(const GrElt& u, const TransferData& td) {
    if (!is_unit(u)) throw NotAUnit("transfer_matrix requires a unit");
    const Ring& src = td.emb.src;
    const Ring& dst = td.emb.dst;
    if (u.R != dst) throw Error("transfer_matrix: element not over the extension ring");
    const i64 n = td.n;
    GroupRingMatrix m;
    m.R = src;
    m.G = u.G;
    m.n = n;
    m.entries.assign(n * n, gr_zero(src, u.G, 0));
    RElt gS = dst->gen(0);
    for (i64 j = 0; j < n; ++j) {
        // u * gS^j expanded over the basis: column j
        GrElt col = gr_mul_relt(u, dst->pow(gS, j));
        for (i64 g = 0; g < u.G->order(); ++g) {
            auto dec = transfer_decompose(td, col.c[g]);
            for (i64 i = 0; i < n; ++i)
                m.entries[i * n + j].c[g] = src->add(m.entries[i * n + j].c[g], dec[i]);
        }
    }
    return m;
}

namespace {
GrElt det_recursive(const GroupRingMatrix& m, std::vector<i64> rows, std::vector<i64> cols) {
    const i64 k = static_cast<i64>(rows.size());
    if (k == 1) return m.entries[rows[0] * m.n + cols[0]];
    GrElt acc = gr_zero(m.R, m.G, 0);
    for (i64 i = 0; i < k; ++i) {
        std::vector<i64> r2, c2(cols.begin() + 1, cols.end());
        for (i64 t = 0; t < k; ++t)
            if (t != i) r2.push_back(rows[t]);
        GrElt sub = det_recursive(m, r2, c2);
        GrElt term = gr_mul(m.entries[rows[i] * m.n + cols[0]], sub);
        acc = (i % 2 == 0) ? gr_add(acc, term) : gr_sub(acc, term);
    }
    return acc;
}
}  // namespace

GrElt matrix_det(const GroupRingMatrix& m) {
    if (!m.G->is_abelian()) throw Error("matrix_det needs a commutative group ring");
    if (m.n > 4) throw BudgetExceeded("matrix_det limited to n <= 4");
    std::vector<i64> idx(m.n);
    for (i64 i = 0; i < m.n; ++i) idx[i] = i;
    return det_recursive(m, idx, idx);
}

}  // namespace padk1
