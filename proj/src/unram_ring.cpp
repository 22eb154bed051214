#include "padk1/unram_ring.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace padk1 {

namespace {
using i128 = __int128;

i64 legendre_vp_factorial(i64 k, i64 p) {
    i64 v = 0;
    for (i64 q = p; q <= k; q *= p) v += k / q;
    return v;
}
}  // namespace

RingCtx::RingCtx(std::shared_ptr<FieldTower> tower, i64 N) : tower_(std::move(tower)), N_(N) {
    if (N_ < 1) throw Error("ring precision must be >= 1");
    p_ = tower_->p();
    pN_ = ipow(p_, N_);
    lifted_modulus_ = tower_->base_modulus();  // canonical lift: digits in [0, p)
}

std::vector<i64> RingCtx::lifted_modulus() const { return lifted_modulus_; }

Ring RingCtx::at_precision(i64 N2) const {
    if (N2 == N_) return std::const_pointer_cast<RingCtx>(shared_from_this());
    return std::make_shared<RingCtx>(tower_, N2);
}

RElt RingCtx::zero(int level) {
    return RElt{shared_from_this(), level, std::vector<i64>(degree(level), 0), N_};
}

RElt RingCtx::one(int level) { return from_int(1, level); }

RElt RingCtx::from_int(i64 v, int level) {
    RElt r = zero(level);
    r.a[0] = mod_floor(v, pN_);
    return r;
}

RElt RingCtx::from_residue(const FElt& x) {
    if (x.F.tower != tower_) throw Error("from_residue: foreign tower");
    RElt r = zero(x.F.level);
    for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i];
    return r;
}

RElt RingCtx::gen(int level) {
    RElt r = zero(level);
    if (level == 0) {
        if (degree(0) == 1)
            r.a[0] = mod_floor(-lifted_modulus_[0], pN_);
        else
            r.a[1] = 1;
    } else {
        r.a[degree(level - 1)] = 1;
    }
    return r;
}

FElt RingCtx::residue(const RElt& x) const {
    FElt f{Field{tower_, x.level}, std::vector<i64>(x.a.size())};
    for (size_t i = 0; i < x.a.size(); ++i) f.a[i] = x.a[i] % p_;
    return f;
}

RElt RingCtx::add(const RElt& x, const RElt& y) {
    RElt r = x;
    r.prec = std::min(x.prec, y.prec);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = (r.a[i] + y.a[i]) % pN_;
    return r;
}

RElt RingCtx::sub(const RElt& x, const RElt& y) {
    RElt r = x;
    r.prec = std::min(x.prec, y.prec);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = mod_floor(r.a[i] - y.a[i], pN_);
    return r;
}

RElt RingCtx::neg(const RElt& x) {
    RElt r = x;
    for (auto& c : r.a) c = mod_floor(-c, pN_);
    return r;
}

void RingCtx::v_mul(int level, const i64* x, const i64* y, i64* out) {
    const i64 pN = pN_;
    if (level == 0) {
        const i64 n = degree(0);
        if (n == 1) {
            out[0] = static_cast<i64>(static_cast<i128>(x[0]) * y[0] % pN);
            return;
        }
        std::vector<i64> conv(2 * n - 1, 0);
        for (i64 i = 0; i < n; ++i) {
            if (x[i] == 0) continue;
            for (i64 j = 0; j < n; ++j)
                conv[i + j] = static_cast<i64>((static_cast<i128>(x[i]) * y[j] + conv[i + j]) % pN);
        }
        for (i64 d = 2 * n - 2; d >= n; --d) {
            i64 lead = conv[d];
            if (lead) {
                for (i64 i = 0; i < n; ++i) {
                    i128 v = static_cast<i128>(conv[d - n + i]) - static_cast<i128>(lead) * lifted_modulus_[i];
                    conv[d - n + i] = mod_floor(static_cast<i64>(v % pN), pN);
                }
            }
            conv[d] = 0;
        }
        std::copy(conv.begin(), conv.begin() + n, out);
        return;
    }
    const i64 sub = degree(level - 1);
    const std::vector<i64>& csub = c_lift_at(level);
    std::vector<i64> conv((2 * p_ - 1) * sub, 0), tmp(sub);
    for (i64 i = 0; i < p_; ++i) {
        const i64* xi = x + i * sub;
        bool z = std::all_of(xi, xi + sub, [](i64 v) { return v == 0; });
        if (z) continue;
        for (i64 j = 0; j < p_; ++j) {
            const i64* yj = y + j * sub;
            bool zy = std::all_of(yj, yj + sub, [](i64 v) { return v == 0; });
            if (zy) continue;
            v_mul(level - 1, xi, yj, tmp.data());
            i64* dst = conv.data() + (i + j) * sub;
            for (i64 t = 0; t < sub; ++t) dst[t] = (dst[t] + tmp[t]) % pN;
        }
    }
    for (i64 d = 2 * p_ - 2; d >= p_; --d) {
        i64* q = conv.data() + d * sub;
        bool z = std::all_of(q, q + sub, [](i64 v) { return v == 0; });
        if (z) continue;
        i64* lo1 = conv.data() + (d - p_ + 1) * sub;
        for (i64 t = 0; t < sub; ++t) lo1[t] = (lo1[t] + q[t]) % pN;
        v_mul(level - 1, q, csub.data(), tmp.data());
        i64* lo0 = conv.data() + (d - p_) * sub;
        for (i64 t = 0; t < sub; ++t) lo0[t] = (lo0[t] + tmp[t]) % pN;
        std::fill(q, q + sub, 0);
    }
    std::copy(conv.begin(), conv.begin() + p_ * sub, out);
}

RElt RingCtx::mul(const RElt& x, const RElt& y) {
    if (x.level != y.level) throw Error("ring element level mismatch");
    RElt r = zero(x.level);
    r.prec = std::min(x.prec, y.prec);
    v_mul(x.level, x.a.data(), y.a.data(), r.a.data());
    return r;
}

RElt RingCtx::mul_int(const RElt& x, i64 s) {
    RElt r = x;
    s = mod_floor(s, pN_);
    for (auto& c : r.a) c = static_cast<i64>(static_cast<i128>(c) * s % pN_);
    return r;
}

RElt RingCtx::pow(const RElt& x, i64 e) {
    if (e < 0) return pow(inv(x), -e);
    RElt acc = one(x.level), base = x;
    acc.prec = x.prec;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool RingCtx::is_zero(const RElt& x) const {
    return std::all_of(x.a.begin(), x.a.end(), [](i64 v) { return v == 0; });
}

bool RingCtx::eq(const RElt& x, const RElt& y) const {
    if (x.level != y.level) return false;
    i64 k = std::min({x.prec, y.prec, N_});
    i64 pk = ipow(p_, k);
    for (size_t i = 0; i < x.a.size(); ++i)
        if (mod_floor(x.a[i] - y.a[i], pk) != 0) return false;
    return true;
}

i64 RingCtx::valuation(const RElt& x) const {
    i64 v = N_;
    for (i64 c : x.a)
        if (c != 0) v = std::min(v, val_p(c, p_));
    return v;
}

RElt RingCtx::embed_up(const RElt& x, int target_level) {
    if (target_level < x.level) throw NoEmbedding("ring embed_up goes only up the tower");
    RElt r = zero(target_level);
    r.prec = x.prec;
    std::copy(x.a.begin(), x.a.end(), r.a.begin());
    return r;
}

RElt RingCtx::to_ctx(const RElt& x, const Ring& dst) const {
    if (dst->tower_ != tower_) throw Error("to_ctx: foreign tower");
    RElt r{dst, x.level, x.a, std::min(x.prec, dst->N_)};
    for (auto& c : r.a) c = mod_floor(c, dst->pN_);
    return r;
}

bool RingCtx::is_unit(const RElt& x) const {
    FElt f = residue(x);
    return !tower_->is_zero(f);
}

RElt RingCtx::inv(const RElt& x) {
    if (!is_unit(x)) throw NotAUnit("ring inverse of a non-unit");
    FElt ri = tower_->inv(residue(x));
    RElt y = from_residue(ri);
    for (i64 digits = 1; digits < N_; digits *= 2) {
        RElt t = sub(from_int(2, x.level), mul(x, y));
        y = mul(y, t);
    }
    y.prec = x.prec;
    return y;
}

const std::vector<i64>& RingCtx::c_lift_at(int level) {
    {
        std::lock_guard<std::mutex> lk(mtx_);
        if (static_cast<int>(levels_.size()) <= level) levels_.resize(level + 1);
        if (!levels_[level].c_lift.a.empty()) return levels_[level].c_lift.a;
    }
    FElt c = tower_->level_constant(level);
    RElt cl = from_residue(c);
    std::lock_guard<std::mutex> lk(mtx_);
    if (levels_[level].c_lift.a.empty()) levels_[level].c_lift = cl;
    return levels_[level].c_lift.a;
}

RElt RingCtx::frob_gen_at(int level) {
    {
        std::lock_guard<std::mutex> lk(mtx_);
        if (static_cast<int>(levels_.size()) <= level) levels_.resize(level + 1);
        if (!levels_[level].frob_gen.a.empty()) return levels_[level].frob_gen;
    }
    RElt fg;
    if (level == 0) {
        std::vector<RElt> poly;
        for (i64 c : lifted_modulus_) poly.push_back(from_int(c, 0));
        RElt start = from_residue(tower_->frobenius(tower_->gen(0)));
        fg = hensel_root(0, poly, start);
    } else {
        c_lift_at(level);  // publish before level-`level` multiplication
        RElt cl{shared_from_this(), level - 1, c_lift_at(level), N_};
        RElt phic = frobenius_at(level - 1, cl);
        std::vector<RElt> poly(p_ + 1, zero(level - 1));
        poly[0] = neg(phic);
        poly[1] = from_int(-1, level - 1);
        poly[p_] = one(level - 1);
        RElt start = add(embed_up(cl, level), gen(level));
        fg = hensel_root(level, poly, start);
    }
    std::lock_guard<std::mutex> lk(mtx_);
    if (levels_[level].frob_gen.a.empty()) levels_[level].frob_gen = fg;
    return levels_[level].frob_gen;
}

RElt RingCtx::eval_poly_at(const std::vector<RElt>& poly, const RElt& x) {
    RElt acc = zero(x.level);
    for (i64 i = static_cast<i64>(poly.size()) - 1; i >= 0; --i) {
        acc = mul(acc, x);
        acc = add(acc, embed_up(poly[i], x.level));
    }
    return acc;
}

RElt RingCtx::hensel_root(int level, const std::vector<RElt>& poly, const RElt& start) {
    std::vector<RElt> dpoly;
    for (size_t i = 1; i < poly.size(); ++i) dpoly.push_back(mul_int(poly[i], static_cast<i64>(i)));
    RElt y = embed_up(start, level);
    for (int iter = 0; iter < 64; ++iter) {
        RElt fy = eval_poly_at(poly, y);
        if (is_zero(fy)) return y;
        RElt dfy = eval_poly_at(dpoly, y);
        y = sub(y, mul(fy, inv(dfy)));
    }
    throw Error("hensel_root: no convergence");
}

RElt RingCtx::hensel_root_public(const std::vector<RElt>& poly, const RElt& start) {
    return hensel_root(start.level, poly, start);
}

RElt RingCtx::frobenius_at(int level, const RElt& x) {
    RElt fg = frob_gen_at(level);
    if (level == 0) {
        RElt acc = zero(0);
        for (i64 i = degree(0) - 1; i >= 0; --i) {
            acc = mul(acc, fg);
            acc.a[0] = (acc.a[0] + x.a[i]) % pN_;
        }
        acc.prec = x.prec;
        return acc;
    }
    const i64 sub = degree(level - 1);
    RElt acc = zero(level);
    for (i64 i = p_ - 1; i >= 0; --i) {
        acc = mul(acc, fg);
        RElt blk = zero(level - 1);
        std::copy(x.a.begin() + i * sub, x.a.begin() + (i + 1) * sub, blk.a.begin());
        acc = add(acc, embed_up(frobenius_at(level - 1, blk), level));
    }
    acc.prec = x.prec;
    return acc;
}

RElt RingCtx::frobenius(const RElt& x) { return frobenius_at(x.level, x); }

RElt RingCtx::frobenius_iter(const RElt& x, i64 k) {
    RElt r = x;
    for (i64 i = 0; i < k; ++i) r = frobenius(r);
    return r;
}

RElt RingCtx::div_exact_p(const RElt& x, i64 k) {
    if (k == 0) return x;
    RElt r = x;
    const i64 pk = ipow(p_, k);
    for (auto& c : r.a) {
        if (c % pk != 0) throw PrecisionExhausted("exact division by p^k failed");
        c /= pk;
    }
    r.prec = x.prec - k;
    if (r.prec <= 0) throw PrecisionExhausted("no guaranteed digits left after division");
    return r;
}

RElt RingCtx::teichmuller(const FElt& a) {
    if (tower_->is_zero(a)) throw ZeroInput("teichmuller of zero");
    RElt x = from_residue(a);
    const i64 deg = degree(a.F.level);
    for (i64 iter = 0; iter + 1 < N_; ++iter)
        for (i64 i = 0; i < deg; ++i) x = pow(x, p_);
    return x;
}

RElt RingCtx::solve_one_minus_frobenius(const RElt& r) {
    RElt target = r;
    RElt s = zero(r.level);
    for (i64 k = 0; k < N_; ++k) {
        RElt defect = sub(target, sub(s, frobenius(s)));
        const i64 pk = ipow(p_, k);
        RElt digit = defect;
        for (auto& c : digit.a) {
            if (c % pk != 0) throw Error("solve_one_minus_frobenius: digit alignment lost");
            c /= pk;
        }
        FElt dbar = residue(digit);
        if (tower_->is_zero(dbar)) continue;
        auto [t, F2] = padk1::solve_artin_schreier(dbar);
        if (F2.level > s.level) {
            s = embed_up(s, F2.level);
            target = embed_up(target, F2.level);
        }
        s = add(s, mul_int(embed_up(from_residue(t), s.level), pk));
    }
    s.prec = std::min(r.prec, N_);
    return s;
}

RElt RingCtx::solve_p_minus_frobenius(const RElt& w) {
    RElt y = zero(w.level);
    for (i64 k = 0; k < N_; ++k) {
        RElt defect = sub(w, sub(mul_int(y, p_), frobenius(y)));
        const i64 pk = ipow(p_, k);
        RElt digit = defect;
        for (auto& c : digit.a) {
            if (c % pk != 0) throw Error("solve_p_minus_frobenius: digit alignment lost");
            c /= pk;
        }
        FElt dbar = residue(digit);
        if (tower_->is_zero(dbar)) continue;
        FElt t = tower_->frobenius_inv(tower_->neg(dbar));
        y = add(y, mul_int(from_residue(t), pk));
    }
    y.prec = std::min(w.prec, N_);
    return y;
}

RElt RingCtx::scalar_log(const RElt& x) {
    RElt xm1 = sub(x, one(x.level));
    if (!tower_->is_zero(residue(xm1))) throw DomainError("scalar_log requires x = 1 mod p");
    if (p_ == 2 && valuation(xm1) < 2) throw DomainError("scalar_log at p = 2 requires x = 1 mod 4");
    i64 vmax = 1;
    while (ipow(p_, vmax) <= N_ + vmax + 2) ++vmax;
    const i64 P = N_ + vmax;
    Ring Rp = at_precision(P);
    RElt y = to_ctx(xm1, Rp);
    y.prec = P;
    const i64 D = ipow(p_, vmax);
    RElt acc = Rp->zero(x.level);
    RElt ypow = Rp->one(x.level);
    ypow.prec = P;
    const i64 kstop = P + vmax + 2;
    for (i64 k = 1; k <= kstop; ++k) {
        ypow = Rp->mul(ypow, y);
        if (Rp->is_zero(ypow)) break;
        i64 a = val_p(k, p_);
        i64 scale = mulmod(D / ipow(p_, a) % Rp->pN(), invmod(k / ipow(p_, a), Rp->pN()), Rp->pN());
        if (k % 2 == 0) scale = mod_floor(-scale, Rp->pN());
        acc = Rp->add(acc, Rp->mul_int(ypow, scale));
    }
    acc.prec = P;
    RElt res = Rp->div_exact_p(acc, vmax);
    RElt out = Rp->to_ctx(res, std::const_pointer_cast<RingCtx>(shared_from_this()));
    out.prec = std::min(x.prec, N_);
    return out;
}

RElt RingCtx::scalar_exp(const RElt& x) {
    if (!tower_->is_zero(residue(x))) throw DomainError("scalar_exp requires x = 0 mod p");
    if (p_ == 2 && valuation(x) < 2) throw DomainError("scalar_exp at p = 2 requires x = 0 mod 4");
    i64 kstop = 4;
    while (kstop - legendre_vp_factorial(kstop, p_) < N_ + 2) ++kstop;
    kstop += p_;
    const i64 vfact = legendre_vp_factorial(kstop, p_);
    const i64 P = N_ + vfact;
    Ring Rp = at_precision(P);
    RElt y = to_ctx(x, Rp);
    y.prec = P;
    const i64 D = ipow(p_, vfact);
    RElt acc = Rp->from_int(D, x.level);
    RElt ypow = Rp->one(x.level);
    ypow.prec = P;
    i64 fact_v = 0, fact_unit = 1;
    for (i64 k = 1; k <= kstop; ++k) {
        ypow = Rp->mul(ypow, y);
        i64 a = val_p(k, p_);
        fact_v += a;
        fact_unit = mulmod(fact_unit, k / ipow(p_, a), Rp->pN());
        if (Rp->is_zero(ypow)) break;
        i64 scale = mulmod(D / ipow(p_, fact_v) % Rp->pN(), invmod(fact_unit, Rp->pN()), Rp->pN());
        acc = Rp->add(acc, Rp->mul_int(ypow, scale));
    }
    acc.prec = P;
    RElt res = Rp->div_exact_p(acc, vfact);
    RElt out = Rp->to_ctx(res, std::const_pointer_cast<RingCtx>(shared_from_this()));
    out.prec = std::min(x.prec, N_);
    return out;
}

// ---------------------------------------------------------------------------

namespace {
std::mutex g_ring_mtx;
std::map<std::pair<const FieldTower*, i64>, Ring>& ring_registry() {
    static std::map<std::pair<const FieldTower*, i64>, Ring> r;
    return r;
}
}  // namespace

Ring ring_over(const Field& F, i64 N) {
    std::lock_guard<std::mutex> lk(g_ring_mtx);
    auto& reg = ring_registry();
    auto key = std::make_pair(F.tower.get(), N);
    auto it = reg.find(key);
    if (it == reg.end()) it = reg.emplace(key, std::make_shared<RingCtx>(F.tower, N)).first;
    return it->second;
}

Ring make_unramified_ring(i64 p, i64 n, i64 N) { return ring_over(make_extension(p, n), N); }

RElt ring_frobenius(const RElt& x) { return x.R->frobenius(x); }
RElt teichmuller(const Ring& R, const FElt& a) { return R->teichmuller(a); }
RElt solve_one_minus_frobenius(const RElt& r) { return r.R->solve_one_minus_frobenius(r); }
RElt scalar_log(const RElt& x) { return x.R->scalar_log(x); }
RElt scalar_exp(const RElt& x) { return x.R->scalar_exp(x); }

RingEmbedding embed_ring(const Ring& src, const Ring& dst) {
    if (src->N() != dst->N()) throw NoEmbedding("embed_ring: precision mismatch");
    FieldEmbedding fe = embed_field(Field{src->tower(), 0}, Field{dst->tower(), 0});
    std::vector<RElt> poly;
    for (i64 c : src->lifted_modulus()) poly.push_back(dst->from_int(c, 0));
    RElt start = dst->from_residue(fe.gen_image);
    RElt img = dst->hensel_root_public(poly, start);
    return RingEmbedding{src, dst, img, fe};
}

RElt apply_ring_embedding(const RingEmbedding& e, const RElt& x) {
    if (x.level != 0) throw NoEmbedding("ring embedding applies to flat elements");
    RElt acc = e.dst->zero(0);
    for (i64 i = static_cast<i64>(x.a.size()) - 1; i >= 0; --i) {
        acc = e.dst->mul(acc, e.gen_image);
        acc.a[0] = (acc.a[0] + x.a[i]) % e.dst->pN();
    }
    acc.prec = std::min(x.prec, e.dst->N());
    return acc;
}

// ---------------------------------------------------------------------------
// cyclotomic extension
// ---------------------------------------------------------------------------

std::vector<i64> cyclotomic_polynomial(i64 e) {
    std::vector<i64> num(e + 1, 0);
    num[0] = -1;
    num[e] = 1;
    for (i64 d = 1; d < e; ++d) {
        if (e % d != 0) continue;
        std::vector<i64> phid = cyclotomic_polynomial(d);
        std::vector<i64> q(num.size() - phid.size() + 1, 0);
        std::vector<i64> rem = num;
        for (i64 i = static_cast<i64>(q.size()) - 1; i >= 0; --i) {
            i64 c = rem[i + phid.size() - 1];
            q[i] = c;
            if (c != 0)
                for (size_t j = 0; j < phid.size(); ++j) rem[i + j] -= c * phid[j];
        }
        num = q;
    }
    return num;
}

CycRing::CycRing(Ring base, i64 e) : base_(std::move(base)), e_(e) {
    if (e_ < 1) throw Error("cyclotomic_extend: e >= 1 required");
    phi_ = cyclotomic_polynomial(e_);
}

CycElt CycRing::zero() {
    return CycElt{shared_from_this(), std::vector<RElt>(dim(), base_->zero(0))};
}

CycElt CycRing::one() {
    CycElt r = zero();
    r.c[0] = base_->one(0);
    return r;
}

CycElt CycRing::from_base(const RElt& x) {
    CycElt r = zero();
    r.c[0] = x;
    return r;
}

CycElt CycRing::root() { return root_pow(1); }

CycElt CycRing::root_pow(i64 k) {
    k = mod_floor(k, e_);
    std::vector<i64> xs(k + 1, 0);
    xs[k] = 1;
    while (xs.size() >= phi_.size()) {
        i64 lead = xs.back();
        size_t shift = xs.size() - phi_.size();
        if (lead != 0)
            for (size_t j = 0; j < phi_.size(); ++j) xs[shift + j] -= lead * phi_[j];
        xs.pop_back();
    }
    CycElt r = zero();
    for (size_t i = 0; i < xs.size(); ++i) r.c[i] = base_->from_int(xs[i], 0);
    return r;
}

CycElt CycRing::add(const CycElt& x, const CycElt& y) {
    CycElt r = x;
    for (i64 i = 0; i < dim(); ++i) r.c[i] = base_->add(x.c[i], y.c[i]);
    return r;
}

CycElt CycRing::sub(const CycElt& x, const CycElt& y) {
    CycElt r = x;
    for (i64 i = 0; i < dim(); ++i) r.c[i] = base_->sub(x.c[i], y.c[i]);
    return r;
}

CycElt CycRing::neg(const CycElt& x) {
    CycElt r = x;
    for (i64 i = 0; i < dim(); ++i) r.c[i] = base_->neg(x.c[i]);
    return r;
}

CycElt CycRing::mul(const CycElt& x, const CycElt& y) {
    const i64 d = dim();
    std::vector<RElt> conv(2 * d - 1, base_->zero(0));
    for (i64 i = 0; i < d; ++i) {
        if (base_->is_zero(x.c[i])) continue;
        for (i64 j = 0; j < d; ++j)
            conv[i + j] = base_->add(conv[i + j], base_->mul(x.c[i], y.c[j]));
    }
    for (i64 deg = 2 * d - 2; deg >= d; --deg) {
        RElt lead = conv[deg];
        if (!base_->is_zero(lead)) {
            for (i64 j = 0; j < d; ++j)
                conv[deg - d + j] = base_->sub(conv[deg - d + j], base_->mul_int(lead, phi_[j]));
        }
        conv[deg] = base_->zero(0);
    }
    CycElt r = zero();
    for (i64 i = 0; i < d; ++i) r.c[i] = conv[i];
    return r;
}

CycElt CycRing::mul_int(const CycElt& x, i64 s) {
    CycElt r = x;
    for (i64 i = 0; i < dim(); ++i) r.c[i] = base_->mul_int(x.c[i], s);
    return r;
}

CycElt CycRing::pow(const CycElt& x, i64 k) {
    CycElt acc = one(), b = x;
    while (k > 0) {
        if (k & 1) acc = mul(acc, b);
        b = mul(b, b);
        k >>= 1;
    }
    return acc;
}

CycElt CycRing::frobenius(const CycElt& x) {
    CycElt r = x;
    for (i64 i = 0; i < dim(); ++i) r.c[i] = base_->frobenius(x.c[i]);
    return r;
}

bool CycRing::eq(const CycElt& x, const CycElt& y, i64 digits) const {
    const i64 pk = ipow(base_->p(), std::min(digits, base_->N()));
    for (i64 i = 0; i < dim(); ++i)
        for (size_t t = 0; t < x.c[i].a.size(); ++t)
            if (mod_floor(x.c[i].a[t] - y.c[i].a[t], pk) != 0) return false;
    return true;
}

bool CycRing::is_zero_mod(const CycElt& x, i64 digits) const {
    const i64 pk = ipow(base_->p(), std::min(digits, base_->N()));
    for (i64 i = 0; i < dim(); ++i)
        for (i64 t : x.c[i].a)
            if (mod_floor(t, pk) != 0) return false;
    return true;
}

CycElt CycRing::div_exact_p(const CycElt& x, i64 k) {
    CycElt r = x;
    for (i64 i = 0; i < dim(); ++i) r.c[i] = base_->div_exact_p(x.c[i], k);
    return r;
}

i64 CycRing::min_prec(const CycElt& x) const {
    i64 m = base_->N();
    for (const auto& c : x.c) m = std::min(m, c.prec);
    return m;
}

Cyc cyclotomic_extend(const Ring& ring, i64 e) { return std::make_shared<CycRing>(ring, e); }

}  // namespace padk1
