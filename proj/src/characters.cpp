#include "padk1/characters.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace padk1 {

// ---------------------------------------------------------------------------
// exact cyclotomic integers
// ---------------------------------------------------------------------------

namespace {
i64 euler_phi(i64 e) {
    i64 r = e;
    for (i64 p = 2; p * p <= e; ++p)
        if (e % p == 0) {
            while (e % p == 0) e /= p;
            r -= r / p;
        }
    if (e > 1) r -= r / e;
    return r;
}

std::vector<i64> reduce_poly_mod_phi(std::vector<i64> v, const std::vector<i64>& phi) {
    while (v.size() >= phi.size()) {
        i64 lead = v.back();
        size_t shift = v.size() - phi.size();
        if (lead != 0)
            for (size_t j = 0; j < phi.size(); ++j) v[shift + j] -= lead * phi[j];
        v.pop_back();
    }
    v.resize(phi.size() - 1, 0);
    return v;
}
}  // namespace

CycInt ci_zero(i64 e) { return CycInt{e, std::vector<i64>(euler_phi(e), 0)}; }

CycInt ci_int(i64 e, i64 v) {
    CycInt r = ci_zero(e);
    r.c[0] = v;
    return r;
}

CycInt ci_root_pow(i64 e, i64 k) {
    k = mod_floor(k, e);
    std::vector<i64> v(k + 1, 0);
    v[k] = 1;
    return CycInt{e, reduce_poly_mod_phi(std::move(v), cyclotomic_polynomial(e))};
}

CycInt ci_add(const CycInt& a, const CycInt& b) {
    CycInt r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

CycInt ci_sub(const CycInt& a, const CycInt& b) {
    CycInt r = a;
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

CycInt ci_neg(const CycInt& a) {
    CycInt r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

CycInt ci_mul(const CycInt& a, const CycInt& b) {
    std::vector<i64> conv(2 * a.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) conv[i + j] += a.c[i] * b.c[j];
    }
    return CycInt{a.e, reduce_poly_mod_phi(std::move(conv), cyclotomic_polynomial(a.e))};
}

CycInt ci_mul_int(const CycInt& a, i64 s) {
    CycInt r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

bool ci_eq(const CycInt& a, const CycInt& b) { return a.e == b.e && a.c == b.c; }

bool ci_is_int(const CycInt& a, i64 v) {
    if (a.c[0] != v) return false;
    for (size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return false;
    return true;
}

CycInt ci_lift(const CycInt& a, i64 e) {
    if (a.e == e) return a;
    if (e % a.e != 0) throw Error("ci_lift: conductor does not divide target");
    i64 f = e / a.e;
    std::vector<i64> v((a.c.size() - 1) * f + 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) v[i * f] = a.c[i];
    return CycInt{e, reduce_poly_mod_phi(std::move(v), cyclotomic_polynomial(e))};
}

// ---------------------------------------------------------------------------
// Burnside-Dixon
// ---------------------------------------------------------------------------

namespace {

struct DixonCtx {
    i64 ell;
    i64 z;  // primitive e-th root of unity mod ell
};

i64 find_generator(i64 ell) {
    std::vector<i64> primes;
    i64 m = ell - 1;
    for (i64 p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);
    for (i64 g = 2; g < ell; ++g) {
        bool ok = true;
        for (i64 p : primes) ok = ok && powmod(g, (ell - 1) / p, ell) != 1;
        if (ok) return g;
    }
    throw Error("no generator found");
}

// dense F_ell rows
using FRow = std::vector<i64>;

std::vector<FRow> solve_in_span(const std::vector<FRow>& basis, const std::vector<FRow>& vecs,
                                i64 ell) {
    // expresses each vec as a combination of basis rows; returns coefficient rows
    const i64 s = static_cast<i64>(basis.size());
    const i64 n = static_cast<i64>(basis[0].size());
    // gaussian elimination  [basis^T | vecs^T] column-solve
    std::vector<FRow> M(n, FRow(s + vecs.size(), 0));
    for (i64 i = 0; i < n; ++i) {
        for (i64 j = 0; j < s; ++j) M[i][j] = basis[j][i];
        for (size_t j = 0; j < vecs.size(); ++j) M[i][s + j] = vecs[j][i];
    }
    std::vector<i64> piv(s, -1);
    i64 row = 0;
    for (i64 col = 0; col < s && row < n; ++col) {
        i64 sel = -1;
        for (i64 r = row; r < n; ++r)
            if (M[r][col] != 0) { sel = r; break; }
        if (sel < 0) throw Error("basis rows dependent");
        std::swap(M[sel], M[row]);
        i64 inv = invmod(M[row][col], ell);
        for (i64 j = col; j < s + static_cast<i64>(vecs.size()); ++j)
            M[row][j] = M[row][j] * inv % ell;
        for (i64 r = 0; r < n; ++r) {
            if (r == row || M[r][col] == 0) continue;
            i64 f = M[r][col];
            for (i64 j = col; j < s + static_cast<i64>(vecs.size()); ++j)
                M[r][j] = mod_floor(M[r][j] - f * M[row][j], ell);
        }
        piv[col] = row;
        ++row;
    }
    for (i64 r = row; r < n; ++r)
        for (size_t j = 0; j < vecs.size(); ++j)
            if (M[r][s + j] != 0) throw Error("vector not in span");
    std::vector<FRow> out(vecs.size(), FRow(s, 0));
    for (i64 col = 0; col < s; ++col)
        for (size_t j = 0; j < vecs.size(); ++j) out[j][col] = M[piv[col]][s + j];
    return out;
}

}  // namespace

const CharacterTable& character_table(const GroupPtr& gp, i64 order_bound) {
    if (auto c = gp->aux_get("chartab"))
        return *std::static_pointer_cast<const CharacterTable>(c);
    const Group& g = *gp;
    if (g.order() > order_bound) throw BudgetExceeded("character table: group too large");
    const auto& cd = g.classes();
    const i64 k = static_cast<i64>(cd.reps.size());
    auto tab = std::make_shared<CharacterTable>();
    tab->G = gp;
    // exponent
    i64 e = 1;
    for (i64 x = 0; x < g.order(); ++x) e = std::lcm(e, g.elem_order(x));
    tab->exponent = e;
    tab->inv_class.resize(k);
    for (i64 j = 0; j < k; ++j) tab->inv_class[j] = cd.class_of[g.inv(cd.reps[j])];

    // Dixon prime: smallest l = 1 mod e with l > 2 sqrt(|G|)
    i64 ell = e + 1;
    while (!(is_prime(ell) && ell % e == 1 % e && ell * ell > 4 * g.order())) ++ell;
    tab->dixon_prime = ell;
    const i64 z = powmod(find_generator(ell), (ell - 1) / e, ell);

    // class algebra structure constants: M_i with (M_i)_{jk} = a_{ijk},
    // a_{ijk} = #{(x, y) in C_i x C_j : x y = rep_k}
    std::vector<std::vector<FRow>> M(k, std::vector<FRow>(k, FRow(k, 0)));
    for (i64 i = 0; i < k; ++i)
        for (i64 j = 0; j < k; ++j)
            for (i64 x : cd.classes[i]) {
                // y = x^-1 rep_k ranges over solutions
                for (i64 kk = 0; kk < k; ++kk) {
                    i64 y = g.mul(g.inv(x), cd.reps[kk]);
                    if (cd.class_of[y] == j) M[i][j][kk] += 1;
                }
            }
    // row-eigen problem: u N_i = omega_i u with N_i = M_i^T
    std::vector<std::vector<FRow>> N(k, std::vector<FRow>(k, FRow(k, 0)));
    for (i64 i = 0; i < k; ++i)
        for (i64 j = 0; j < k; ++j)
            for (i64 kk = 0; kk < k; ++kk) N[i][kk][j] = M[i][j][kk] % ell;

    std::vector<std::vector<FRow>> spaces;
    {
        std::vector<FRow> full(k, FRow(k, 0));
        for (i64 i = 0; i < k; ++i) full[i][i] = 1;
        spaces.push_back(full);
    }
    for (i64 i = 1; i < k; ++i) {
        std::vector<std::vector<FRow>> next;
        for (auto& sp : spaces) {
            const i64 s = static_cast<i64>(sp.size());
            if (s == 1) { next.push_back(sp); continue; }
            // action rows: b_j N_i in span coordinates
            std::vector<FRow> img;
            for (auto& b : sp) {
                FRow r(k, 0);
                for (i64 a = 0; a < k; ++a) {
                    if (b[a] == 0) continue;
                    for (i64 c = 0; c < k; ++c) r[c] = (r[c] + b[a] * N[i][a][c]) % ell;
                }
                img.push_back(std::move(r));
            }
            auto A = solve_in_span(sp, img, ell);
            // eigenvalues by scanning F_ell roots of det(A - tI)
            std::set<i64> eig;
            for (i64 t = 0; t < ell; ++t) {
                // det(A - tI) mod ell by gaussian elimination
                std::vector<FRow> B = A;
                for (i64 d = 0; d < s; ++d) B[d][d] = mod_floor(B[d][d] - t, ell);
                i64 det = 1;
                for (i64 col = 0; col < s && det != 0; ++col) {
                    i64 sel = -1;
                    for (i64 r = col; r < s; ++r)
                        if (B[r][col] != 0) { sel = r; break; }
                    if (sel < 0) { det = 0; break; }
                    if (sel != col) { std::swap(B[sel], B[col]); det = ell - det; }
                    det = det * B[col][col] % ell;
                    i64 inv = invmod(B[col][col], ell);
                    for (i64 r = col + 1; r < s; ++r) {
                        if (B[r][col] == 0) continue;
                        i64 f = B[r][col] * inv % ell;
                        for (i64 c = col; c < s; ++c)
                            B[r][c] = mod_floor(B[r][c] - f * B[col][c], ell);
                    }
                }
                if (det == 0) eig.insert(t);
            }
            if (eig.size() <= 1) { next.push_back(sp); continue; }
            for (i64 t : eig) {
                // kernel of (A - tI): rows x with x (A - tI) = 0
                std::vector<FRow> B = A;
                for (i64 d = 0; d < s; ++d) B[d][d] = mod_floor(B[d][d] - t, ell);
                // row-kernel via column echelon of B
                std::vector<FRow> W(s, FRow(2 * s, 0));
                for (i64 r = 0; r < s; ++r) {
                    for (i64 c = 0; c < s; ++c) W[r][c] = B[r][c];
                    W[r][s + r] = 1;
                }
                // eliminate left block
                i64 row = 0;
                for (i64 col = 0; col < s && row < s; ++col) {
                    i64 sel = -1;
                    for (i64 r = row; r < s; ++r)
                        if (W[r][col] != 0) { sel = r; break; }
                    if (sel < 0) continue;
                    std::swap(W[sel], W[row]);
                    i64 inv = invmod(W[row][col], ell);
                    for (i64 c = 0; c < 2 * s; ++c) W[row][c] = W[row][c] * inv % ell;
                    for (i64 r = 0; r < s; ++r) {
                        if (r == row || W[r][col] == 0) continue;
                        i64 f = W[r][col];
                        for (i64 c = 0; c < 2 * s; ++c)
                            W[r][c] = mod_floor(W[r][c] - f * W[row][c], ell);
                    }
                    ++row;
                }
                std::vector<FRow> sub;
                for (i64 r = row; r < s; ++r) {
                    // combination rows with zero left part: coefficients in right part
                    FRow comb(W[r].begin() + s, W[r].end());
                    FRow vec(k, 0);
                    for (i64 a = 0; a < s; ++a) {
                        if (comb[a] == 0) continue;
                        for (i64 c = 0; c < k; ++c) vec[c] = (vec[c] + comb[a] * sp[a][c]) % ell;
                    }
                    sub.push_back(std::move(vec));
                }
                if (!sub.empty()) next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
        bool alldone = std::all_of(spaces.begin(), spaces.end(),
                                   [](const auto& sp) { return sp.size() == 1; });
        if (alldone) break;
    }
    if (static_cast<i64>(spaces.size()) != k)
        throw Error("character table: eigenspace splitting incomplete");

    // recover characters from the central-character eigenvectors
    for (auto& sp : spaces) {
        FRow u = sp[0];
        // normalize so the identity-class coordinate is 1
        i64 idc = cd.class_of[0];
        if (u[idc] == 0) throw Error("eigenvector vanishes at the identity class");
        i64 inv = invmod(u[idc], ell);
        for (auto& x : u) x = x * inv % ell;
        // degree from the orthogonality norm
        i64 norm = 0;
        for (i64 j = 0; j < k; ++j) {
            i64 t = u[j] * u[tab->inv_class[j]] % ell;
            norm = (norm + t * invmod(cd.sizes[j] % ell, ell)) % ell;
        }
        i64 d2 = g.order() % ell * invmod(norm, ell) % ell;
        i64 deg = -1;
        for (i64 d = 1; d * d <= g.order(); ++d)
            if (d * d % ell == d2) { deg = d; break; }
        if (deg < 0) throw Error("degree lift failed");
        // character values mod ell: chi(g_j) = deg * u_j / |C_j|
        FRow chi_mod(k);
        for (i64 j = 0; j < k; ++j)
            chi_mod[j] = deg % ell * u[j] % ell * invmod(cd.sizes[j] % ell, ell) % ell;
        // multiplicities m_{jk} by the inverse DFT over t mod e
        Character ch;
        ch.degree = deg;
        ch.values.assign(k, ci_zero(e));
        for (i64 j = 0; j < k; ++j) {
            std::vector<i64> cheval(e);
            for (i64 t = 0; t < e; ++t) cheval[t] = chi_mod[cd.class_of[g.pow(cd.reps[j], t)]];
            std::vector<i64> m(e, 0);
            i64 einv = invmod(e % ell, ell);
            for (i64 kk = 0; kk < e; ++kk) {
                i64 s = 0;
                for (i64 t = 0; t < e; ++t)
                    s = (s + cheval[t] * powmod(z, mod_floor(-t * kk, e), ell)) % ell;
                s = s * einv % ell;
                if (s > ell / 2) throw Error("multiplicity lift out of range");
                m[kk] = s;
            }
            CycInt val = ci_zero(e);
            for (i64 kk = 0; kk < e; ++kk)
                if (m[kk]) val = ci_add(val, ci_mul_int(ci_root_pow(e, kk), m[kk]));
            ch.values[j] = val;
        }
        tab->chars.push_back(std::move(ch));
    }
    // canonical order: by degree, then values lexicographically; trivial first
    std::sort(tab->chars.begin(), tab->chars.end(), [](const Character& a, const Character& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        for (size_t j = 0; j < a.values.size(); ++j) {
            if (a.values[j].c != b.values[j].c) return a.values[j].c > b.values[j].c;
        }
        return false;
    });

    // exact verification: class count, degrees, orthogonality
    if (static_cast<i64>(tab->chars.size()) != k)
        throw Error("character count does not match class count");
    i64 sumsq = 0;
    for (const auto& ch : tab->chars) sumsq += ch.degree * ch.degree;
    if (sumsq != g.order()) throw Error("sum of squared degrees mismatch");
    for (i64 a = 0; a < k; ++a)
        for (i64 b = 0; b < k; ++b) {
            i64 ip = character_inner(*tab, tab->chars[a].values, tab->chars[b].values);
            if (ip != (a == b ? 1 : 0)) throw Error("orthogonality fails");
        }
    gp->aux_set("chartab", tab);
    return *std::static_pointer_cast<const CharacterTable>(gp->aux_get("chartab"));
}

i64 character_inner(const CharacterTable& t, const std::vector<CycInt>& a,
                    const std::vector<CycInt>& b) {
    const auto& cd = t.G->classes();
    CycInt s = ci_zero(t.exponent);
    for (size_t j = 0; j < a.size(); ++j)
        s = ci_add(s, ci_mul_int(ci_mul(a[j], b[t.inv_class[j]]), cd.sizes[j]));
    // must be |G| * integer
    for (size_t i = 1; i < s.c.size(); ++i)
        if (s.c[i] != 0) throw Error("character inner product not rational");
    if (s.c[0] % t.G->order() != 0) throw Error("character inner product not integral");
    return s.c[0] / t.G->order();
}

std::vector<std::vector<i64>> adams_matrix(const CharacterTable& t, i64 p) {
    const i64 k = static_cast<i64>(t.chars.size());
    auto pm = t.G->power_map_on_classes(p);
    std::vector<std::vector<i64>> m(k, std::vector<i64>(k, 0));
    for (i64 a = 0; a < k; ++a) {
        std::vector<CycInt> psi_chi(k, ci_zero(t.exponent));
        for (i64 j = 0; j < k; ++j) psi_chi[j] = t.chars[a].values[pm[j]];
        for (i64 b = 0; b < k; ++b) m[a][b] = character_inner(t, psi_chi, t.chars[b].values);
    }
    return m;
}

std::vector<std::vector<i64>> adams_adjoint_matrix(const CharacterTable& t, i64 p) {
    auto m = adams_matrix(t, p);
    const i64 k = static_cast<i64>(m.size());
    std::vector<std::vector<i64>> mt(k, std::vector<i64>(k));
    for (i64 a = 0; a < k; ++a)
        for (i64 b = 0; b < k; ++b) mt[a][b] = m[b][a];
    return mt;
}

// ---------------------------------------------------------------------------
// Newton identities for det rho(g)
// ---------------------------------------------------------------------------

namespace {
struct Rat {
    i64 num = 0, den = 1;
};
Rat rat_norm(Rat r) {
    if (r.den < 0) { r.den = -r.den; r.num = -r.num; }
    i64 g = std::gcd(std::abs(r.num), r.den);
    if (g > 1) { r.num /= g; r.den /= g; }
    return r;
}
Rat rat_add(Rat a, Rat b) { return rat_norm({a.num * b.den + b.num * a.den, a.den * b.den}); }
Rat rat_mul(Rat a, Rat b) { return rat_norm({a.num * b.num, a.den * b.den}); }
Rat rat_div_int(Rat a, i64 k) { return rat_norm({a.num, a.den * k}); }

using CycRat = std::vector<Rat>;  // length phi(e)

CycRat cr_from_ci(const CycInt& a) {
    CycRat r(a.c.size());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = {a.c[i], 1};
    return r;
}
CycRat cr_zero(size_t n) { return CycRat(n); }
CycRat cr_add(const CycRat& a, const CycRat& b) {
    CycRat r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] = rat_add(r[i], b[i]);
    return r;
}
CycRat cr_scale(const CycRat& a, Rat s) {
    CycRat r = a;
    for (auto& x : r) x = rat_mul(x, s);
    return r;
}
CycRat cr_mul(const CycRat& a, const CycRat& b, const std::vector<i64>& phi) {
    std::vector<Rat> conv(2 * a.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].num == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) conv[i + j] = rat_add(conv[i + j], rat_mul(a[i], b[j]));
    }
    while (conv.size() >= phi.size()) {
        Rat lead = conv.back();
        size_t shift = conv.size() - phi.size();
        if (lead.num != 0)
            for (size_t j = 0; j < phi.size(); ++j)
                conv[shift + j] = rat_add(conv[shift + j], rat_mul(lead, Rat{-phi[j], 1}));
        conv.pop_back();
    }
    conv.resize(phi.size() - 1, Rat{0, 1});
    return conv;
}
}  // namespace

CycInt det_character(const CharacterTable& t, i64 chi, i64 g) {
    const i64 d = t.chars[chi].degree;
    const i64 e = t.exponent;
    const auto& cd = t.G->classes();
    auto phi = cyclotomic_polynomial(e);
    // power sums p_k = chi(g^k)
    std::vector<CycRat> ps(d + 1, cr_zero(euler_phi(e)));
    for (i64 k = 1; k <= d; ++k)
        ps[k] = cr_from_ci(t.chars[chi].values[cd.class_of[t.G->pow(g, k)]]);
    // e_k = (1/k) sum_{j=1..k} (-1)^(j-1) e_{k-j} p_j
    std::vector<CycRat> es(d + 1, cr_zero(euler_phi(e)));
    es[0] = cr_from_ci(ci_int(e, 1));
    for (i64 k = 1; k <= d; ++k) {
        CycRat acc = cr_zero(euler_phi(e));
        for (i64 j = 1; j <= k; ++j) {
            CycRat term = cr_mul(es[k - j], ps[j], phi);
            if (j % 2 == 0) term = cr_scale(term, Rat{-1, 1});
            acc = cr_add(acc, term);
        }
        for (auto& x : acc) x = rat_div_int(x, k);
        es[k] = acc;
    }
    CycInt out = ci_zero(e);
    for (size_t i = 0; i < es[d].size(); ++i) {
        if (es[d][i].den != 1)
            throw NewtonDivisionFailure("determinant of representation is not integral");
        out.c[i] = es[d][i].num;
    }
    // sanity: a root of unity -- some power e equals 1
    CycInt pw = ci_int(e, 1);
    bool isroot = false;
    for (i64 k = 1; k <= 2 * e; ++k) {
        pw = ci_mul(pw, out);
        if (ci_is_int(pw, 1)) { isroot = true; break; }
    }
    if (!isroot) throw Error("det_character result is not a root of unity");
    return out;
}

// ---------------------------------------------------------------------------
// induced monomial model
// ---------------------------------------------------------------------------

const InducedRep& induced_rep(const CharacterTable& t, i64 chi, i64 order_bound) {
    std::string key = "indrep:" + std::to_string(chi);
    if (auto c = t.G->aux_get(key)) return *std::static_pointer_cast<const InducedRep>(c);
    const Group& g = *t.G;
    const i64 d = t.chars[chi].degree;
    if (d == 1) {
        auto r = std::make_shared<InducedRep>();
        r->subgroup.resize(g.order());
        std::iota(r->subgroup.begin(), r->subgroup.end(), 0);
        const auto& cd = g.classes();
        for (i64 x = 0; x < g.order(); ++x)
            r->lin_values.push_back(t.chars[chi].values[cd.class_of[x]]);
        r->coset_reps = {0};
        t.G->aux_set(key, r);
        return *std::static_pointer_cast<const InducedRep>(t.G->aux_get(key));
    }
    // candidate subgroups of index d generated by at most two elements
    std::set<std::vector<i64>> cands;
    for (i64 a = 0; a < g.order(); ++a)
        for (i64 b = a; b < g.order(); ++b) {
            auto h = g.subgroup_closure({a, b});
            if (static_cast<i64>(h.size()) * d == g.order()) cands.insert(h);
        }
    for (const auto& h : cands) {
        // subgroup as its own group
        std::vector<i64> pos(g.order(), -1);
        for (size_t i = 0; i < h.size(); ++i) pos[h[i]] = static_cast<i64>(i);
        std::vector<std::vector<i64>> tab(h.size(), std::vector<i64>(h.size()));
        for (size_t i = 0; i < h.size(); ++i)
            for (size_t j = 0; j < h.size(); ++j) tab[i][j] = pos[g.mul(h[i], h[j])];
        GroupPtr H;
        try {
            H = group_from_table(tab);
        } catch (const NotAGroup&) {
            continue;
        }
        const CharacterTable& th = character_table(H, order_bound);
        // left coset representatives
        std::vector<i64> reps;
        std::vector<bool> seen(g.order(), false);
        for (i64 x = 0; x < g.order(); ++x) {
            if (seen[x]) continue;
            reps.push_back(x);
            for (i64 hh : h) seen[g.mul(x, hh)] = true;
        }
        for (size_t ci = 0; ci < th.chars.size(); ++ci) {
            if (th.chars[ci].degree != 1) continue;
            // induced character values
            bool match = true;
            const auto& cd = g.classes();
            const auto& cdh = H->classes();
            for (i64 j = 0; j < static_cast<i64>(cd.reps.size()) && match; ++j) {
                CycInt val = ci_zero(t.exponent);
                for (i64 r : reps) {
                    i64 conj = g.mul(g.mul(g.inv(r), cd.reps[j]), r);
                    if (pos[conj] < 0) continue;
                    CycInt lv = ci_lift(th.chars[ci].values[cdh.class_of[pos[conj]]], t.exponent);
                    val = ci_add(val, lv);
                }
                match = ci_eq(val, t.chars[chi].values[j]);
            }
            if (!match) continue;
            auto r = std::make_shared<InducedRep>();
            r->subgroup = h;
            for (size_t i = 0; i < h.size(); ++i)
                r->lin_values.push_back(
                    ci_lift(th.chars[ci].values[cdh.class_of[static_cast<i64>(i)]], t.exponent));
            r->coset_reps = reps;
            t.G->aux_set(key, r);
            return *std::static_pointer_cast<const InducedRep>(t.G->aux_get(key));
        }
    }
    throw Error("no monomial model found for the character");
}

// ---------------------------------------------------------------------------
// evaluation into the p-adic value ring
// ---------------------------------------------------------------------------

CycElt eval_cycint(const Cyc& C, const CycInt& v) {
    if (v.e != C->e()) throw Error("eval_cycint: conductor mismatch");
    CycElt r = C->zero();
    for (size_t i = 0; i < v.c.size(); ++i) r.c[i] = C->base()->from_int(v.c[i], 0);
    return r;
}

CycElt tr_eval(const Cyc& C, const CharacterTable& t, const GrElt& a, i64 chi) {
    return tr_eval_cf(C, t, classproj(a), chi);
}

CycElt tr_eval_cf(const Cyc& C, const CharacterTable& t, const ClassFn& a, i64 chi) {
    CycElt acc = C->zero();
    for (size_t j = 0; j < a.c.size(); ++j) {
        CycElt v = eval_cycint(C, t.chars[chi].values[j]);
        acc = C->add(acc, C->mul(v, C->from_base(a.c[j])));
    }
    return acc;
}

namespace {
CycElt cyc_det(const Cyc& C, std::vector<std::vector<CycElt>>& m) {
    const size_t d = m.size();
    if (d == 1) return m[0][0];
    // Laplace expansion down the first column
    CycElt acc = C->zero();
    for (size_t i = 0; i < d; ++i) {
        std::vector<std::vector<CycElt>> sub;
        for (size_t r = 0; r < d; ++r) {
            if (r == i) continue;
            sub.push_back(std::vector<CycElt>(m[r].begin() + 1, m[r].end()));
        }
        CycElt minor = cyc_det(C, sub);
        CycElt term = C->mul(m[i][0], minor);
        acc = (i % 2 == 0) ? C->add(acc, term) : C->sub(acc, term);
    }
    return acc;
}
}  // namespace

CycElt det_rho(const Cyc& C, const CharacterTable& t, const GrElt& u, i64 chi) {
    const i64 d = t.chars[chi].degree;
    if (d == 1) return tr_eval(C, t, u, chi);
    const InducedRep& ir = induced_rep(t, chi);
    const Group& g = *t.G;
    std::vector<i64> pos(g.order(), -1);
    for (size_t i = 0; i < ir.subgroup.size(); ++i) pos[ir.subgroup[i]] = static_cast<i64>(i);
    std::vector<std::vector<CycElt>> m(d, std::vector<CycElt>(d, C->zero()));
    for (i64 x = 0; x < g.order(); ++x) {
        if (u.R->is_zero(u.c[x])) continue;
        CycElt coef = C->from_base(u.c[x]);
        for (i64 v = 0; v < d; ++v) {
            // x r_v = r_u h for the unique coset u
            i64 xr = g.mul(x, ir.coset_reps[v]);
            for (i64 uu = 0; uu < d; ++uu) {
                i64 h = g.mul(g.inv(ir.coset_reps[uu]), xr);
                if (pos[h] >= 0) {
                    CycElt lv = eval_cycint(C, ir.lin_values[pos[h]]);
                    m[uu][v] = C->add(m[uu][v], C->mul(coef, lv));
                    break;
                }
            }
        }
    }
    return cyc_det(C, m);
}

}  // namespace padk1
