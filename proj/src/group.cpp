#include "padk1/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace padk1 {

// ---------------------------------------------------------------------------
// AbelianInvariants
// ---------------------------------------------------------------------------

AbelianInvariants AbelianInvariants::from_prime_powers(std::vector<i64> pps) {
    std::map<i64, std::vector<i64>> per_prime;  // p -> powers, descending
    for (i64 q : pps) {
        if (q <= 1) continue;
        i64 p = 2;
        while (q % p != 0) ++p;
        per_prime[p].push_back(q);
    }
    size_t slots = 0;
    for (auto& [p, v] : per_prime) {
        std::sort(v.rbegin(), v.rend());
        slots = std::max(slots, v.size());
    }
    std::vector<i64> chain(slots, 1);
    for (auto& [p, v] : per_prime)
        for (size_t i = 0; i < v.size(); ++i) chain[i] *= v[i];
    std::reverse(chain.begin(), chain.end());  // ascending divisibility
    AbelianInvariants r;
    for (i64 d : chain)
        if (d > 1) r.divisors.push_back(d);
    return r;
}

i64 AbelianInvariants::order() const {
    i64 o = 1;
    for (i64 d : divisors) o *= d;
    return o;
}

std::vector<i64> AbelianInvariants::prime_power_list() const {
    std::vector<i64> out;
    for (i64 d : divisors) {
        i64 m = d;
        for (i64 p = 2; m > 1; ++p) {
            if (m % p != 0) continue;
            i64 q = 1;
            while (m % p == 0) { m /= p; q *= p; }
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AbelianInvariants AbelianInvariants::torsion_part(i64 p, i64 v) const {
    std::vector<i64> pps;
    for (i64 q : prime_power_list()) {
        if (q % p != 0) continue;  // A[p^v] only sees the p-part
        pps.push_back(std::min(q, ipow(p, v)));
    }
    return from_prime_powers(pps);
}

AbelianInvariants AbelianInvariants::quotient_part(i64 p, i64 v) const {
    // Z/q / p^v (Z/q) has order gcd(q, p^v) for q a p-power; other primes die
    return torsion_part(p, v);
}

std::string AbelianInvariants::str() const {
    if (divisors.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < divisors.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << divisors[i];
    }
    return os.str();
}

AbelianInvariants invariants_minus(const AbelianInvariants& sum, const AbelianInvariants& part) {
    std::vector<i64> s = sum.prime_power_list();
    for (i64 q : part.prime_power_list()) {
        auto it = std::find(s.begin(), s.end(), q);
        if (it == s.end()) throw Error("invariants_minus: part is not a direct summand");
        s.erase(it);
    }
    return AbelianInvariants::from_prime_powers(s);
}

// ---------------------------------------------------------------------------
// Group core
// ---------------------------------------------------------------------------

Group::Group(std::vector<std::vector<i64>> table, std::string name)
    : n_(static_cast<i64>(table.size())), name_(std::move(name)), table_(std::move(table)) {
    if (n_ == 0 || n_ > 4096) throw NotAGroup("group order out of supported range");
    for (const auto& row : table_)
        if (static_cast<i64>(row.size()) != n_) throw NotAGroup("table is not square");
    for (i64 i = 0; i < n_; ++i)
        if (table_[0][i] != i || table_[i][0] != i) throw NotAGroup("index 0 is not an identity");
    inverse_.assign(n_, -1);
    for (i64 i = 0; i < n_; ++i) {
        for (i64 j = 0; j < n_; ++j)
            if (table_[i][j] == 0) {
                if (table_[j][i] != 0) throw NotAGroup("one-sided inverse");
                inverse_[i] = j;
                break;
            }
        if (inverse_[i] < 0) throw NotAGroup("element without inverse");
    }
    // rows and columns are permutations
    for (i64 i = 0; i < n_; ++i) {
        std::vector<bool> seen(n_, false);
        for (i64 j = 0; j < n_; ++j) {
            i64 v = table_[i][j];
            if (v < 0 || v >= n_ || seen[v]) throw NotAGroup("row is not a permutation");
            seen[v] = true;
        }
    }
    if (n_ <= 256) {
        for (i64 a = 0; a < n_; ++a)
            for (i64 b = 0; b < n_; ++b)
                for (i64 c = 0; c < n_; ++c)
                    if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                        throw NotAGroup("associativity fails");
    }
}

i64 Group::elem_order(i64 a) const {
    i64 x = a, o = 1;
    while (x != 0) {
        x = mul(x, a);
        ++o;
    }
    return o;
}

i64 Group::pow(i64 a, i64 k) const {
    k = mod_floor(k, elem_order(a));
    i64 r = 0;
    for (i64 i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

bool Group::is_abelian() const {
    for (i64 a = 0; a < n_; ++a)
        for (i64 b = a + 1; b < n_; ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

bool Group::is_p_group(i64 p) const {
    i64 m = n_;
    while (m % p == 0) m /= p;
    return m == 1;
}

const ConjugacyData& Group::classes() const {
    if (classes_) return *classes_;
    ConjugacyData cd;
    cd.class_of.assign(n_, -1);
    for (i64 g = 0; g < n_; ++g) {
        if (cd.class_of[g] >= 0) continue;
        std::vector<i64> cls;
        i64 ci = static_cast<i64>(cd.classes.size());
        for (i64 x = 0; x < n_; ++x) {
            i64 c = conj(g, x);
            if (cd.class_of[c] < 0) {
                cd.class_of[c] = ci;
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        cd.reps.push_back(cls.front());
        cd.sizes.push_back(static_cast<i64>(cls.size()));
        cd.classes.push_back(std::move(cls));
    }
    // sanity: re-closure
    i64 total = std::accumulate(cd.sizes.begin(), cd.sizes.end(), i64{0});
    if (total != n_) throw Error("conjugacy classes do not partition the group");
    classes_ = std::move(cd);
    return *classes_;
}

std::vector<i64> Group::center() const {
    std::vector<i64> z;
    for (i64 g = 0; g < n_; ++g) {
        bool central = true;
        for (i64 x = 0; x < n_ && central; ++x) central = mul(g, x) == mul(x, g);
        if (central) z.push_back(g);
    }
    return z;
}

std::vector<i64> Group::centralizer(i64 g) const {
    std::vector<i64> z;
    for (i64 x = 0; x < n_; ++x)
        if (mul(g, x) == mul(x, g)) z.push_back(x);
    return z;
}

std::vector<i64> Group::subgroup_closure(std::vector<i64> gens) const {
    std::set<i64> h{0};
    for (i64 g : gens) h.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<i64> cur(h.begin(), h.end());
        for (i64 a : cur)
            for (i64 b : cur) {
                if (h.insert(mul(a, b)).second) grew = true;
            }
        for (i64 a : cur)
            if (h.insert(inv(a)).second) grew = true;
    }
    return {h.begin(), h.end()};
}

std::vector<i64> Group::derived_subgroup() const {
    std::vector<i64> comms;
    for (i64 a = 0; a < n_; ++a)
        for (i64 b = 0; b < n_; ++b)
            comms.push_back(mul(mul(a, b), inv(mul(b, a))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(comms);
}

namespace {
// quotient of g by the normal subgroup listed in `nsub`
struct CosetDecomp {
    std::vector<i64> coset_of;   // element -> coset index
    std::vector<i64> reps;       // coset -> representative
};
CosetDecomp coset_decompose(const Group& g, const std::vector<i64>& nsub) {
    CosetDecomp cd;
    cd.coset_of.assign(g.order(), -1);
    for (i64 x = 0; x < g.order(); ++x) {
        if (cd.coset_of[x] >= 0) continue;
        i64 ci = static_cast<i64>(cd.reps.size());
        cd.reps.push_back(x);
        for (i64 h : nsub) cd.coset_of[g.mul(x, h)] = ci;
    }
    return cd;
}
}  // namespace

const Group::Abelianization& Group::abelianization() const {
    if (ab_) return *ab_;
    auto der = derived_subgroup();
    CosetDecomp cd = coset_decompose(*this, der);
    // reindex so that the coset of the identity is 0
    i64 idc = cd.coset_of[0];
    std::vector<i64> remap(cd.reps.size());
    for (size_t i = 0; i < cd.reps.size(); ++i) remap[i] = static_cast<i64>(i);
    std::swap(remap[0], remap[idc]);
    std::vector<i64> inv_remap(remap.size());
    for (size_t i = 0; i < remap.size(); ++i) inv_remap[remap[i]] = static_cast<i64>(i);
    i64 q = static_cast<i64>(cd.reps.size());
    std::vector<std::vector<i64>> qt(q, std::vector<i64>(q));
    for (i64 i = 0; i < q; ++i)
        for (i64 j = 0; j < q; ++j) {
            i64 prod = mul(cd.reps[remap[i]], cd.reps[remap[j]]);
            qt[i][j] = inv_remap[cd.coset_of[prod]];
        }
    auto ab = std::make_shared<Abelianization>();
    ab->quotient = std::make_shared<Group>(qt, name_ + "^ab");
    ab->proj.assign(n_, 0);
    for (i64 x = 0; x < n_; ++x) ab->proj[x] = inv_remap[cd.coset_of[x]];
    // verified surjective homomorphism
    for (i64 a = 0; a < n_; ++a)
        for (i64 b = 0; b < n_; ++b)
            if (ab->proj[mul(a, b)] != ab->quotient->mul(ab->proj[a], ab->proj[b]))
                throw Error("abelianization projection is not a homomorphism");
    std::vector<i64> all(q);
    std::iota(all.begin(), all.end(), 0);
    ab->invariants = ab->quotient->abelian_invariants_of(all);
    ab_ = ab;
    return *ab_;
}

AbelianInvariants Group::abelian_invariants_of(const std::vector<i64>& subgroup) const {
    // order-counting: for each prime p and j, the count of x with x^(p^j) = e
    // determines the partition of cyclic p-factors
    i64 m = static_cast<i64>(subgroup.size());
    std::vector<i64> pps;
    for (i64 p = 2; p <= m; ++p) {
        if (!is_prime(p) || m % p != 0) continue;
        std::vector<i64> logcount;  // c_j = log_p #{x : x^(p^j) = e}
        logcount.push_back(0);
        for (i64 j = 1;; ++j) {
            i64 pj = ipow(p, j);
            i64 cnt = 0;
            for (i64 x : subgroup)
                if (pow(x, pj) == 0) ++cnt;
            i64 c = 0;
            while (cnt > 1) { cnt /= p; ++c; }
            logcount.push_back(c);
            if (j > 1 && logcount[j] == logcount[j - 1]) break;
        }
        for (size_t j = 1; j < logcount.size(); ++j) {
            i64 atleast_j = logcount[j] - logcount[j - 1];
            i64 atleast_j1 = j + 1 < logcount.size() ? logcount[j + 1] - logcount[j] : 0;
            for (i64 t = 0; t < atleast_j - atleast_j1; ++t) pps.push_back(ipow(p, j));
        }
    }
    return AbelianInvariants::from_prime_powers(pps);
}

std::vector<i64> Group::p_regular_classes(i64 p) const {
    const auto& cd = classes();
    std::vector<i64> out;
    for (size_t c = 0; c < cd.reps.size(); ++c)
        if (elem_order(cd.reps[c]) % p != 0) out.push_back(static_cast<i64>(c));
    return out;
}

std::optional<i64> Group::central_order_p_element(i64 p) const {
    for (i64 z : center())
        if (elem_order(z) == p) return z;
    return std::nullopt;
}

std::vector<i64> Group::omega_set(i64 z) const {
    for (i64 x = 0; x < n_; ++x)
        if (mul(z, x) != mul(x, z)) throw NotCentral("omega_set requires a central element");
    const auto& cd = classes();
    std::vector<i64> out;
    for (i64 g = 0; g < n_; ++g)
        if (cd.class_of[g] == cd.class_of[mul(z, g)]) out.push_back(g);
    return out;
}

std::vector<i64> Group::power_map_on_classes(i64 k) const {
    const auto& cd = classes();
    std::vector<i64> out(cd.reps.size());
    for (size_t c = 0; c < cd.reps.size(); ++c) {
        out[c] = cd.class_of[pow(cd.reps[c], k)];
        for (i64 g : cd.classes[c])
            if (cd.class_of[pow(g, k)] != out[c]) throw Error("power map not class-constant");
    }
    return out;
}

Group::CentralQuotient Group::quotient_by_central(i64 z) const {
    std::vector<i64> zgrp = subgroup_closure({z});
    for (i64 h : zgrp)
        for (i64 x = 0; x < n_; ++x)
            if (mul(h, x) != mul(x, h)) throw NotCentral("quotient_by_central: not central");
    CosetDecomp cd = coset_decompose(*this, zgrp);
    i64 idc = cd.coset_of[0];
    i64 q = static_cast<i64>(cd.reps.size());
    std::vector<i64> remap(q);
    std::iota(remap.begin(), remap.end(), 0);
    std::swap(remap[0], remap[idc]);
    std::vector<i64> inv_remap(q);
    for (i64 i = 0; i < q; ++i) inv_remap[remap[i]] = i;
    std::vector<std::vector<i64>> qt(q, std::vector<i64>(q));
    for (i64 i = 0; i < q; ++i)
        for (i64 j = 0; j < q; ++j)
            qt[i][j] = inv_remap[cd.coset_of[mul(cd.reps[remap[i]], cd.reps[remap[j]])]];
    CentralQuotient out;
    out.quotient = std::make_shared<Group>(qt, name_ + "/z");
    out.proj.assign(n_, 0);
    for (i64 x = 0; x < n_; ++x) out.proj[x] = inv_remap[cd.coset_of[x]];
    out.section.assign(q, 0);
    for (i64 i = 0; i < q; ++i) out.section[i] = cd.reps[remap[i]];
    out.section[0] = 0;
    return out;
}

std::shared_ptr<const void> Group::aux_get(const std::string& key) const {
    std::lock_guard<std::mutex> lk(aux_mtx_);
    auto it = aux_.find(key);
    return it == aux_.end() ? nullptr : it->second;
}

void Group::aux_set(const std::string& key, std::shared_ptr<const void> v) const {
    std::lock_guard<std::mutex> lk(aux_mtx_);
    aux_.emplace(key, std::move(v));
}

std::vector<Group::KConjClass> Group::k_conjugacy_bookkeeping(i64 p, i64 q) const {
    const auto& cd = classes();
    auto pr = p_regular_classes(p);
    std::vector<bool> used(cd.reps.size(), false);
    std::vector<KConjClass> out;
    for (i64 c : pr) {
        if (used[c]) continue;
        KConjClass kc;
        kc.rep = cd.reps[c];
        i64 n_i = elem_order(kc.rep);
        // galois orbit of exponents: <q mod n_i>
        std::set<i64> expo;
        i64 a = mod_floor(q, n_i);
        i64 cur = 1;
        do {
            expo.insert(cur);
            cur = mod_floor(cur * a, n_i);
        } while (!expo.count(cur));
        for (i64 e : expo) {
            i64 cls = cd.class_of[pow(kc.rep, e)];
            if (!used[cls] && elem_order(cd.reps[cls]) % p != 0) {
                used[cls] = true;
                kc.fused_classes.push_back(cls);
            }
        }
        for (i64 x = 0; x < n_; ++x) {
            i64 cg = conj(kc.rep, x);
            for (i64 e : expo)
                if (cg == pow(kc.rep, e)) {
                    kc.n_subgroup.push_back(x);
                    break;
                }
        }
        kc.z_subgroup = centralizer(kc.rep);
        out.push_back(std::move(kc));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter coset enumeration (HLT with coincidence handling)
// ---------------------------------------------------------------------------

namespace {

class ToddCoxeter {
  public:
    ToddCoxeter(int ngens, const std::vector<std::vector<int>>& relators, i64 bound)
        : ngens_(ngens), ncols_(2 * ngens), bound_(bound) {
        for (const auto& r : relators) {
            std::vector<int> w;
            for (int s : r) w.push_back(col_of(s));
            rels_.push_back(std::move(w));
        }
        new_coset();
    }

    // returns the generator-action table on live cosets
    std::vector<std::vector<i64>> run() {
        for (i64 a = 0; a < ncos_; ++a) {
            if (!alive(a)) continue;
            for (const auto& r : rels_) {
                scan_and_fill(a, r);
                process_coincidences();
                if (!alive(a)) break;
            }
            if (!alive(a)) continue;
            for (int c = 0; c < ncols_; ++c) {
                if (tab_[a][c] < 0) {
                    define(a, c);
                    process_coincidences();
                    if (!alive(a)) break;
                }
            }
        }
        // final full scan to confirm completeness
        for (i64 a = 0; a < ncos_; ++a) {
            if (!alive(a)) continue;
            for (const auto& r : rels_) {
                i64 f = a;
                for (int c : r) {
                    f = tab_[f][c];
                    if (f < 0) throw Error("todd-coxeter: incomplete table after closure");
                }
                if (find(f) != find(a)) throw Error("todd-coxeter: relator scan mismatch");
            }
        }
        // compress
        std::vector<i64> newid(ncos_, -1);
        i64 cnt = 0;
        for (i64 a = 0; a < ncos_; ++a)
            if (alive(a)) newid[a] = cnt++;
        std::vector<std::vector<i64>> act(cnt, std::vector<i64>(ncols_));
        for (i64 a = 0; a < ncos_; ++a) {
            if (!alive(a)) continue;
            for (int c = 0; c < ncols_; ++c) {
                i64 t = tab_[a][c];
                if (t < 0) throw Error("todd-coxeter: hole after closure");
                act[newid[a]][c] = newid[find(t)];
            }
        }
        return act;
    }

    int cols() const { return ncols_; }
    static int col(int signed_gen) {
        return signed_gen > 0 ? 2 * (signed_gen - 1) : 2 * (-signed_gen - 1) + 1;
    }

  private:
    int col_of(int signed_gen) const { return col(signed_gen); }
    static int inv_col(int c) { return c ^ 1; }

    i64 new_coset() {
        if (ncos_ >= bound_) throw EnumerationBudgetExceeded("coset bound exceeded");
        tab_.emplace_back(ncols_, -1);
        parent_.push_back(ncos_);
        return ncos_++;
    }

    i64 find(i64 a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }
    bool alive(i64 a) { return find(a) == a; }

    void define(i64 a, int c) {
        i64 b = new_coset();
        set_entry(a, c, b);
    }

    void set_entry(i64 a, int c, i64 b) {
        a = find(a);
        b = find(b);
        i64 cur = tab_[a][c];
        if (cur >= 0 && find(cur) != b) queue_.emplace_back(find(cur), b);
        tab_[a][c] = b;
        i64 cur2 = tab_[b][inv_col(c)];
        if (cur2 >= 0 && find(cur2) != a) queue_.emplace_back(find(cur2), a);
        tab_[b][inv_col(c)] = a;
    }

    void scan_and_fill(i64 a, const std::vector<int>& w) {
        a = find(a);
        while (true) {
            i64 f = a;
            size_t i = 0;
            while (i < w.size()) {
                i64 t = tab_[find(f)][w[i]];
                if (t < 0) break;
                f = find(t);
                ++i;
            }
            if (i == w.size()) {
                if (find(f) != find(a)) queue_.emplace_back(find(f), find(a));
                return;
            }
            i64 b = a;
            size_t j = w.size();
            while (j > i) {
                i64 t = tab_[find(b)][inv_col(w[j - 1])];
                if (t < 0) break;
                b = find(t);
                --j;
            }
            if (j == i + 1) {
                set_entry(find(f), w[i], find(b));
                return;
            }
            if (j == i) {
                if (find(f) != find(b)) queue_.emplace_back(find(f), find(b));
                return;
            }
            define(find(f), w[i]);
        }
    }

    void process_coincidences() {
        while (!queue_.empty()) {
            auto [x, y] = queue_.back();
            queue_.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            parent_[y] = x;  // merge y into x
            for (int c = 0; c < ncols_; ++c) {
                i64 t = tab_[y][c];
                if (t < 0) continue;
                set_entry(x, c, find(t));
            }
        }
    }

    int ngens_, ncols_;
    i64 bound_;
    std::vector<std::vector<int>> rels_;
    std::vector<std::vector<i64>> tab_;
    std::vector<i64> parent_;
    std::vector<std::pair<i64, i64>> queue_;
    i64 ncos_ = 0;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation pres;
    std::istringstream in(text);
    std::string line;
    bool header = false;
    auto gen_index = [&](const std::string& tok) -> std::pair<int, int> {
        // token forms: a, a^-1, a^3
        size_t caret = tok.find('^');
        std::string base = tok.substr(0, caret == std::string::npos ? tok.size() : caret);
        int e = 1;
        if (caret != std::string::npos) {
            try {
                e = std::stoi(tok.substr(caret + 1));
            } catch (...) {
                throw BadPresentation("bad exponent in token '" + tok + "'");
            }
        }
        if (base.size() != 1 || base[0] < 'a' || base[0] >= 'a' + pres.ngens)
            throw BadPresentation("unknown generator '" + base + "'");
        return {base[0] - 'a' + 1, e};
    };
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (!header) {
            if (tok != "gens") throw BadPresentation("first line must be 'gens k'");
            if (!(ls >> pres.ngens) || pres.ngens < 1 || pres.ngens > 26)
                throw BadPresentation("generator count out of range");
            header = true;
            continue;
        }
        std::vector<int> rel;
        do {
            auto [g, e] = gen_index(tok);
            int s = e < 0 ? -g : g;
            for (int i = 0; i < std::abs(e); ++i) rel.push_back(s);
        } while (ls >> tok);
        if (!rel.empty()) pres.relators.push_back(std::move(rel));
    }
    if (!header) throw BadPresentation("missing 'gens k' header");
    if (pres.relators.empty()) throw BadPresentation("finite groups need at least one relator");
    return pres;
}

GroupPtr group_from_table(std::vector<std::vector<i64>> table, std::string name) {
    return std::make_shared<Group>(std::move(table), std::move(name));
}

GroupPtr group_from_presentation(const Presentation& pres, i64 bound, std::string name) {
    ToddCoxeter tc(pres.ngens, pres.relators, bound);
    auto act = tc.run();
    const i64 n = static_cast<i64>(act.size());
    // element words: BFS from coset 0
    std::vector<std::vector<int>> word(n);
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::vector<i64> bfs{0};
    for (size_t h = 0; h < bfs.size(); ++h) {
        i64 a = bfs[h];
        for (int c = 0; c < tc.cols(); ++c) {
            i64 b = act[a][c];
            if (!seen[b]) {
                seen[b] = true;
                word[b] = word[a];
                word[b].push_back(c);
                bfs.push_back(b);
            }
        }
    }
    auto apply_word = [&](i64 a, const std::vector<int>& w) {
        for (int c : w) a = act[a][c];
        return a;
    };
    std::vector<std::vector<i64>> table(n, std::vector<i64>(n));
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) table[i][j] = apply_word(i, word[j]);
    auto g = std::make_shared<Group>(std::move(table), std::move(name));
    for (int k = 0; k < pres.ngens; ++k) {
        g->generators.push_back(act[0][ToddCoxeter::col(k + 1)]);
        g->generator_names.push_back(std::string(1, static_cast<char>('a' + k)));
    }
    return g;
}

GroupPtr cyclic_group(i64 n) {
    std::vector<std::vector<i64>> t(n, std::vector<i64>(n));
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    auto g = std::make_shared<Group>(std::move(t), "C" + std::to_string(n));
    if (n > 1) {
        g->generators.push_back(1);
        g->generator_names.push_back("a");
    }
    return g;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
    i64 na = a->order(), nb = b->order(), n = na * nb;
    std::vector<std::vector<i64>> t(n, std::vector<i64>(n));
    for (i64 i = 0; i < n; ++i)
        for (i64 j = 0; j < n; ++j) {
            i64 x = a->mul(i / nb, j / nb);
            i64 y = b->mul(i % nb, j % nb);
            t[i][j] = x * nb + y;
        }
    auto g = std::make_shared<Group>(std::move(t), a->name() + "x" + b->name());
    for (i64 gen : a->generators) g->generators.push_back(gen * nb);
    for (i64 gen : b->generators) g->generators.push_back(gen);
    for (size_t k = 0; k < g->generators.size(); ++k)
        g->generator_names.push_back(std::string(1, static_cast<char>('a' + k)));
    return g;
}

GroupPtr catalog_group(const std::string& name) {
    if (name == "C1") return cyclic_group(1);
    if (name == "D4")
        return group_from_presentation(parse_presentation("gens 2\na^4\nb^2\nb a b^-1 a"), 256, "D4");
    if (name == "Q8")
        return group_from_presentation(parse_presentation("gens 2\na^4\na^2 b^-2\nb a b^-1 a"), 256,
                                       "Q8");
    if (name == "S3")
        return group_from_presentation(parse_presentation("gens 2\na^3\nb^2\nb a b^-1 a"), 256, "S3");
    if (name == "Heis3")
        return group_from_presentation(
            parse_presentation("gens 3\na^3\nb^3\nc^3\n"
                               "a b a^-1 b^-1 c^-1\na c a^-1 c^-1\nb c b^-1 c^-1"),
            2048, "Heis3");
    // C<n> and products C<n>xC<m>x...
    GroupPtr acc;
    size_t pos = 0;
    while (pos < name.size()) {
        if (name[pos] != 'C') throw UnknownGroup("unknown catalog group '" + name + "'");
        size_t end = pos + 1;
        while (end < name.size() && isdigit(name[end])) ++end;
        if (end == pos + 1) throw UnknownGroup("unknown catalog group '" + name + "'");
        i64 n = std::stoll(name.substr(pos + 1, end - pos - 1));
        if (n < 1 || n > 256) throw UnknownGroup("cyclic factor out of range in '" + name + "'");
        GroupPtr c = cyclic_group(n);
        acc = acc ? direct_product(acc, c) : c;
        pos = end;
        if (pos < name.size()) {
            if (name[pos] != 'x') throw UnknownGroup("unknown catalog group '" + name + "'");
            ++pos;
        }
    }
    if (!acc) throw UnknownGroup("unknown catalog group '" + name + "'");
    acc->set_name(name);
    return acc;
}

std::vector<std::string> catalog_names() {
    return {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C12", "C16",
            "C2xC2", "C3xC3", "C5xC5", "C2xC4", "C3xC9", "D4", "Q8", "S3", "Heis3"};
}

}  // namespace padk1
