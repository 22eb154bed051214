#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "padk1/util.hpp"

namespace padk1 {

class FieldTower;

// Handle to one field in an extension chain: level 0 is a flat F_p[x]/(modulus)
// field, level j >= 1 is the Artin-Schreier step kappa[T]/(T^p - T - c_j) over
// level j-1. Total degree over F_p is n0 * p^level.
struct Field {
    std::shared_ptr<FieldTower> tower;
    int level = 0;

    i64 p() const;
    i64 degree() const;
    i64 size_if_small(i64 cap = 1'000'000) const;  // p^degree or -1 if above cap
    bool same(const Field& o) const { return tower == o.tower && level == o.level; }
};

// Element of a field: coefficient vector over F_p of length Field::degree().
// For tower levels the layout is p consecutive blocks over the subfield.
struct FElt {
    Field F;
    std::vector<i64> a;
};

class FieldTower : public std::enable_shared_from_this<FieldTower> {
  public:
    // Builds the flat base F_{p^n} with the given monic modulus (degree n,
    // coefficients mod p, modulus[n] == 1). Irreducibility is verified.
    FieldTower(i64 p, std::vector<i64> modulus);

    i64 p() const { return p_; }
    int top_level() const { return static_cast<int>(levels_.size()); }
    i64 degree(int level) const { return n0_ * ipow(p_, level); }
    const std::vector<i64>& base_modulus() const { return modulus_; }

    // Artin-Schreier constant of level j >= 1, as an element of level j-1.
    FElt level_constant(int j);

    // Adds a level kappa[T]/(T^p - T - c) on top; c must be a top-level element
    // with nonzero absolute trace. Returns the new top level index. Idempotent
    // under races: if another thread extended first, that level is reused.
    int extend(const FElt& c);

    // element ops (operands must live at the same level of this tower)
    FElt zero(int level);
    FElt one(int level);
    FElt from_int(int level, i64 v);
    FElt gen(int level);  // x at level 0, T at level >= 1
    FElt add(const FElt& x, const FElt& y);
    FElt sub(const FElt& x, const FElt& y);
    FElt neg(const FElt& x);
    FElt mul(const FElt& x, const FElt& y);
    FElt mul_scalar(const FElt& x, i64 s);
    FElt inv(const FElt& x);
    FElt pow(const FElt& x, i64 e);
    FElt frobenius(const FElt& x);          // x^p
    FElt frobenius_inv(const FElt& x);      // x^(p^(deg-1))
    i64 trace_to_prime(const FElt& x);      // Tr_{kappa/F_p}
    bool is_zero(const FElt& x) const;

    FElt embed_up(const FElt& x, int target_level);

    // Solves t - t^p = d within the level of d; nullopt iff Tr(d) != 0.
    std::optional<FElt> solve_one_minus_frob_field(const FElt& d);

  private:
    friend struct Field;
    struct Level {
        std::vector<i64> c;                  // constant, coords in level j-1
        std::vector<std::vector<i64>> c_pow; // c^0..c^(p-1) in level j-1
        std::vector<std::vector<i64>> tc_pow;// (T+c)^0..(T+c)^(p-1) in level j
        std::vector<i64> tau;                // tau_m = Tr(c^m) in F_p
    };

    void build_flat_tables();
    void build_level_tables(Level& L, int j);

    // span-based kernel ops; level identifies the arithmetic used
    void v_add(int level, const i64* x, const i64* y, i64* out) const;
    void v_sub(int level, const i64* x, const i64* y, i64* out) const;
    void v_mul(int level, const i64* x, const i64* y, i64* out) const;
    void v_frob(int level, const i64* x, i64* out) const;
    i64 v_trace(int level, const i64* x) const;
    bool v_solve(int level, const i64* d, i64* out) const;  // t - t^p = d
    std::vector<i64> v_inv(int level, const std::vector<i64>& x) const;

    i64 p_;
    i64 n0_;
    std::vector<i64> modulus_;
    std::vector<Level> levels_;
    mutable std::mutex mtx_;

    // flat-level tables
    std::vector<i64> tr_basis_;                    // Tr(x^i)
    std::vector<std::vector<i64>> one_minus_frob_; // columns (b_i - b_i^p)
};

// Canonical field F_{p^n}: lexicographically smallest irreducible monic
// modulus; one shared instance per (p, n).
Field make_extension(i64 p, i64 n);

// Field with an explicitly chosen modulus (fresh tower, not cached).
Field make_field_with_modulus(i64 p, const std::vector<i64>& modulus);

FElt field_frobenius(const FElt& x);

// Solves s - s^p = a, extending the residue tower by one degree-p step if
// needed. The returned field is a's field or its registered extension.
std::pair<FElt, Field> solve_artin_schreier(const FElt& a);

// Smallest (lexicographic coefficient order) irreducible monic polynomial of
// degree n over F_p.
std::vector<i64> smallest_irreducible(i64 p, i64 n);
bool poly_is_irreducible(i64 p, const std::vector<i64>& f);

// Exhaustive root search of a monic F_p-polynomial inside a small field.
std::optional<FElt> find_root(const std::vector<i64>& poly, const Field& F);

// Ring embedding F -> E determined by sending F's generator to the smallest
// root of F's defining polynomial in E. Both fields must be flat (level 0).
struct FieldEmbedding {
    Field src, dst;
    FElt gen_image;
};
FieldEmbedding embed_field(const Field& src, const Field& dst);
FElt apply_embedding(const FieldEmbedding& e, const FElt& x);

}  // namespace padk1
