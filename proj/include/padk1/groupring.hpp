#pragma once

#include "padk1/group.hpp"
#include "padk1/unram_ring.hpp"

namespace padk1 {

// Element of O[G]: one ring coefficient per group element, all at the same
// tower level of the same ring context.
struct GrElt {
    Ring R;
    GroupPtr G;
    int level = 0;
    std::vector<RElt> c;
};

// Class-function variant: one coefficient per conjugacy class.
struct ClassFn {
    Ring R;
    GroupPtr G;
    int level = 0;
    std::vector<RElt> c;
};

GrElt gr_zero(const Ring& R, const GroupPtr& G, int level = 0);
GrElt gr_one(const Ring& R, const GroupPtr& G, int level = 0);
GrElt gr_group_elt(const Ring& R, const GroupPtr& G, i64 g, int level = 0);
GrElt gr_scalar(const GroupPtr& G, const RElt& x);
GrElt gr_add(const GrElt& x, const GrElt& y);
GrElt gr_sub(const GrElt& x, const GrElt& y);
GrElt gr_neg(const GrElt& x);
GrElt gr_mul(const GrElt& x, const GrElt& y);
GrElt gr_mul_relt(const GrElt& x, const RElt& s);
GrElt gr_mul_int(const GrElt& x, i64 s);
GrElt gr_pow(const GrElt& x, i64 e);
bool gr_eq(const GrElt& x, const GrElt& y);
bool gr_is_zero(const GrElt& x);
i64 gr_min_prec(const GrElt& x);
GrElt gr_embed_up(const GrElt& x, int level);
GrElt gr_to_ctx(const GrElt& x, const Ring& dst);

RElt aug(const GrElt& x);

ClassFn classproj(const GrElt& x);
ClassFn cf_zero(const Ring& R, const GroupPtr& G, int level = 0);
ClassFn cf_add(const ClassFn& x, const ClassFn& y);
ClassFn cf_sub(const ClassFn& x, const ClassFn& y);
ClassFn cf_mul_int(const ClassFn& x, i64 s);
bool cf_eq(const ClassFn& x, const ClassFn& y);
bool cf_eq_mod(const ClassFn& x, const ClassFn& y, i64 digits);
ClassFn cf_div_exact_p(const ClassFn& x, i64 k = 1);
i64 cf_min_prec(const ClassFn& x);

// unit test and inversion through the regular representation over the residue
// field and Newton lifting
bool is_unit(const GrElt& x);
GrElt invert(const GrElt& x);

enum class UnitKind { OnePlusI, OnePlusA, OnePlusPR, TeichTimesGroup };
GrElt sample_unit(const Ring& R, const GroupPtr& G, UnitKind kind, u64 seed, int level = 0);

// kernel of O[G] -> O[G^ab]
bool a_ideal_membership(const GrElt& x);
GrElt ab_pushforward(const GrElt& x);  // element of O[G^ab]

// Frobenius-twisted operators: Psi(sum r_g g) = sum phi(r_g) g^p on the group
// ring, Phi the analogous operator on class functions through the power map.
GrElt psi_operator(const GrElt& x);
ClassFn phi_operator(const ClassFn& x);
GrElt coeff_frobenius(const GrElt& x);  // plain coefficientwise phi

// coefficient extension along a ring embedding O_R -> O_S
GrElt i_star(const GrElt& x, const RingEmbedding& e, const GroupPtr& G);

struct GroupRingMatrix {
    Ring R;
    GroupPtr G;
    i64 n = 0;
    std::vector<GrElt> entries;  // row-major n x n
};

// O_S as a free O_R-module on the power basis of the lifted generator
struct TransferData {
    RingEmbedding emb;
    i64 n = 0;                       // [O_S : O_R]
    std::vector<std::vector<i64>> inv_basis;  // precomputed decomposition matrix
};
TransferData make_transfer_data(const Ring& src, const Ring& dst);
std::vector<RElt> transfer_decompose(const TransferData& td, const RElt& x);
GroupRingMatrix transfer_matrix(const GrElt& u, const TransferData& td);

// determinant over the commutative group ring (abelian G only)
GrElt matrix_det(const GroupRingMatrix& m);

}  // namespace padk1
