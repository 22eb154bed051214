#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "padk1/finite_field.hpp"
#include "padk1/util.hpp"

namespace padk1 {

class RingCtx;
using Ring = std::shared_ptr<RingCtx>;

// Element of W(kappa)/p^N over some level of a field tower. Coefficients are
// integers mod p^N in the block layout of the corresponding FElt.
// known_precision: guaranteed p-adic digits (<= N); arithmetic propagates the
// minimum of the operands, division by p drops one digit.
struct RElt {
    Ring R;
    int level = 0;
    std::vector<i64> a;
    i64 prec = 0;
};

// Arithmetic context for O = W(F_{p^n})/p^N and its tower extensions.
// Level 0 is (Z/p^N)[x]/(lifted modulus); level j >= 1 is O_{j-1}[T]/(T^p-T-c~)
// where c~ is the canonical integer lift of the field-level constant.
class RingCtx : public std::enable_shared_from_this<RingCtx> {
  public:
    RingCtx(std::shared_ptr<FieldTower> tower, i64 N);

    i64 p() const { return p_; }
    i64 N() const { return N_; }
    i64 pN() const { return pN_; }
    std::shared_ptr<FieldTower> tower() const { return tower_; }
    i64 degree(int level) const { return tower_->degree(level); }
    // monic lift of the base field modulus (integer coefficients in [0, p))
    std::vector<i64> lifted_modulus() const;

    // a sibling context on the same tower at a different precision
    Ring at_precision(i64 N2) const;

    RElt zero(int level = 0);
    RElt one(int level = 0);
    RElt from_int(i64 v, int level = 0);
    RElt from_residue(const FElt& x);          // canonical digit lift
    RElt gen(int level = 0);
    FElt residue(const RElt& x) const;         // reduction mod p

    RElt add(const RElt& x, const RElt& y);
    RElt sub(const RElt& x, const RElt& y);
    RElt neg(const RElt& x);
    RElt mul(const RElt& x, const RElt& y);
    RElt mul_int(const RElt& x, i64 s);
    RElt pow(const RElt& x, i64 e);
    bool is_zero(const RElt& x) const;
    bool eq(const RElt& x, const RElt& y) const;  // at min known precision
    i64 valuation(const RElt& x) const;           // min p-valuation of coords; N if 0

    RElt embed_up(const RElt& x, int target_level);
    // carry a representative into a sibling context (same tower)
    RElt to_ctx(const RElt& x, const Ring& dst) const;

    bool is_unit(const RElt& x) const;  // residue nonzero
    RElt inv(const RElt& x);            // Newton lift of the residue inverse

    RElt frobenius(const RElt& x);      // the canonical Frobenius lift
    RElt frobenius_iter(const RElt& x, i64 k);

    // exact division by p^k; requires all coordinates divisible
    RElt div_exact_p(const RElt& x, i64 k = 1);

    // Teichmuller representative of a nonzero residue element.
    RElt teichmuller(const FElt& a);

    // Solves (1 - phi)(s) = r mod p^N digit by digit, extending the residue
    // tower as needed; the result lives at the level where all digits solved.
    RElt solve_one_minus_frobenius(const RElt& r);

    // (p - phi) is invertible on O: exact digit solve of (p - phi)(y) = w.
    RElt solve_p_minus_frobenius(const RElt& w);

    // truncated p-adic series on scalars of this ring
    RElt scalar_log(const RElt& x);  // requires x = 1 mod p
    RElt scalar_exp(const RElt& x);  // requires x = 0 mod p (odd p)

    RElt hensel_root_public(const std::vector<RElt>& poly, const RElt& start);

  private:
    struct LevelData {
        RElt frob_gen;   // image of the level generator under the lift
        RElt c_lift;     // level >= 1: canonical lift of the AS constant
    };
    const std::vector<i64>& c_lift_at(int level);
    RElt frob_gen_at(int level);
    RElt frobenius_at(int level, const RElt& x);
    void v_mul(int level, const i64* x, const i64* y, i64* out);
    RElt hensel_root(int level, const std::vector<RElt>& poly, const RElt& start);
    RElt eval_poly_at(const std::vector<RElt>& poly, const RElt& x);

    std::shared_ptr<FieldTower> tower_;
    i64 p_, N_, pN_;
    std::vector<i64> lifted_modulus_;
    std::vector<LevelData> levels_;
    mutable std::mutex mtx_;
};

// Canonical ring W(F_{p^n})/p^N over make_extension(p, n).
Ring make_unramified_ring(i64 p, i64 n, i64 N);
Ring ring_over(const Field& F, i64 N);

RElt ring_frobenius(const RElt& x);
RElt teichmuller(const Ring& R, const FElt& a);
RElt solve_one_minus_frobenius(const RElt& r);
RElt scalar_log(const RElt& x);
RElt scalar_exp(const RElt& x);

// Ring embedding along a flat field embedding: Hensel lift of the generator
// image to a root of the source's lifted modulus.
struct RingEmbedding {
    Ring src, dst;
    RElt gen_image;
    FieldEmbedding field_emb;
};
RingEmbedding embed_ring(const Ring& src, const Ring& dst);
RElt apply_ring_embedding(const RingEmbedding& e, const RElt& x);

// O[x]/Phi_e(x) at the precision of the base ring: the value ring for
// characters of exponent-e groups. The Frobenius lift acts as phi on O and
// fixes the class of x.
class CycRing;
using Cyc = std::shared_ptr<CycRing>;

struct CycElt {
    Cyc C;
    std::vector<RElt> c;  // length phi(e)
};

class CycRing : public std::enable_shared_from_this<CycRing> {
  public:
    CycRing(Ring base, i64 e);
    i64 e() const { return e_; }
    i64 dim() const { return static_cast<i64>(phi_.size()) - 1; }
    Ring base() const { return base_; }
    const std::vector<i64>& cyclotomic_poly() const { return phi_; }

    CycElt zero();
    CycElt one();
    CycElt from_base(const RElt& x);
    CycElt root();  // class of x, a primitive e-th root of unity
    CycElt root_pow(i64 k);
    CycElt add(const CycElt& x, const CycElt& y);
    CycElt sub(const CycElt& x, const CycElt& y);
    CycElt neg(const CycElt& x);
    CycElt mul(const CycElt& x, const CycElt& y);
    CycElt mul_int(const CycElt& x, i64 s);
    CycElt pow(const CycElt& x, i64 k);
    CycElt frobenius(const CycElt& x);  // phi on O, x fixed
    bool eq(const CycElt& x, const CycElt& y, i64 digits) const;
    bool is_zero_mod(const CycElt& x, i64 digits) const;
    CycElt div_exact_p(const CycElt& x, i64 k = 1);
    i64 min_prec(const CycElt& x) const;

  private:
    Ring base_;
    i64 e_;
    std::vector<i64> phi_;  // integer coefficients of Phi_e, monic
};

Cyc cyclotomic_extend(const Ring& ring, i64 e);
std::vector<i64> cyclotomic_polynomial(i64 e);

}  // namespace padk1
