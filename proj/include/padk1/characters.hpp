#pragma once

#include "padk1/group.hpp"
#include "padk1/groupring.hpp"
#include "padk1/unram_ring.hpp"

namespace padk1 {

// Exact cyclotomic integer in Z[x]/Phi_e: the value lattice for characters.
struct CycInt {
    i64 e = 1;
    std::vector<i64> c;  // length phi(e)
};

CycInt ci_zero(i64 e);
CycInt ci_int(i64 e, i64 v);
CycInt ci_root_pow(i64 e, i64 k);
CycInt ci_add(const CycInt& a, const CycInt& b);
CycInt ci_sub(const CycInt& a, const CycInt& b);
CycInt ci_neg(const CycInt& a);
CycInt ci_mul(const CycInt& a, const CycInt& b);
CycInt ci_mul_int(const CycInt& a, i64 s);
bool ci_eq(const CycInt& a, const CycInt& b);
bool ci_is_int(const CycInt& a, i64 v);
// re-embed from conductor d | e by x_d = x^(e/d)
CycInt ci_lift(const CycInt& a, i64 e);

struct Character {
    i64 degree = 0;
    std::vector<CycInt> values;  // per conjugacy class, exact in Z[x]/Phi_e
};

struct CharacterTable {
    GroupPtr G;
    i64 exponent = 1;
    std::vector<Character> chars;   // chars[0] is the trivial character
    std::vector<i64> inv_class;     // class index -> class of the inverses
    i64 dixon_prime = 0;
};

// All irreducible characters by the Burnside-Dixon method (class-algebra
// eigenvectors over F_l, l = 1 mod exp(G), lifted through the multiplicity
// DFT). Cached per group; orthogonality verified exactly.
const CharacterTable& character_table(const GroupPtr& g, i64 order_bound = 64);

// exact inner product <a, b> = (1/|G|) sum |C_j| a(j) b(inv j); must be an
// integer for virtual characters
i64 character_inner(const CharacterTable& t, const std::vector<CycInt>& a,
                    const std::vector<CycInt>& b);

// matrix of psi^p in the irreducible basis: row chi lists the coefficients of
// psi^p(chi); the adjoint psi_p is its transpose in this (orthonormal) basis
std::vector<std::vector<i64>> adams_matrix(const CharacterTable& t, i64 p);
std::vector<std::vector<i64>> adams_adjoint_matrix(const CharacterTable& t, i64 p);

// det of rho(g) for the irreducible chi, recovered from the power traces
// chi(g^k) by Newton's identities in exact rational cyclotomic arithmetic
CycInt det_character(const CharacterTable& t, i64 chi, i64 g);

// monomial model of an irreducible: a linear character of a subgroup inducing
// it, with fixed coset representatives
struct InducedRep {
    std::vector<i64> subgroup;        // element indices of H, subgroup[0] = 1
    std::vector<CycInt> lin_values;   // linear character on H (indexed as subgroup)
    std::vector<i64> coset_reps;      // left coset representatives, size = degree
};
const InducedRep& induced_rep(const CharacterTable& t, i64 chi, i64 order_bound = 64);

// evaluation into the p-adic cyclotomic value ring
CycElt eval_cycint(const Cyc& C, const CycInt& v);
// Tr(a)(chi) = sum_g a_g chi(g)
CycElt tr_eval(const Cyc& C, const CharacterTable& t, const GrElt& a, i64 chi);
// class-function variant: sum_c a_c chi(c)
CycElt tr_eval_cf(const Cyc& C, const CharacterTable& t, const ClassFn& a, i64 chi);
// exact determinant of rho(u) for a group ring element u (degree 1 direct,
// degree > 1 through the monomial model)
CycElt det_rho(const Cyc& C, const CharacterTable& t, const GrElt& u, i64 chi);

}  // namespace padk1
