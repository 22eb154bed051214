#pragma once

#include "padk1/group.hpp"
#include "padk1/util.hpp"

namespace padk1 {

// Bar-complex homology data for one group at one prime: elementary-divisor
// exponents of the boundary images over Z/p^e, e = v_p(|G|). Everything the
// H2 / H2^ab / SK1 invariant extractions need is derived from these.
struct H2Prime {
    i64 p = 0, e = 0;
    i64 n2 = 0;                 // dim of the degree-2 term = |G|^2
    std::vector<i64> d2_exps;   // exponents of im(d2) in C1
    std::vector<i64> d3_exps;   // exponents of im(d3) in C2
    std::vector<i64> u_exps;    // exponents of im(d3) + commuting-pair cycles

    i64 log_h2_size(i64 j) const;       // log_p |H_2(G, Z/p^j)|
    i64 log_h2ab_size(i64 j) const;     // log_p |(cycles + B2)/B2| over Z/p^j
    i64 log_sk1_quot_size(i64 j) const; // log_p |Z2 / (B2 + cycles)| over Z/p^j
};

H2Prime h2_prime_data(const Group& g, i64 p, i64 order_bound = 64);

// Schur multiplier H_2(G) as abelian invariants (second homology via the
// bar complex over Z/p^{v_p(|G|)} per prime, universal-coefficient split).
AbelianInvariants schur_multiplier(const Group& g, i64 order_bound = 64);

// Image of the induced maps from all abelian subgroups: the subgroup of H_2
// generated by the commuting-pair cycles [x|y] - [y|x].
AbelianInvariants h2_ab_part(const Group& g, i64 order_bound = 64);

// SK1(R[G]) = H_2(G)/H_2^ab(G) for a p-group G over an unramified R.
AbelianInvariants sk1_pgroup(const Group& g, i64 p, i64 order_bound = 64);

}  // namespace padk1
