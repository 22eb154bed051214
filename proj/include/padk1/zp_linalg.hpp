#pragma once

#include <vector>

#include "padk1/util.hpp"

namespace padk1 {

// Row-module arithmetic over the chain ring Z/p^e. Rows are inserted one at a
// time; the basis keeps the Howell closure so membership tests are complete.
class ZpeSpace {
  public:
    ZpeSpace(i64 p, i64 e, i64 cols);
    void insert(std::vector<i64> row);
    bool contains(std::vector<i64> row) const;
    std::vector<i64> reduce(std::vector<i64> row) const;  // residual after reduction
    const std::vector<std::vector<i64>>& basis() const { return rows_; }
    i64 cols() const { return cols_; }
    i64 pe() const { return pe_; }

  private:
    i64 p_, e_, pe_, cols_;
    std::vector<std::vector<i64>> rows_;  // indexed by leading column; may be empty
    std::vector<i64> lead_val_;           // valuation of leading entry, or -1
};

// Generators of {x in (Z/p^e)^n : A x = 0}; `equations` are the rows of A.
std::vector<std::vector<i64>> zpe_right_kernel(i64 p, i64 e,
                                               const std::vector<std::vector<i64>>& equations,
                                               i64 n);

// Prime-power invariant factors (> 1) of (Z/p^e)^k / <relation rows>,
// by full-pivot diagonalization over the chain ring.
std::vector<i64> zpe_module_invariants(i64 p, i64 e, std::vector<std::vector<i64>> rel,
                                       i64 k);

// Invariants of span(W)/span(U) inside (Z/p^e)^n; U must lie in span(W).
std::vector<i64> zpe_quotient_invariants(i64 p, i64 e,
                                         const std::vector<std::vector<i64>>& gens_w,
                                         const std::vector<std::vector<i64>>& gens_u, i64 n);

}  // namespace padk1
