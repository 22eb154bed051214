#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "padk1/util.hpp"

namespace padk1 {

// Finite abelian group up to isomorphism: elementary divisor chain d1 | d2 | ...
struct AbelianInvariants {
    std::vector<i64> divisors;  // each > 1, ascending divisibility chain

    static AbelianInvariants from_prime_powers(std::vector<i64> pps);
    i64 order() const;
    bool trivial() const { return divisors.empty(); }
    AbelianInvariants torsion_part(i64 p, i64 v) const;   // A[p^v]
    AbelianInvariants quotient_part(i64 p, i64 v) const;  // A / p^v A
    std::vector<i64> prime_power_list() const;
    std::string str() const;
    bool operator==(const AbelianInvariants& o) const { return divisors == o.divisors; }
};

// multiset difference of prime-power invariants: inv(A + B) minus inv(B)
AbelianInvariants invariants_minus(const AbelianInvariants& sum, const AbelianInvariants& part);

struct Presentation {
    int ngens = 0;
    std::vector<std::vector<int>> relators;  // signed 1-based generator indices
};

Presentation parse_presentation(const std::string& text);  // "gens k" + one relator per line

struct ConjugacyData {
    std::vector<std::vector<i64>> classes;  // partition of element indices
    std::vector<i64> class_of;
    std::vector<i64> sizes;
    std::vector<i64> reps;
};

class Group {
  public:
    // table[i][j] = index of element i * element j; index 0 must be the identity
    explicit Group(std::vector<std::vector<i64>> table, std::string name = "");

    i64 order() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    i64 mul(i64 a, i64 b) const { return table_[a][b]; }
    i64 inv(i64 a) const { return inverse_[a]; }
    i64 conj(i64 g, i64 x) const { return mul(mul(x, g), inv(x)); }  // x g x^-1
    i64 elem_order(i64 a) const;
    i64 pow(i64 a, i64 k) const;
    bool is_abelian() const;
    bool is_p_group(i64 p) const;

    const ConjugacyData& classes() const;
    std::vector<i64> center() const;
    std::vector<i64> centralizer(i64 g) const;
    std::vector<i64> derived_subgroup() const;
    std::vector<i64> subgroup_closure(std::vector<i64> gens) const;

    // abelianization: invariants, the projection G -> quotient group, and the
    // quotient itself
    struct Abelianization {
        AbelianInvariants invariants;
        std::vector<i64> proj;  // element -> quotient element index
        std::shared_ptr<Group> quotient;
    };
    const Abelianization& abelianization() const;

    // invariants of an abelian group given by a subset closed under the table
    AbelianInvariants abelian_invariants_of(const std::vector<i64>& subgroup) const;

    std::vector<i64> p_regular_classes(i64 p) const;  // class indices
    std::optional<i64> central_order_p_element(i64 p) const;
    std::vector<i64> omega_set(i64 z) const;  // {g : g conjugate to z g}
    std::vector<i64> power_map_on_classes(i64 k) const;

    // quotient by a central subgroup <z>; returns quotient and projection
    struct CentralQuotient {
        std::shared_ptr<Group> quotient;
        std::vector<i64> proj;
        std::vector<i64> section;  // quotient element -> chosen preimage
    };
    CentralQuotient quotient_by_central(i64 z) const;

    // K-conjugacy bookkeeping for p-regular classes: representatives g_i with
    // N_i = {x : x g_i x^-1 = g_i^a, a in <q mod ord(g_i)>} and Z_i = C_G(g_i)
    struct KConjClass {
        i64 rep;
        std::vector<i64> fused_classes;  // ordinary class indices merged
        std::vector<i64> n_subgroup;
        std::vector<i64> z_subgroup;
    };
    std::vector<KConjClass> k_conjugacy_bookkeeping(i64 p, i64 q) const;

    // generator data when built from a presentation (element indices)
    std::vector<i64> generators;
    std::vector<std::string> generator_names;

    // type-erased per-group cache (homology data and character tables)
    std::shared_ptr<const void> aux_get(const std::string& key) const;
    void aux_set(const std::string& key, std::shared_ptr<const void> v) const;

  private:
    i64 n_;
    std::string name_;
    std::vector<std::vector<i64>> table_;
    std::vector<i64> inverse_;
    mutable std::optional<ConjugacyData> classes_;
    mutable std::shared_ptr<Abelianization> ab_;
    mutable std::mutex aux_mtx_;
    mutable std::map<std::string, std::shared_ptr<const void>> aux_;
};

using GroupPtr = std::shared_ptr<Group>;

GroupPtr group_from_table(std::vector<std::vector<i64>> table, std::string name = "");
GroupPtr group_from_presentation(const Presentation& pres, i64 bound = 4096,
                                 std::string name = "");
GroupPtr cyclic_group(i64 n);
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// catalog names: C<n>, products like C2xC4, and D4, Q8, S3, Heis3
GroupPtr catalog_group(const std::string& name);
std::vector<std::string> catalog_names();

}  // namespace padk1
