#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "eqlv/rational.hpp"

namespace eqlv {

// A finite abelian group given by an explicit multiplication table.  Elements
// are referred to by index; each carries a canonical long label (for the unit
// group (Z/f)^x the label is the least positive residue).
class AbelianGroup {
  public:
    // (Z/f)^x with a cyclic decomposition computed from the prime
    // factorization of f.
    static std::shared_ptr<const AbelianGroup> units_mod(long f);

    int size() const { return static_cast<int>(labels_.size()); }
    int identity() const { return identity_; }
    int mul(int i, int j) const { return mul_[i][j]; }
    int inv(int i) const { return inv_[i]; }
    long label(int i) const { return labels_[i]; }
    // -1 if no element carries this label.
    int index_of_label(long lab) const;

    // f for unit groups, 0 for quotient groups.
    long modulus() const { return modulus_; }

    // Independent generators (element index, order); product of orders is the
    // group order.  Available for unit groups only.
    const std::vector<std::pair<int, long>>& decomposition() const { return decomp_; }
    long exponent() const;

    // Complex conjugation sigma_{f-1}; throws for f <= 2 or non-unit groups.
    int conjugation() const;
    bool has_conjugation() const;

    // Element indices of the subgroup generated by the given elements.
    std::vector<int> subgroup_generated(const std::vector<int>& gens) const;
    // All subgroups, each as a sorted index list (small groups only).
    std::vector<std::vector<int>> subgroups() const;

    int element_order(int i) const;

    struct Quotient {
        std::shared_ptr<const AbelianGroup> group;
        std::vector<int> coset_of;  // parent index -> quotient index
    };
    // G/H for a subgroup H (sorted element indices); quotient labels are the
    // least member label of each coset.
    Quotient quotient_by(const std::vector<int>& subgroup_elems) const;

  private:
    std::vector<long> labels_;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    int identity_ = 0;
    long modulus_ = 0;
    std::vector<std::pair<int, long>> decomp_;

    void build_tables();
};

using GroupPtr = std::shared_ptr<const AbelianGroup>;

GroupPtr unit_group(long f);

}  // namespace eqlv
