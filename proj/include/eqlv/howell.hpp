#pragma once

#include <vector>

#include "eqlv/gring.hpp"

namespace eqlv {

// Canonical triangular (Howell-style) form for submodules of (Z/p^n)^w.
// Rows are kept with unit-normalized pivots p^v and entries above pivots
// reduced mod p^v; annihilator rows generated by zero-divisor pivots are
// retained so that membership is decidable by reduction alone.
class HowellForm {
  public:
    HowellForm(std::vector<std::vector<long>> rows, long p, long n);

    const std::vector<std::vector<long>>& rows() const { return rows_; }
    long modulus() const { return pn_; }

    bool contains(std::vector<long> v) const;
    bool operator==(const HowellForm& o) const { return pn_ == o.pn_ && rows_ == o.rows_; }

  private:
    std::vector<std::vector<long>> rows_;  // canonical, sorted by pivot column
    std::vector<int> pivot_col_;
    std::vector<long> pivot_val_;  // p^v at the pivot
    long p_, n_, pn_;
};

}  // namespace eqlv
