// partition.hpp
//
// Integer partitions, contingency matrices, the bracket values <m>, the
// inner product on the Turaev basis computed by the contingency-matrix
// formula, and Littlewood-Richardson coefficients.

#pragma once

#include <string>
#include <vector>

#include "legann/laurent.hpp"

namespace legann {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    static Partition parse(const std::string& text);  // "2,1"; "-" is empty

    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[i]; }  // 0-based

    // m[k] = number of parts equal to k, for k = 1..largest part
    std::vector<int> multiplicities() const;
    bool contains(const Partition& mu) const;  // Young diagram containment
    Partition united(const Partition& other) const;  // multiset union of parts

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& x, const Partition& y) {
        return x.parts_ < y.parts_;
    }

private:
    std::vector<int> parts_;
};

// All partitions of n in reverse lexicographic order: (n), ..., (1^n).
std::vector<Partition> partitions_of(int n);

struct ContingencyMatrix {
    Partition row_sums;
    Partition col_sums;
    std::vector<std::vector<int>> entries;  // length(row_sums) x length(col_sums)
};

// All non-negative integer matrices with the given row and column sums.
// Empty list when the weights differ.
std::vector<ContingencyMatrix> contingency_matrices(const Partition& lambda,
                                                    const Partition& mu);

// <m>: the two-graded ruling count of a basic front paired against its
// reverse, as a polynomial in z; <0> = z^{-2} by convention.
LaurentPoly bracket(int m);

// Inner product of A_lambda and A_mu in the Turaev basis:
//   z^{2lk-l-k} * sum over contingency matrices of prod <b_ij>.
// Zero for different weights; 1 when both partitions are empty.
LaurentPoly turaev_inner(const Partition& lambda, const Partition& mu);

// Littlewood-Richardson coefficient c^lambda_{mu,nu}, computed by counting
// semistandard skew tableaux of shape lambda/mu and content nu whose reverse
// reading word is a lattice word.  Memoized; safe for concurrent callers.
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

}  // namespace legann
