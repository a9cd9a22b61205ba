// schur.hpp
//
// The positive half of the skein algebra modelled on symmetric functions:
// finite combinations of partitions (the orthonormal Q-basis, matching the
// Schur basis) with Laurent coefficients in s.  Multiplication and the
// coproduct are transported through Littlewood-Richardson coefficients;
// the hook expansion writes each generator A_m in this basis.

#pragma once

#include <map>
#include <utility>

#include "legann/partition.hpp"

namespace legann {

class SchurVector {
public:
    SchurVector() = default;

    static SchurVector unit() { return basis(Partition()); }
    static SchurVector basis(const Partition& lambda) {
        SchurVector v;
        v.terms_.emplace(lambda, LaurentPoly(1));
        return v;
    }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Partition, LaurentPoly>& terms() const { return terms_; }
    LaurentPoly coefficient(const Partition& lambda) const;
    void add_term(const Partition& lambda, const LaurentPoly& c);

    SchurVector operator-() const;
    SchurVector& operator+=(const SchurVector& o);
    SchurVector& operator-=(const SchurVector& o);
    friend SchurVector operator+(SchurVector x, const SchurVector& y) { return x += y; }
    friend SchurVector operator-(SchurVector x, const SchurVector& y) { return x -= y; }
    friend SchurVector operator*(const SchurVector& x, const SchurVector& y);
    friend SchurVector operator*(const LaurentPoly& c, const SchurVector& x);

    friend bool operator==(const SchurVector&, const SchurVector&) = default;

private:
    std::map<Partition, LaurentPoly> terms_;
};

// A_m = sum over hooks (a|b) with a+b = m-1 of (-1)^b s^{a-b} Q_{(a+1,1^b)}.
SchurVector hook_expand_A(int m);

// A_lambda as a product of hook expansions; the empty partition is the unit.
SchurVector a_to_schur(const Partition& lambda);

// Orthonormal pairing: sum of products of matching coefficients.
LaurentPoly schur_inner(const SchurVector& f, const SchurVector& g);

using PartitionPair = std::pair<Partition, Partition>;

// Coproduct in the Q (x) Q basis: Q_lambda -> sum c^lambda_{mu,nu} Q_mu (x) Q_nu.
std::map<PartitionPair, LaurentPoly> schur_coproduct(const SchurVector& f);

// Componentwise product of tensors, used to test that the coproduct respects
// multiplication.
std::map<PartitionPair, LaurentPoly> tensor_mul(
    const std::map<PartitionPair, LaurentPoly>& x,
    const std::map<PartitionPair, LaurentPoly>& y);

}  // namespace legann
