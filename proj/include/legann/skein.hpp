// skein.hpp
//
// The HOMFLY-PT class of a rounded annular front, expanded in the Turaev
// basis A_lambda A_{-mu}.  Evaluation rewrites the cyclic front word toward
// products of basic fronts: cusp-free words are normalized by cyclic braid
// moves until a doubled crossing resolves by the skein relation, cusped
// words shrink by cusp-crossing slides, swallowtail and zigzag removal,
// split unknot factors, and the cusp skein move whose correction terms are
// again HOMFLY instances of strictly smaller word area.  Results are
// memoized on the canonical cyclic form of the oriented word.

#pragma once

#include <map>
#include <string>

#include "legann/front.hpp"
#include "legann/laurent.hpp"
#include "legann/partition.hpp"

namespace legann {

struct NonTermination : std::runtime_error {
    explicit NonTermination(const std::string& what) : std::runtime_error(what) {}
};

struct TuraevMonomial {
    Partition pos;  // positive windings
    Partition neg;  // negative windings
    friend bool operator==(const TuraevMonomial&, const TuraevMonomial&) = default;
    friend bool operator<(const TuraevMonomial& x, const TuraevMonomial& y) {
        if (x.pos < y.pos) return true;
        if (y.pos < x.pos) return false;
        return x.neg < y.neg;
    }
    std::string to_string() const;
};

class SkeinElement {
public:
    SkeinElement() = default;
    static SkeinElement one() { return monomial(TuraevMonomial{}); }
    static SkeinElement monomial(TuraevMonomial m,
                                 LaurentPoly c = LaurentPoly(1));

    bool is_zero() const { return terms_.empty(); }
    const std::map<TuraevMonomial, LaurentPoly>& terms() const { return terms_; }
    void add_term(const TuraevMonomial& m, const LaurentPoly& c);

    SkeinElement& operator+=(const SkeinElement& o);
    SkeinElement& operator-=(const SkeinElement& o);
    friend SkeinElement operator+(SkeinElement x, const SkeinElement& y) { return x += y; }
    friend SkeinElement operator-(SkeinElement x, const SkeinElement& y) { return x -= y; }
    friend SkeinElement operator*(const SkeinElement& x, const SkeinElement& y);
    friend SkeinElement operator*(const LaurentPoly& c, const SkeinElement& x);

    friend bool operator==(const SkeinElement&, const SkeinElement&) = default;

private:
    std::map<TuraevMonomial, LaurentPoly> terms_;
};

// Regular-isotopy invariant of the rounded diagram, in the Turaev basis.
SkeinElement homfly_H(const OrientedFront& f);

// Writhe-normalized invariant: a^{-writhe} H.
SkeinElement homfly_P(const OrientedFront& f);

// Specialize each basis monomial to the inner product of its halves; the
// empty monomial pairs to 1 and mixed-weight monomials vanish.
LaurentPoly specialize_hat(const SkeinElement& e);

struct MainIdentityReport {
    LaurentPoly lhs;  // two-graded ruling polynomial
    LaurentPoly rhs;  // coefficient of a^{-tb} in the specialized invariant
    bool equal = false;
};
MainIdentityReport check_mainT(const OrientedFront& f);

struct BoundReport {
    int tb_plus_absr = 0;
    int neg_adeg = 0;  // -deg_a of the normalized invariant
    bool holds = false;
};
BoundReport check_bound(const OrientedFront& f);

}  // namespace legann
