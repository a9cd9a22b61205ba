// laurent.hpp
//
// The coefficient ring used throughout: sparse Laurent polynomials with
// BigInt coefficients in the three variables a, z, s, kept in canonical
// form (no zero terms), plus truncated power series in t over them.
//
// The substitution z = s - s^{-1} connects the z-side (ruling polynomials,
// skein coefficients) with the s-side (Schur basis coefficients).  It is
// implemented by exact division, never by passing to rational functions.

#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legann/bigint.hpp"

namespace legann {

struct NonUnitSubstitution : std::runtime_error {
    explicit NonUnitSubstitution(const std::string& what) : std::runtime_error(what) {}
};
struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};
struct PolyParseError : std::runtime_error {
    explicit PolyParseError(const std::string& what) : std::runtime_error(what) {}
};

struct Exponents {
    int a = 0;
    int z = 0;
    int s = 0;
    friend bool operator==(const Exponents&, const Exponents&) = default;
    friend bool operator<(const Exponents& x, const Exponents& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.z != y.z) return x.z < y.z;
        return x.s < y.s;
    }
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c) { add_term({}, BigInt(c)); }
    LaurentPoly(const BigInt& c) { add_term({}, c); }

    static LaurentPoly monomial(BigInt c, int ea = 0, int ez = 0, int es = 0) {
        LaurentPoly p;
        p.add_term({ea, ez, es}, std::move(c));
        return p;
    }
    static LaurentPoly var_a(int k = 1) { return monomial(BigInt(1), k, 0, 0); }
    static LaurentPoly var_z(int k = 1) { return monomial(BigInt(1), 0, k, 0); }
    static LaurentPoly var_s(int k = 1) { return monomial(BigInt(1), 0, 0, k); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, BigInt>& terms() const { return terms_; }
    void add_term(const Exponents& e, const BigInt& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    // Coefficient of var^k as a polynomial in the remaining variables.
    LaurentPoly coeff_of(char var, int k) const;
    std::optional<int> min_exp(char var) const;
    std::optional<int> max_exp(char var) const;
    bool uses(char var) const;

    // z := s - s^{-1}.  Requires a pure (a,z) polynomial; negative powers of z
    // are resolved by exact division and NonUnitSubstitution is thrown if the
    // image is not a Laurent polynomial in s.
    LaurentPoly subst_z() const;

    // Terms grouped by a-power (descending), inner terms by (z asc, s asc),
    // e.g.  a^-4*(2 + 3*z^2 + z^4) + a^-6*(3*z^2 + z^4).
    std::string to_string() const;
    static LaurentPoly parse(const std::string& text);

private:
    std::map<Exponents, BigInt> terms_;
};

// Power series in t truncated at order N: exact arithmetic mod t^{N+1}.
class TruncSeries {
public:
    explicit TruncSeries(int order) : coeffs_(order + 1) {}
    TruncSeries(int order, std::vector<LaurentPoly> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const LaurentPoly& operator[](int k) const { return coeffs_[k]; }
    LaurentPoly& operator[](int k) { return coeffs_[k]; }

    friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g);
    friend TruncSeries operator*(const TruncSeries& f, const TruncSeries& g);
    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    // Multiplicative inverse mod t^{N+1}; requires constant coefficient 1.
    TruncSeries inverse() const;

private:
    std::vector<LaurentPoly> coeffs_;
};

}  // namespace legann
