// bigint.hpp
//
// Signed arbitrary-precision integers: sign + base-2^32 magnitude.
// Only the operations the coefficient ring needs (add, sub, mul,
// comparison, decimal I/O); no division except by small constants
// used internally for printing.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace legann {

class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_string(const std::string& text);

    bool is_zero() const { return mag_.empty(); }
    bool is_one() const { return !neg_ && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return is_zero() ? 0 : (neg_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator<=(const BigInt& a, const BigInt& b) { return a < b || a == b; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return b <= a; }

    std::string to_string() const;

    // Value clamped into long long; only meaningful when the magnitude fits.
    long long to_ll() const;
    bool fits_ll() const;

private:
    bool neg_ = false;
    std::vector<std::uint32_t> mag_;  // little-endian limbs, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
};

}  // namespace legann
