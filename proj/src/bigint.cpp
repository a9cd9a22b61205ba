#include "legann/bigint.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace legann {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    neg_ = v < 0;
    // avoid UB on LLONG_MIN
    unsigned long long u = neg_ ? ~static_cast<unsigned long long>(v) + 1ULL
                                : static_cast<unsigned long long>(v);
    while (u != 0) {
        mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffULL));
        u >>= 32;
    }
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::uint64_t t = carry;
        if (i < a.size()) t += a[i];
        if (i < b.size()) t += b[i];
        r.push_back(static_cast<std::uint32_t>(t & 0xffffffffULL));
        carry = t >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size());
    std::int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        std::int64_t t = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (t < 0) {
            t += (1LL << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(t);
    }
    assert(borrow == 0);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.neg_ = !r.neg_;
    return r;
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (neg_ == o.neg_) {
        mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) {
            mag_.clear();
            neg_ = false;
        } else if (c > 0) {
            mag_ = sub_mag(mag_, o.mag_);
        } else {
            mag_ = sub_mag(o.mag_, mag_);
            neg_ = o.neg_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.is_zero() || b.is_zero()) return r;
    r.mag_.assign(a.mag_.size() + b.mag_.size(), 0);
    for (size_t i = 0; i < a.mag_.size(); ++i) {
        std::uint64_t carry = 0;
        for (size_t j = 0; j < b.mag_.size(); ++j) {
            std::uint64_t t = static_cast<std::uint64_t>(a.mag_[i]) * b.mag_[j] +
                              r.mag_[i + j] + carry;
            r.mag_[i + j] = static_cast<std::uint32_t>(t & 0xffffffffULL);
            carry = t >> 32;
        }
        r.mag_[i + b.mag_.size()] += static_cast<std::uint32_t>(carry);
    }
    r.neg_ = a.neg_ != b.neg_;
    r.trim();
    return r;
}

BigInt& BigInt::operator*=(const BigInt& o) {
    *this = *this * o;
    return *this;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.neg_ != b.neg_) return a.neg_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    return a.neg_ ? c > 0 : c < 0;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide by 10^9
        std::uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000ULL);
            rem = cur % 1000000000ULL;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int k = 0; k < 9; ++k) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_string(const std::string& text) {
    BigInt r;
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i >= text.size()) throw std::invalid_argument("BigInt: empty numeral");
    for (; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("BigInt: bad digit in numeral");
        // r = r*10 + d
        std::uint64_t carry = text[i] - '0';
        for (size_t j = 0; j < r.mag_.size(); ++j) {
            std::uint64_t t = static_cast<std::uint64_t>(r.mag_[j]) * 10 + carry;
            r.mag_[j] = static_cast<std::uint32_t>(t & 0xffffffffULL);
            carry = t >> 32;
        }
        if (carry) r.mag_.push_back(static_cast<std::uint32_t>(carry));
    }
    r.neg_ = neg;
    r.trim();
    return r;
}

bool BigInt::fits_ll() const {
    if (mag_.size() > 2) return false;
    unsigned long long u = 0;
    for (size_t i = mag_.size(); i-- > 0;) u = (u << 32) | mag_[i];
    return neg_ ? u <= 0x8000000000000000ULL : u <= 0x7fffffffffffffffULL;
}

long long BigInt::to_ll() const {
    unsigned long long u = 0;
    for (size_t i = 0; i < mag_.size() && i < 2; ++i)
        u |= static_cast<unsigned long long>(mag_[i]) << (32 * i);
    return neg_ ? -static_cast<long long>(u) : static_cast<long long>(u);
}

}  // namespace legann
