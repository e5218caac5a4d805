#include "skewfact/bigint.hpp"

#include "skewfact/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace skewfact {

BigUint::BigUint(uint64_t v) {
    if (v) limbs_.push_back(static_cast<uint32_t>(v));
    if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void BigUint::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

uint64_t BigUint::to_u64() const {
    if (!fits_u64()) throw std::overflow_error("BigUint::to_u64: value too large");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

BigUint& BigUint::operator+=(const BigUint& o) {
    if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<uint32_t>(s);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigUint& BigUint::operator-=(const BigUint& o) {
    if (*this < o) throw std::underflow_error("BigUint subtraction underflow");
    int64_t borrow = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                    (i < o.limbs_.size() ? static_cast<int64_t>(o.limbs_[i]) : 0);
        borrow = 0;
        if (d < 0) { d += (1LL << 32); borrow = 1; }
        limbs_[i] = static_cast<uint32_t>(d);
    }
    trim();
    return *this;
}

BigUint& BigUint::operator*=(uint64_t v) {
    *this = *this * BigUint(v);
    return *this;
}

BigUint BigUint::operator+(const BigUint& o) const { BigUint r = *this; r += o; return r; }
BigUint BigUint::operator-(const BigUint& o) const { BigUint r = *this; r -= o; return r; }

BigUint BigUint::operator*(const BigUint& o) const {
    if (is_zero() || o.is_zero()) return BigUint();
    BigUint r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] +
                           r.limbs_[i + j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        size_t k = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
            ++k;
        }
    }
    r.trim();
    return r;
}

bool BigUint::operator<(const BigUint& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
    for (size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
    }
    return false;
}

size_t BigUint::bit_length() const {
    if (limbs_.empty()) return 0;
    uint32_t top = limbs_.back();
    size_t bits = (limbs_.size() - 1) * 32;
    while (top) { ++bits; top >>= 1; }
    return bits;
}

void BigUint::shift_left_one() {
    uint32_t carry = 0;
    for (auto& limb : limbs_) {
        uint32_t next = limb >> 31;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

void BigUint::set_bit0(bool b) {
    if (b) {
        if (limbs_.empty()) limbs_.push_back(1);
        else limbs_[0] |= 1u;
    }
}

BigUint::DivMod BigUint::divmod(const BigUint& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("BigUint division by zero");
    DivMod out;
    if (*this < divisor) { out.rem = *this; return out; }
    // Binary long division; operand sizes in this library are tiny.
    size_t bits = bit_length();
    for (size_t i = bits; i-- > 0;) {
        out.rem.shift_left_one();
        out.rem.set_bit0((limbs_[i / 32] >> (i % 32)) & 1u);
        out.quot.shift_left_one();
        if (out.rem >= divisor) {
            out.rem -= divisor;
            out.quot.set_bit0(true);
        }
    }
    out.quot.trim();
    out.rem.trim();
    return out;
}

std::string BigUint::to_string() const {
    if (is_zero()) return "0";
    std::string digits;
    std::vector<uint32_t> work = limbs_;
    while (!work.empty()) {
        uint64_t rem = 0;
        for (size_t i = work.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | work[i];
            work[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    return std::string(digits.rbegin(), digits.rend());
}

BigUint BigUint::from_decimal(const std::string& s) {
    if (s.empty()) throw input_error("empty decimal string");
    BigUint r;
    for (char c : s) {
        if (c < '0' || c > '9') throw input_error("bad decimal digit in '" + s + "'");
        r *= 10;
        r += BigUint(static_cast<uint64_t>(c - '0'));
    }
    return r;
}

BigUint factorial(uint32_t n) {
    BigUint r(1);
    for (uint32_t i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace skewfact
