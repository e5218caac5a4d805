#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace skewfact {

// Unsigned arbitrary-precision integer, base 2^32 little-endian limbs.
// Group orders overflow 32 bits routinely and 64 bits for the larger
// alternating groups, so every order in the library is a BigUint.
class BigUint {
public:
    BigUint() = default;
    BigUint(uint64_t v);                       // NOLINT: implicit by design
    static BigUint from_decimal(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const;                   // throws if it does not fit

    std::string to_string() const;

    BigUint& operator+=(const BigUint& o);
    BigUint& operator-=(const BigUint& o);     // requires *this >= o
    BigUint& operator*=(uint64_t v);
    BigUint operator+(const BigUint& o) const;
    BigUint operator-(const BigUint& o) const;
    BigUint operator*(const BigUint& o) const;

    // Quotient and remainder; divisor must be nonzero.
    struct DivMod;
    DivMod divmod(const BigUint& divisor) const;

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigUint& o) const { return limbs_ != o.limbs_; }
    bool operator<(const BigUint& o) const;
    bool operator>(const BigUint& o) const { return o < *this; }
    bool operator<=(const BigUint& o) const { return !(o < *this); }
    bool operator>=(const BigUint& o) const { return !(*this < o); }

    size_t bit_length() const;
    void shift_left_one();
    void set_bit0(bool b);

private:
    std::vector<uint32_t> limbs_;              // canonical: no trailing zeros
    void trim();
    friend BigUint factorial(uint32_t n);
};

struct BigUint::DivMod {
    BigUint quot;
    BigUint rem;
};

BigUint factorial(uint32_t n);

} // namespace skewfact
