#pragma once
// bigint.hpp - Minimal unsigned arbitrary-precision integer.
//
// Just enough for exact binomial coefficients and their sums/products:
// add, multiply (schoolbook), single-word multiply/divide, shifts by
// whole bit counts, trailing-zero count, decimal conversion.

#include <cstdint>
#include <string>
#include <vector>

namespace tcb {

class Bigint {
public:
    Bigint() = default;
    Bigint(uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    // 2^n - 1 (n low bits set); n = 0 gives zero.
    static Bigint low_ones(unsigned n);
    // 2^n
    static Bigint pow2(unsigned n);

    bool is_zero() const { return limbs_.empty(); }
    bool is_odd() const { return !limbs_.empty() && (limbs_[0] & 1u); }

    // Number of bits in the value (0 for zero).
    unsigned bit_length() const;
    bool bit(unsigned i) const;

    // Largest e with 2^e dividing the value. Precondition: nonzero.
    unsigned trailing_zero_bits() const;

    // Value mod 2^t.
    Bigint low_bits(unsigned t) const;

    Bigint& operator+=(const Bigint& other);
    Bigint operator+(const Bigint& other) const {
        Bigint r = *this;
        r += other;
        return r;
    }

    Bigint& mul_word(uint64_t w);
    // Divides in place, returns the remainder.
    uint64_t div_word(uint64_t w);

    Bigint operator*(const Bigint& other) const;

    int compare(const Bigint& other) const;
    bool operator==(const Bigint& other) const { return compare(other) == 0; }
    bool operator!=(const Bigint& other) const { return compare(other) != 0; }
    bool operator<(const Bigint& other) const { return compare(other) < 0; }
    bool operator<=(const Bigint& other) const { return compare(other) <= 0; }
    bool operator>(const Bigint& other) const { return compare(other) > 0; }
    bool operator>=(const Bigint& other) const { return compare(other) >= 0; }

    // Fits in uint64_t?
    bool fits_u64() const { return limbs_.size() <= 1; }
    uint64_t to_u64() const;  // precondition: fits_u64()

    std::string to_string() const;

private:
    // Little-endian 64-bit limbs, no trailing zero limbs.
    std::vector<uint64_t> limbs_;

    void trim();
};

}  // namespace tcb
