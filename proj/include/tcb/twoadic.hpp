#pragma once
// twoadic.hpp - Exact 2-adic arithmetic.
//
// Valuations nu(x), binary digit sums alpha(x), binomial-coefficient
// valuations via the digit-sum identity
//     nu(C(m,n)) = alpha(n) + alpha(m-n) - alpha(m),
// exact big-integer binomials as a brute-force oracle, and the closed
// formula for nu(C((8B+2)2^t+1, (4B+2)2^t+d)).

#include <bit>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "tcb/bigint.hpp"

namespace tcb::twoadic {

// A 2-adic valuation: a nonnegative integer, or Infinite for the
// valuation of zero (vanishing binomials). Infinite compares greater
// than every finite value and absorbs addition.
class Valuation {
public:
    constexpr Valuation() : v_(0) {}

    static constexpr Valuation finite(int64_t v) { return Valuation(v); }
    static constexpr Valuation infinite() { return Valuation(kInf); }

    constexpr bool is_infinite() const { return v_ == kInf; }
    constexpr int64_t value() const {
        return v_;  // meaningful only when finite
    }

    friend constexpr Valuation operator+(Valuation a, Valuation b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        return finite(a.v_ + b.v_);
    }
    friend constexpr bool operator==(Valuation a, Valuation b) { return a.v_ == b.v_; }
    friend constexpr std::strong_ordering operator<=>(Valuation a, Valuation b) {
        return a.v_ <=> b.v_;
    }
    friend constexpr bool operator==(Valuation a, int64_t b) { return !a.is_infinite() && a.v_ == b; }
    friend constexpr std::strong_ordering operator<=>(Valuation a, int64_t b) {
        if (a.is_infinite()) return std::strong_ordering::greater;
        return a.v_ <=> b;
    }

    std::string str() const { return is_infinite() ? "inf" : std::to_string(v_); }

    // Sentinel used by implementation code that keeps valuations in
    // plain integers; safe to add a few of these without overflow.
    static constexpr int64_t kInf = INT64_MAX / 8;

private:
    constexpr explicit Valuation(int64_t v) : v_(v) {}
    int64_t v_;
};

// nu(x): exponent of 2 in x; Infinite for x = 0.
inline Valuation nu(uint64_t x) {
    if (x == 0) return Valuation::infinite();
    return Valuation::finite(std::countr_zero(x));
}

inline Valuation nu(const Bigint& x) {
    if (x.is_zero()) return Valuation::infinite();
    return Valuation::finite(x.trailing_zero_bits());
}

// alpha(x): number of 1's in the binary expansion of x.
inline int alpha(uint64_t x) { return std::popcount(x); }

// A binomial coefficient C(top, bottom); bottom < 0 or bottom > top
// denotes a vanishing binomial.
struct BinomQuery {
    uint64_t top = 0;
    int64_t bottom = 0;
};

// nu(C(top, bottom)) by the digit-sum identity; Infinite when the
// binomial vanishes. Never computes the coefficient itself.
inline Valuation binom_nu(uint64_t top, int64_t bottom) {
    if (bottom < 0 || static_cast<uint64_t>(bottom) > top) return Valuation::infinite();
    uint64_t b = static_cast<uint64_t>(bottom);
    return Valuation::finite(alpha(b) + alpha(top - b) - alpha(top));
}

inline Valuation binom_nu(const BinomQuery& q) { return binom_nu(q.top, q.bottom); }

// Raw integer variant for hot loops: returns Valuation::kInf for a
// vanishing binomial.
inline int64_t binom_nu_raw(uint64_t top, int64_t bottom) {
    if (bottom < 0 || static_cast<uint64_t>(bottom) > top) return Valuation::kInf;
    uint64_t b = static_cast<uint64_t>(bottom);
    return alpha(b) + alpha(top - b) - alpha(top);
}

class OracleLimitError : public std::runtime_error {
public:
    explicit OracleLimitError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr uint64_t kDefaultOracleLimit = uint64_t{1} << 20;

// Exact C(top, bottom); zero for a vanishing binomial. Tops above the
// limit are refused rather than silently ground through.
Bigint binom_exact(const BinomQuery& q, uint64_t top_limit = kDefaultOracleLimit);

inline Bigint binom_exact(uint64_t top, int64_t bottom,
                          uint64_t top_limit = kDefaultOracleLimit) {
    return binom_exact(BinomQuery{top, bottom}, top_limit);
}

// Closed formula for nu(C((8B+2)2^t+1, (4B+2)2^t+d)), valid for t >= 2
// and -2^t+1 <= d <= 2^t:
//     alpha(B) + t + 1 - nu(d(d-1))          d < 0
//     alpha(B)                               d = 0, 1
//     alpha(B) + t + nu(B) + 2 - nu(d(d-1))  2 <= d <= 2^t
Valuation lemma24_nu(int t, uint64_t B, int64_t d);

}  // namespace tcb::twoadic
