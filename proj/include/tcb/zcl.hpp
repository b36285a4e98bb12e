#pragma once
// zcl.hpp - The mod-2 cohomology lower bound zcl_k(P^n).
//
// zcl_k(P^n) = kn - max(2^{nu(n+1)} - 1,  k*n_t - (k-1)(2^t - 1))
// with n_t = n mod 2^t and the second term taken over every t >= 2
// whose two leading window bits (bits t-1 and t-2 of n) are both 1.
// Also the constancy intervals of that bound between 2-powers and the
// repeating binary block attached to the multiplicative order of 2.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tcb::zcl {

// 2^{nu(n+1)} - 1 won the max.
struct PowerTerm {
    int64_t value = 0;
};

// k*n_t - (k-1)(2^t - 1) won the max.
struct TTerm {
    int t = 0;
    int64_t n_t = 0;
};

struct ZclResult {
    int64_t k = 0;
    int64_t n = 0;
    int64_t bound = 0;
    std::variant<PowerTerm, TTerm> maximizer;
};

// The bound for TC_k(P^n) implied by mod-2 cohomology. Ties in the max
// resolve to the power term, then to the smallest t.
ZclResult zcl_bound(int64_t k, int64_t n);

// True iff zcl_bound(k, n) = (k-1)(2^e - 1) for every n in
// [floor((k-1)*2^e/k), 2^e - 1].
bool thm41_interval(int64_t k, int e);

// Multiplicative order of 2 mod k; k must be odd and >= 3.
int mult_order2(int64_t k);

// The repeating block of the binary expansion of floor((k-1)*2^t/k):
// beta = mult_order2(k), m_block = (k-1)(2^beta - 1)/k, B = binary
// expansion of m_block left-padded to beta bits.
struct BaseBlock {
    int64_t k = 0;
    int beta = 0;
    uint64_t m_block = 0;
    std::string B;
};

BaseBlock base_block(int64_t k);

// Binary expansion of floor((2^v*k - 1) * 2^{v+t} / (2^v*k)) as a bit
// string, empty for zero. Equals v leading 1's followed by the
// expansion of floor((k-1)*2^t/k), which is whole copies of B followed
// by a prefix of B.
std::string lemma42_expansion(int64_t k, int t, int v);

// Exploratory: with q = (2^beta - 1)/k, the t in [1, beta) where
// k*(q mod 2^t) >= 3*2^t - 1 fails. Reported, never asserted.
std::vector<int> strong_qt_violations(int64_t k);

}  // namespace tcb::zcl
