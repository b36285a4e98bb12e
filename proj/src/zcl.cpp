#include "tcb/zcl.hpp"

#include <bit>
#include <stdexcept>

#include "tcb/bigint.hpp"
#include "tcb/twoadic.hpp"

namespace tcb::zcl {

using twoadic::nu;

ZclResult zcl_bound(int64_t k, int64_t n) {
    if (k < 2 || k > (int64_t{1} << 20))
        throw std::domain_error("zcl_bound: requires 2 <= k <= 2^20");
    if (n < 1 || n > (int64_t{1} << 40))
        throw std::domain_error("zcl_bound: requires 1 <= n <= 2^40");

    uint64_t un = static_cast<uint64_t>(n);
    int64_t power = (int64_t{1} << nu(un + 1).value()) - 1;

    ZclResult res;
    res.k = k;
    res.n = n;
    res.maximizer = PowerTerm{power};
    int64_t best = power;

    int bits = 64 - std::countl_zero(un);
    for (int t = 2; t <= bits; ++t) {
        if (!((un >> (t - 1)) & 1) || !((un >> (t - 2)) & 1)) continue;
        int64_t n_t = static_cast<int64_t>(un & ((uint64_t{1} << t) - 1));
        int64_t term = k * n_t - (k - 1) * ((int64_t{1} << t) - 1);
        if (term > best) {
            best = term;
            res.maximizer = TTerm{t, n_t};
        }
    }
    res.bound = k * n - best;
    return res;
}

bool thm41_interval(int64_t k, int e) {
    if (k < 3) throw std::domain_error("thm41_interval: requires k >= 3");
    if (e < 2 || e > 40) throw std::domain_error("thm41_interval: requires 2 <= e <= 40");
    int64_t pow = int64_t{1} << e;
    int64_t value = (k - 1) * (pow - 1);
    for (int64_t n = (k - 1) * pow / k; n <= pow - 1; ++n) {
        if (zcl_bound(k, n).bound != value) return false;
    }
    return true;
}

int mult_order2(int64_t k) {
    if (k < 3 || k % 2 == 0 || k > (int64_t{1} << 31))
        throw std::domain_error("mult_order2: requires odd k in [3, 2^31]");
    int beta = 1;
    int64_t pow = 2 % k;
    while (pow != 1) {
        pow = (2 * pow) % k;
        ++beta;
    }
    return beta;
}

BaseBlock base_block(int64_t k) {
    int beta = mult_order2(k);
    if (beta > 63)
        throw std::domain_error("base_block: block of k=" + std::to_string(k) +
                                " needs " + std::to_string(beta) + " bits");
    // m < 2^beta fits, but the intermediate product needs 128 bits.
    unsigned __int128 ones = ((unsigned __int128){1} << beta) - 1;
    uint64_t m = static_cast<uint64_t>(
        static_cast<unsigned __int128>(k - 1) * ones / static_cast<unsigned __int128>(k));
    std::string bits(beta, '0');
    for (int i = 0; i < beta; ++i)
        if ((m >> (beta - 1 - i)) & 1) bits[i] = '1';
    return BaseBlock{k, beta, m, bits};
}

std::string lemma42_expansion(int64_t k, int t, int v) {
    if (k < 3 || k % 2 == 0 || k > (int64_t{1} << 31))
        throw std::domain_error("lemma42_expansion: requires odd k in [3, 2^31]");
    if (t < 0 || v < 0 || v + t > 90)
        throw std::domain_error("lemma42_expansion: requires t, v >= 0 with v + t <= 90");
    unsigned __int128 den = static_cast<unsigned __int128>(k) << v;
    unsigned __int128 num = (den - 1) << (v + t);
    unsigned __int128 q = num / den;
    std::string bits;
    while (q > 0) {
        bits.insert(bits.begin(), static_cast<char>('0' + (q & 1)));
        q >>= 1;
    }
    return bits;
}

std::vector<int> strong_qt_violations(int64_t k) {
    int beta = mult_order2(k);
    Bigint q = Bigint::low_ones(static_cast<unsigned>(beta));
    uint64_t rem = q.div_word(static_cast<uint64_t>(k));
    if (rem != 0)
        throw std::logic_error("strong_qt_violations: k does not divide 2^beta - 1");
    std::vector<int> violations;
    for (int t = 1; t < beta; ++t) {
        Bigint lhs = q.low_bits(static_cast<unsigned>(t));
        lhs.mul_word(static_cast<uint64_t>(k));
        // 3*2^t - 1 = (2^t - 1) + 2^t + 2^t
        Bigint rhs = Bigint::low_ones(static_cast<unsigned>(t));
        rhs += Bigint::pow2(static_cast<unsigned>(t));
        rhs += Bigint::pow2(static_cast<unsigned>(t));
        if (lhs < rhs) violations.push_back(t);
    }
    return violations;
}

}  // namespace tcb::zcl
