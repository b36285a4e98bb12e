#include "tcb/twoadic.hpp"

namespace tcb::twoadic {

Bigint binom_exact(const BinomQuery& q, uint64_t top_limit) {
    if (q.top > top_limit)
        throw OracleLimitError("binom_exact: top " + std::to_string(q.top) +
                               " exceeds oracle limit " + std::to_string(top_limit));
    if (q.bottom < 0 || static_cast<uint64_t>(q.bottom) > q.top) return Bigint(0);

    uint64_t b = static_cast<uint64_t>(q.bottom);
    b = std::min(b, q.top - b);
    Bigint r(1);
    // C(top, i) / C(top, i-1) = (top - i + 1) / i, exact at every step.
    for (uint64_t i = 1; i <= b; ++i) {
        r.mul_word(q.top - i + 1);
        uint64_t rem = r.div_word(i);
        (void)rem;
    }
    return r;
}

Valuation lemma24_nu(int t, uint64_t B, int64_t d) {
    if (t < 2 || t > 30) throw std::domain_error("lemma24_nu: requires 2 <= t <= 30");
    int64_t lim = int64_t{1} << t;
    if (d < -lim + 1 || d > lim)
        throw std::domain_error("lemma24_nu: d outside [-2^t+1, 2^t]");

    int64_t aB = alpha(B);
    if (d == 0 || d == 1) return Valuation::finite(aB);

    // d(d-1) > 0 in both remaining cases.
    uint64_t dd1 = static_cast<uint64_t>(d < 0 ? (-d) * (-d + 1) : d * (d - 1));
    int64_t nu_dd1 = std::countr_zero(dd1);
    if (d < 0) return Valuation::finite(aB + t + 1 - nu_dd1);

    Valuation nuB = nu(B);
    if (nuB.is_infinite()) return Valuation::infinite();
    return Valuation::finite(aB + t + nuB.value() + 2 - nu_dd1);
}

}  // namespace tcb::twoadic
