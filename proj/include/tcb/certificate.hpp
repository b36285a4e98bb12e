#pragma once
// certificate.hpp - Certificates for the BP lower bound on TC_k(P^{2m}).
//
// A candidate (k, r, m, a_1..a_{k-1}) with sum(a) = km - (2^k-1)2^r
// witnesses TC_k(P^{2m}) >= 2km - (2^k-1)2^{r+1} provided
//   hyp:   nu(prod C(a_i, j_i)) >= 2^r for all 0 <= j_i <= m with
//          sum(j_i) >= (k-1)m - (2^k-1)2^r, and
//   prode: nu(sum over ell of prod C(a_i, m - ell_i)) = 2^r, where ell
//          runs over ordered injective (k-1)-tuples from {2^{r+t}}.
// Also the closed-form families that produce such certificates.

#include <cstdint>
#include <optional>
#include <vector>

#include "tcb/twoadic.hpp"

namespace tcb::bpcert {

using twoadic::Valuation;

struct Certificate {
    int64_t k = 0;
    int64_t r = 0;
    int64_t m = 0;
    std::vector<int64_t> a;

    int64_t sum_target() const;  // km - (2^k-1)2^r
    bool sum_ok() const;
    int64_t bound() const;  // 2km - (2^k-1)2^{r+1}
};

struct HypResult {
    bool ok = false;
    Valuation min;  // minimum total valuation over the quantifier
};

struct ProdeResult {
    bool ok = false;
    Valuation nu_sum;  // valuation of the full sum
};

// The hyp condition. Throws std::invalid_argument on a sum mismatch.
// Evaluated by substituting s_i = m - j_i and running a min-plus
// accumulation over the budget sum(s_i) <= (2^k-1)2^r; vanishing
// binomials enter with Infinite valuation.
HypResult check_hyp(const Certificate& c);

// Flag-only variant for search inner loops: may stop as soon as some
// tuple drops the minimum below 2^r.
bool hyp_passes(const Certificate& c);

// The prode condition, summed with exact big integers.
// Throws std::invalid_argument on a sum mismatch; may throw
// twoadic::OracleLimitError for out-of-range tops.
ProdeResult check_prode(const Certificate& c);

// Parity form of prode: counts the ell-tuples whose summand has
// valuation exactly 2^r; an odd count is equivalent to prode holding
// whenever hyp does (every summand then has valuation >= 2^r).
bool prode_parity_ok(const Certificate& c);

struct ConditionReport {
    bool sum_ok = false;
    bool hyp_ok = false;
    std::optional<Valuation> hyp_min;
    bool prode_ok = false;
    std::optional<Valuation> prode_nu;
    std::optional<int64_t> bound;  // set iff all three conditions pass

    bool all_ok() const { return sum_ok && hyp_ok && prode_ok; }
};

// Runs the sum check, hyp, and prode; failures are report fields, not
// errors. hyp/prode are skipped (fields unset) when the sum fails.
ConditionReport verify(const Certificate& c);

// The closed-form family: k >= 3, r >= max(0, k-3), m = A*2^r with
// A >= 2^{k-1} and
//   k  = 3: A = 5 (mod 8), alpha(A) = 2^r+2, or A = 2 (mod 4), alpha(A) = 2^r+2
//   k >= 4: A = 6 (mod 8), alpha(A) = 2^r+2, or A = 3 (mod 8), alpha(A) = 2^r+3
bool specres_applies(int64_t k, int64_t r, int64_t m);

// The family's certificate:
//   k  = 3: a = (m, 2m - 7*2^r)
//   k >= 4: a_i = m - (2^k-1)2^{r-i} for i <= k-3, a_{k-2} = m,
//           a_{k-1} = 2m - (2^k-1)2^{r-(k-3)}
// Throws std::domain_error when specres_applies is false.
Certificate specres_tuple(int64_t k, int64_t r, int64_t m);

// Best family bound at m: the smallest applicable r (the bound is
// strictly decreasing in r), as (r, bound).
std::optional<std::pair<int64_t, int64_t>> specres_best(int64_t k, int64_t m);

// The m-values, parameterized by (r, d) with r >= 1 and 0 <= d <= 2^r,
// at which the family applies near the end of a 2-power interval:
//   d = 0:        m = 2^{r+1}(2^{2^r+2} - 1)
//   d > 0, k = 3: m = 2^{r+d+2}(2^{2^r+1} - 1) + 2^{r+1}
//   d > 0, k > 3: m = 2^{r+d+2}(2^{2^r+1} - 1) + 3*2^r
int64_t prop31_m(int64_t k, int64_t r, int64_t d);

struct Thm33Params {
    int e = 0;
    int64_t m = 0;
    int64_t bound = 0;
};

// For r >= 1, 0 <= d <= 2^r: e = 2^r + r + d + 3,
// m = 3*2^{e-1} - 2^{r+2+d} + 2^{r+1},
// bound = 9*2^e - 3*2^{r+3+d} - 2^{r+1} = 6m - 7*2^{r+1}.
Thm33Params thm33_params(int64_t r, int64_t d);

// Unique (r, d) with e = 2^r + r + d + 3, r >= 1, 0 <= d <= 2^r.
std::pair<int64_t, int64_t> thm33_rd_for_e(int e);

}  // namespace tcb::bpcert
