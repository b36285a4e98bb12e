#pragma once
// search.hpp - Certificate search.
//
// For fixed (m, k), finds the largest bound 2km - (2^k-1)2^{r+1}
// admitting a verified certificate: r ascends from 0 (the bound is
// strictly decreasing in r, so the first success wins) and for each r
// the a-tuples with the required sum are enumerated lexicographically,
// cheap valuation checks before exact big-integer sums. Naturality
// (best over m' <= m applies to m) is a running max over the scan.

#include <cstdint>
#include <optional>
#include <vector>

#include "tcb/certificate.hpp"

namespace tcb::search {

struct SearchConfig {
    // Largest r tried; default: largest r with a positive bound.
    std::optional<int64_t> r_max;
    int64_t a_min = 1;
    // Upper end of the tuple box; default: 3m.
    std::optional<int64_t> a_max;
    // Enumerate nondecreasing tuples only (verify is permutation
    // invariant); the witness comes out nondecreasing.
    bool canonical_order = true;
};

struct SearchResult {
    std::optional<int64_t> best_bound;
    std::optional<bpcert::Certificate> witness;
    std::optional<int64_t> achieving_m;
    uint64_t tuples_examined = 0;
    uint64_t hyp_rejections = 0;
    uint64_t prode_rejections = 0;
};

// Best verified bound at m itself.
SearchResult best_bound_at(int64_t m, int64_t k, const SearchConfig& cfg = {});

// Running-max results for every m' = 1..m_hi; entry [m'-1] holds the
// best over all m'' <= m' with cumulative counters.
std::vector<SearchResult> running_scan(int64_t m_hi, int64_t k,
                                       const SearchConfig& cfg = {});

// max over m' <= m of best_bound_at(m', k), achieving_m recorded.
SearchResult running_max_bound(int64_t m, int64_t k, const SearchConfig& cfg = {});

// Bound for TC_3(P^{3*2^e}): running max over m <= 3*2^{e-1}, k = 3.
SearchResult threepower_bound(int e, const SearchConfig& cfg = {});

}  // namespace tcb::search
