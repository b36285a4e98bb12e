#include "tcb/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcb::search {

namespace {

struct Box {
    int64_t a_lo = 1;
    int64_t a_hi = 0;
    int64_t r_hi = -1;
};

Box resolve(int64_t m, int64_t k, const SearchConfig& cfg) {
    Box box;
    box.a_lo = cfg.a_min;
    box.a_hi = cfg.a_max.value_or(3 * m);
    if (box.a_lo < 1 || box.a_lo > box.a_hi)
        throw std::domain_error("search: empty a-box");
    __int128 mask = (int64_t{1} << k) - 1;
    int64_t r = 0;
    while (r <= 55 && __int128{2} * k * m - (mask << (r + 1)) > 0) ++r;
    box.r_hi = r - 1;  // largest r with positive bound
    if (cfg.r_max) box.r_hi = std::min(box.r_hi, *cfg.r_max);
    // keep the hyp budget (2^k-1)2^r within certificate limits
    box.r_hi = std::min(box.r_hi, 31 - k);
    return box;
}

// Nondecreasing tuples with the given sum inside [lo, hi], ascending
// lexicographic order. Visit returns true to stop.
template <typename Visit>
bool enum_canonical(std::vector<int64_t>& a, size_t idx, int64_t remaining,
                    int64_t lo, int64_t hi, Visit&& visit) {
    size_t left = a.size() - idx;
    if (left == 1) {
        if (remaining < lo || remaining > hi) return false;
        a[idx] = remaining;
        return visit();
    }
    int64_t from = std::max(lo, remaining - static_cast<int64_t>(left - 1) * hi);
    int64_t to = std::min(hi, remaining / static_cast<int64_t>(left));
    for (int64_t v = from; v <= to; ++v) {
        a[idx] = v;
        if (enum_canonical(a, idx + 1, remaining - v, v, hi, visit)) return true;
    }
    return false;
}

// All ordered tuples, ascending lexicographic order.
template <typename Visit>
bool enum_ordered(std::vector<int64_t>& a, size_t idx, int64_t remaining,
                  int64_t lo, int64_t hi, Visit&& visit) {
    size_t left = a.size() - idx;
    if (left == 1) {
        if (remaining < lo || remaining > hi) return false;
        a[idx] = remaining;
        return visit();
    }
    int64_t from = std::max(lo, remaining - static_cast<int64_t>(left - 1) * hi);
    int64_t to = std::min(hi, remaining - static_cast<int64_t>(left - 1) * lo);
    for (int64_t v = from; v <= to; ++v) {
        a[idx] = v;
        if (enum_ordered(a, idx + 1, remaining - v, lo, hi, visit)) return true;
    }
    return false;
}

}  // namespace

SearchResult best_bound_at(int64_t m, int64_t k, const SearchConfig& cfg) {
    if (m < 1) throw std::domain_error("best_bound_at: requires m >= 1");
    if (k < 3 || k > 16) throw std::domain_error("best_bound_at: requires 3 <= k <= 16");

    Box box = resolve(m, k, cfg);
    int64_t mask = (int64_t{1} << k) - 1;
    SearchResult result;

    bpcert::Certificate cert;
    cert.k = k;
    cert.m = m;
    cert.a.resize(static_cast<size_t>(k - 1));

    for (int64_t r = 0; r <= box.r_hi; ++r) {
        cert.r = r;
        int64_t target = k * m - (mask << r);
        if (target < (k - 1) * box.a_lo || target > (k - 1) * box.a_hi) continue;

        bool found = false;
        auto visit = [&]() {
            ++result.tuples_examined;
            if (!bpcert::hyp_passes(cert)) {
                ++result.hyp_rejections;
                return false;
            }
            if (!bpcert::prode_parity_ok(cert)) {
                ++result.prode_rejections;
                return false;
            }
            bpcert::ProdeResult exact = bpcert::check_prode(cert);
            if (!exact.ok)
                throw std::logic_error("search: parity and exact prode disagree");
            found = true;
            return true;
        };
        if (cfg.canonical_order)
            enum_canonical(cert.a, 0, target, box.a_lo, box.a_hi, visit);
        else
            enum_ordered(cert.a, 0, target, box.a_lo, box.a_hi, visit);

        if (found) {
            result.best_bound = cert.bound();
            result.witness = cert;
            result.achieving_m = m;
            return result;
        }
    }
    return result;
}

std::vector<SearchResult> running_scan(int64_t m_hi, int64_t k,
                                       const SearchConfig& cfg) {
    if (m_hi < 1) throw std::domain_error("running_scan: requires m >= 1");
    std::vector<SearchResult> out;
    out.reserve(static_cast<size_t>(m_hi));
    SearchResult running;
    for (int64_t m = 1; m <= m_hi; ++m) {
        SearchResult at_m = best_bound_at(m, k, cfg);
        running.tuples_examined += at_m.tuples_examined;
        running.hyp_rejections += at_m.hyp_rejections;
        running.prode_rejections += at_m.prode_rejections;
        if (at_m.best_bound &&
            (!running.best_bound || *at_m.best_bound > *running.best_bound)) {
            running.best_bound = at_m.best_bound;
            running.witness = at_m.witness;
            running.achieving_m = m;
        }
        out.push_back(running);
    }
    return out;
}

SearchResult running_max_bound(int64_t m, int64_t k, const SearchConfig& cfg) {
    return running_scan(m, k, cfg).back();
}

SearchResult threepower_bound(int e, const SearchConfig& cfg) {
    if (e < 2) throw std::domain_error("threepower_bound: requires e >= 2");
    return running_max_bound(int64_t{3} << (e - 1), 3, cfg);
}

}  // namespace tcb::search
