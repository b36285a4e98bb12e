#include "tcb/certificate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "tcb/bigint.hpp"

namespace tcb::bpcert {

using twoadic::binom_nu_raw;

namespace {

constexpr int64_t kInf = Valuation::kInf;

void require_params(const Certificate& c) {
    if (c.k < 3 || c.k > 30) throw std::domain_error("certificate: k out of range [3, 30]");
    if (c.r < 0 || c.r > 30) throw std::domain_error("certificate: r out of range [0, 30]");
    if (c.m < 1 || c.m > (int64_t{1} << 40))
        throw std::domain_error("certificate: m out of range [1, 2^40]");
    if (static_cast<int64_t>(c.a.size()) != c.k - 1)
        throw std::domain_error("certificate: expected k-1 entries in a");
    // The hyp budget (2^k-1)2^r bounds both the min-plus table and the
    // ell values 2^{r+t}.
    if ((__int128{(int64_t{1} << c.k) - 1} << c.r) > (int64_t{1} << 31))
        throw std::domain_error("certificate: (2^k-1)*2^r exceeds 2^31");
}

void require_sum(const Certificate& c) {
    require_params(c);
    if (!c.sum_ok())
        throw std::invalid_argument("certificate: sum(a) != km - (2^k-1)2^r");
}

// Minimum of sum(nu(C(a_i, m - s_i))) over s_i in [0, min(m, C)] with
// sum(s_i) <= C, where C = (2^k-1)2^r. Exact; when stop_below > 0 the
// scan may return any witnessed value < stop_below immediately.
int64_t hyp_min_impl(const Certificate& c, int64_t stop_below) {
    const int64_t C = (((int64_t{1} << c.k) - 1) << c.r);
    const int64_t L = std::min<int64_t>(c.m, C);

    if (c.k == 3) {
        // Two coordinates: prefix minima of the first against a scan of
        // the second.
        static thread_local std::vector<int64_t> prefmin;
        prefmin.resize(static_cast<size_t>(L) + 1);
        const uint64_t a0 = static_cast<uint64_t>(c.a[0]);
        const uint64_t a1 = static_cast<uint64_t>(c.a[1]);
        int64_t run = kInf;
        for (int64_t s = 0; s <= L; ++s) {
            run = std::min(run, binom_nu_raw(a0, c.m - s));
            prefmin[static_cast<size_t>(s)] = run;
        }
        int64_t best = kInf;
        for (int64_t s = 0; s <= L; ++s) {
            int64_t cap = std::min(L, C - s);
            int64_t cand = binom_nu_raw(a1, c.m - s) + prefmin[static_cast<size_t>(cap)];
            if (cand < best) {
                best = cand;
                if (stop_below > 0 && best < stop_below) return best;
            }
        }
        return std::min(best, kInf);
    }

    // General min-plus accumulation over the budget.
    std::vector<int64_t> g(static_cast<size_t>(C) + 1, 0);
    std::vector<int64_t> ng(static_cast<size_t>(C) + 1);
    std::vector<int64_t> v(static_cast<size_t>(L) + 1);
    for (int64_t i = 0; i < c.k - 1; ++i) {
        const uint64_t ai = static_cast<uint64_t>(c.a[static_cast<size_t>(i)]);
        for (int64_t s = 0; s <= L; ++s)
            v[static_cast<size_t>(s)] = binom_nu_raw(ai, c.m - s);
        for (int64_t budget = 0; budget <= C; ++budget) {
            int64_t best = kInf;
            int64_t smax = std::min(budget, L);
            for (int64_t s = 0; s <= smax; ++s)
                best = std::min(best, g[static_cast<size_t>(budget - s)] + v[static_cast<size_t>(s)]);
            ng[static_cast<size_t>(budget)] = best;
        }
        g.swap(ng);
    }
    return std::min(g[static_cast<size_t>(C)], kInf);
}

Valuation to_valuation(int64_t raw) {
    return raw >= kInf ? Valuation::infinite() : Valuation::finite(raw);
}

}  // namespace

int64_t Certificate::sum_target() const {
    return k * m - (((int64_t{1} << k) - 1) << r);
}

bool Certificate::sum_ok() const {
    int64_t sum = std::accumulate(a.begin(), a.end(), int64_t{0});
    return sum == sum_target();
}

int64_t Certificate::bound() const {
    return 2 * k * m - (((int64_t{1} << k) - 1) << (r + 1));
}

HypResult check_hyp(const Certificate& c) {
    require_sum(c);
    int64_t min = hyp_min_impl(c, 0);
    int64_t threshold = int64_t{1} << c.r;
    return HypResult{min >= threshold, to_valuation(min)};
}

bool hyp_passes(const Certificate& c) {
    require_sum(c);
    int64_t threshold = int64_t{1} << c.r;
    return hyp_min_impl(c, threshold) >= threshold;
}

ProdeResult check_prode(const Certificate& c) {
    require_sum(c);
    const int64_t threshold = int64_t{1} << c.r;
    const size_t n = static_cast<size_t>(c.k);

    // C(a_i, m - 2^{r+t}) for every factor index and every t.
    std::vector<std::vector<Bigint>> bin(n - 1, std::vector<Bigint>(n));
    for (size_t i = 0; i + 1 < n; ++i) {
        for (size_t t = 0; t < n; ++t) {
            int64_t ell = int64_t{1} << (c.r + static_cast<int64_t>(t));
            bin[i][t] = twoadic::binom_exact(
                static_cast<uint64_t>(c.a[i]), c.m - ell);
        }
    }

    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    Bigint sum;
    do {
        // The first k-1 entries pick the ell-tuple; the omitted value
        // is perm.back().
        Bigint term(1);
        bool zero = false;
        for (size_t i = 0; i + 1 < n; ++i) {
            const Bigint& f = bin[i][perm[i]];
            if (f.is_zero()) {
                zero = true;
                break;
            }
            term = term * f;
        }
        if (!zero) sum += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    Valuation nu_sum = twoadic::nu(sum);
    return ProdeResult{nu_sum == threshold, nu_sum};
}

bool prode_parity_ok(const Certificate& c) {
    require_sum(c);
    const int64_t threshold = int64_t{1} << c.r;
    const size_t n = static_cast<size_t>(c.k);

    std::vector<std::vector<int64_t>> val(n - 1, std::vector<int64_t>(n));
    for (size_t i = 0; i + 1 < n; ++i)
        for (size_t t = 0; t < n; ++t) {
            int64_t ell = int64_t{1} << (c.r + static_cast<int64_t>(t));
            val[i][t] = binom_nu_raw(static_cast<uint64_t>(c.a[i]), c.m - ell);
        }

    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), size_t{0});
    int minimal_terms = 0;
    do {
        int64_t total = 0;
        for (size_t i = 0; i + 1 < n; ++i) total += val[i][perm[i]];
        if (total == threshold) ++minimal_terms;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return (minimal_terms & 1) != 0;
}

ConditionReport verify(const Certificate& c) {
    require_params(c);
    ConditionReport report;
    report.sum_ok = c.sum_ok();
    if (!report.sum_ok) return report;

    HypResult hyp = check_hyp(c);
    report.hyp_ok = hyp.ok;
    report.hyp_min = hyp.min;

    ProdeResult prode = check_prode(c);
    report.prode_ok = prode.ok;
    report.prode_nu = prode.nu_sum;

    if (report.all_ok()) report.bound = c.bound();
    return report;
}

bool specres_applies(int64_t k, int64_t r, int64_t m) {
    if (k < 3 || k > 30 || m < 1 || m > (int64_t{1} << 40)) return false;
    if (r < 0 || r < k - 3) return false;
    if (m % (int64_t{1} << r) != 0) return false;
    int64_t A = m >> r;
    if (A < (int64_t{1} << (k - 1))) return false;
    if (r > 6) return false;  // alpha(A) <= 63 < 2^r + 2
    int64_t alphaA = twoadic::alpha(static_cast<uint64_t>(A));
    if (k == 3)
        return (A % 8 == 5 || A % 4 == 2) && alphaA == (int64_t{1} << r) + 2;
    return (A % 8 == 6 && alphaA == (int64_t{1} << r) + 2) ||
           (A % 8 == 3 && alphaA == (int64_t{1} << r) + 3);
}

Certificate specres_tuple(int64_t k, int64_t r, int64_t m) {
    if (!specres_applies(k, r, m))
        throw std::domain_error("specres_tuple: family does not apply to (k=" +
                                std::to_string(k) + ", r=" + std::to_string(r) +
                                ", m=" + std::to_string(m) + ")");
    Certificate c;
    c.k = k;
    c.r = r;
    c.m = m;
    int64_t mask = (int64_t{1} << k) - 1;
    if (k == 3) {
        c.a = {m, 2 * m - 7 * (int64_t{1} << r)};
    } else {
        for (int64_t i = 1; i <= k - 3; ++i)
            c.a.push_back(m - (mask << (r - i)));
        c.a.push_back(m);
        c.a.push_back(2 * m - (mask << (r - (k - 3))));
    }
    return c;
}

std::optional<std::pair<int64_t, int64_t>> specres_best(int64_t k, int64_t m) {
    for (int64_t r = 0; r <= 6; ++r) {
        if (specres_applies(k, r, m))
            return std::make_pair(r, specres_tuple(k, r, m).bound());
    }
    return std::nullopt;
}

int64_t prop31_m(int64_t k, int64_t r, int64_t d) {
    if (k < 3) throw std::domain_error("prop31_m: requires k >= 3");
    if (r < 1 || r > 5) throw std::domain_error("prop31_m: requires 1 <= r <= 5");
    if (d < 0 || d > (int64_t{1} << r))
        throw std::domain_error("prop31_m: requires 0 <= d <= 2^r");
    int64_t big = (int64_t{1} << ((int64_t{1} << r) + 1)) - 1;  // 2^{2^r+1} - 1
    if (d == 0) return (int64_t{1} << (r + 1)) * (2 * big + 1);  // 2^{r+1}(2^{2^r+2}-1)
    if (k == 3) return (int64_t{1} << (r + d + 2)) * big + (int64_t{1} << (r + 1));
    return (int64_t{1} << (r + d + 2)) * big + 3 * (int64_t{1} << r);
}

Thm33Params thm33_params(int64_t r, int64_t d) {
    if (r < 1 || r > 5) throw std::domain_error("thm33_params: requires 1 <= r <= 5");
    if (d < 0 || d > (int64_t{1} << r))
        throw std::domain_error("thm33_params: requires 0 <= d <= 2^r");
    int e = static_cast<int>((int64_t{1} << r) + r + d + 3);
    int64_t m = 3 * (int64_t{1} << (e - 1)) - (int64_t{1} << (r + 2 + d)) +
                (int64_t{1} << (r + 1));
    int64_t bound = 9 * (int64_t{1} << e) - 3 * (int64_t{1} << (r + 3 + d)) -
                    (int64_t{1} << (r + 1));
    return Thm33Params{e, m, bound};
}

std::pair<int64_t, int64_t> thm33_rd_for_e(int e) {
    for (int64_t r = 1; r <= 5; ++r) {
        int64_t d = e - ((int64_t{1} << r) + r + 3);
        if (d >= 0 && d <= (int64_t{1} << r)) return {r, d};
    }
    throw std::domain_error("thm33_rd_for_e: no (r, d) decomposition for e=" +
                            std::to_string(e));
}

}  // namespace tcb::bpcert
