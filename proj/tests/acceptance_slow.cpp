// Slow half of the acceptance gate: the searched bounds for
// TC_3(P^{3*2^e}) at e = 10 and 11. One running scan up to m = 3072
// serves both. Equality with the known bounds is expected; falling
// short fails, exceeding is reported.

#include <chrono>
#include <iostream>

#include "tcb/search.hpp"

int main() {
    auto t0 = std::chrono::steady_clock::now();
    auto scan = tcb::search::running_scan(3072, 3);
    auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "scan to m=3072 took " << secs << "s ("
              << scan.back().tuples_examined << " tuples, "
              << scan.back().hyp_rejections << " hyp rejections, "
              << scan.back().prode_rejections << " prode rejections)\n";

    const int64_t expect[2] = {9068, 18284};
    int failed = 0;
    for (int e = 10; e <= 11; ++e) {
        int64_t m_hi = int64_t{3} << (e - 1);
        const auto& res = scan[static_cast<size_t>(m_hi - 1)];
        int64_t got = res.best_bound.value_or(-1);
        int64_t want = expect[e - 10];
        bool ok = got >= want;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion 6 (slow): e=" << e << " bound "
                  << got << (got == want ? " matches " : ok ? " exceeds " : " falls short of ")
                  << want;
        if (res.witness)
            std::cout << " (witness m=" << res.witness->m << ", r=" << res.witness->r << ")";
        std::cout << "\n";
        if (!ok) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
