#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "tcb/twoadic.hpp"

using namespace tcb;
using namespace tcb::twoadic;

namespace {

// Independent carry count: simulate the base-2 addition of b and
// (a - b) bit by bit (Kummer's theorem route).
int kummer_carries(uint64_t a, uint64_t b) {
    uint64_t x = b, y = a - b;
    int carries = 0, carry = 0;
    for (int i = 0; i < 64; ++i) {
        int s = static_cast<int>((x >> i) & 1) + static_cast<int>((y >> i) & 1) + carry;
        carry = s >= 2 ? 1 : 0;
        carries += carry;
    }
    return carries;
}

}  // namespace

TEST_CASE("valuation ordering and saturation") {
    auto inf = Valuation::infinite();
    CHECK(inf.is_infinite());
    CHECK(inf > Valuation::finite(1'000'000));
    CHECK(inf == inf);
    CHECK((inf + Valuation::finite(5)).is_infinite());
    CHECK((Valuation::finite(2) + Valuation::finite(3)) == Valuation::finite(5));
    CHECK(Valuation::finite(3) < Valuation::finite(4));
    CHECK(Valuation::finite(3) >= 3);
    CHECK(inf > 1'000'000'000);
    CHECK(inf.str() == "inf");
    CHECK(Valuation::finite(7).str() == "7");
}

TEST_CASE("nu basics") {
    CHECK(nu(1) == 0);
    CHECK(nu(40) == 3);
    CHECK(nu(uint64_t{0}).is_infinite());
    CHECK(nu(uint64_t{1} << 40) == 40);
}

TEST_CASE("alpha basics") {
    CHECK(alpha(0) == 0);
    for (int t = 0; t < 64; ++t) CHECK(alpha(uint64_t{1} << t) == 1);
    CHECK(alpha(46) == 4);  // 101110
}

TEST_CASE("binom_nu examples") {
    CHECK(binom_nu(14, 10) == 0);
    CHECK(binom_nu(3287, 3058) == 5);
    CHECK(binom_nu(BinomQuery{5, 7}).is_infinite());
    CHECK(binom_nu(5855, 3034) == 3);
    CHECK(binom_nu(10, -1).is_infinite());
}

TEST_CASE("binom_exact examples and errors") {
    CHECK(binom_exact(4, 2) == Bigint(6));
    CHECK(binom_exact(123, 0) == Bigint(1));
    CHECK(binom_exact(14, 10) == Bigint(1001));
    CHECK(binom_exact(5, 7).is_zero());
    CHECK(binom_exact(5, -1).is_zero());
    CHECK_THROWS_AS(binom_exact(uint64_t{1} << 21, 3), OracleLimitError);
    // A raised limit admits larger tops: C(2^21, 3).
    uint64_t expect = uint64_t{2097152} * 2097151 * (2097150 / 6);
    CHECK(binom_exact(uint64_t{1} << 21, 3, uint64_t{1} << 22) == Bigint(expect));
    CHECK(binom_exact(60, 30).to_string() == "118264581564861424");
    // exercises the multi-chunk decimal path
    CHECK(binom_exact(100, 50).to_string() == "100891344545564193334812497256");
}

TEST_CASE("three-way agreement: digit-sum identity, exact oracle, carry count") {
    // Pascal's triangle rows up to 2000 with exact integers.
    std::vector<Bigint> row{Bigint(1)};
    for (uint64_t n = 0; n <= 2000; ++n) {
        if (n > 0) {
            row.push_back(Bigint(1));
            for (size_t j = row.size() - 2; j >= 1; --j) row[j] += row[j - 1];
        }
        for (uint64_t b = 0; b <= n; ++b) {
            int64_t by_alpha = binom_nu(n, static_cast<int64_t>(b)).value();
            Valuation by_oracle = nu(row[b]);
            REQUIRE(!by_oracle.is_infinite());
            if (by_alpha != by_oracle.value() || by_alpha != kummer_carries(n, b)) {
                CAPTURE(n);
                CAPTURE(b);
                REQUIRE(by_alpha == by_oracle.value());
                REQUIRE(by_alpha == kummer_carries(n, b));
            }
        }
    }
}

TEST_CASE("digit-sum identity alpha(x-1) = alpha(x) - 1 + nu(x)") {
    for (uint64_t x = 1; x <= 1'000'000; ++x) {
        if (alpha(x - 1) != alpha(x) - 1 + nu(x).value()) {
            CAPTURE(x);
            REQUIRE(alpha(x - 1) == alpha(x) - 1 + nu(x).value());
        }
    }
}

TEST_CASE("shifting the bottom off a 2^k boundary raises the valuation") {
    for (int k = 2; k <= 6; ++k) {
        for (uint64_t N = 2; N <= 64; ++N) {
            for (uint64_t M = 1; M < N; ++M) {
                Valuation base = binom_nu(N << k, static_cast<int64_t>(M << k));
                REQUIRE(!base.is_infinite());
                for (int64_t delta = 1; delta < (int64_t{1} << k); ++delta) {
                    Valuation shifted =
                        binom_nu(N << k, static_cast<int64_t>(M << k) + delta);
                    if (!(shifted > base)) {
                        CAPTURE(k);
                        CAPTURE(N);
                        CAPTURE(M);
                        CAPTURE(delta);
                        REQUIRE(shifted > base);
                    }
                }
            }
        }
    }
}

TEST_CASE("lemma24_nu examples") {
    CHECK(lemma24_nu(2, 1, 0) == 1);
    CHECK(lemma24_nu(2, 1, 1) == 1);
    // alpha(B) + t + 1 - nu(d(d-1)) = 1 + 2 + 1 - 1
    CHECK(lemma24_nu(2, 1, -1) == 3);
    CHECK(lemma24_nu(2, 1, -1) == binom_nu(41, 23));
    CHECK(lemma24_nu(3, 5, 1) == 2);
    CHECK(lemma24_nu(3, 5, 1) == binom_nu(337, 177));
    CHECK_THROWS_AS(lemma24_nu(1, 1, 0), std::domain_error);
    CHECK_THROWS_AS(lemma24_nu(3, 1, 9), std::domain_error);
    CHECK_THROWS_AS(lemma24_nu(3, 1, -8), std::domain_error);
}

TEST_CASE("lemma24_nu agrees with binom_nu on its whole domain") {
    for (int t = 2; t <= 6; ++t) {
        for (uint64_t B = 1; B <= 64; ++B) {
            uint64_t top = ((8 * B + 2) << t) + 1;
            for (int64_t d = -(int64_t{1} << t) + 1; d <= (int64_t{1} << t); ++d) {
                int64_t bottom = static_cast<int64_t>((4 * B + 2) << t) + d;
                Valuation expect = binom_nu(top, bottom);
                Valuation got = lemma24_nu(t, B, d);
                if (got != expect) {
                    CAPTURE(t);
                    CAPTURE(B);
                    CAPTURE(d);
                    REQUIRE(got == expect);
                }
            }
        }
    }
}

TEST_CASE("binomial valuation symmetry") {
    for (uint64_t a = 0; a <= 300; ++a)
        for (uint64_t b = 0; b <= a; ++b)
            REQUIRE(binom_nu(a, static_cast<int64_t>(b)) ==
                    binom_nu(a, static_cast<int64_t>(a - b)));
}
