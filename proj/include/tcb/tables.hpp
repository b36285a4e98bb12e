#pragma once
// tables.hpp - Table generators and rendering (csv / md / json).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcb::report {

enum class Format { csv, md, json };

// Throws std::invalid_argument for anything but "csv", "md", "json".
Format parse_format(const std::string& name);

// Exact nonnegative rational, kept unreduced.
struct Ratio {
    int64_t num = 0;
    int64_t den = 1;
};

// Exact comparison by cross multiplication.
bool ratio_less(const Ratio& a, const Ratio& b);

// Decimal rendering with round-half-to-even at `places` digits.
std::string ratio_decimal(const Ratio& r, int places);

struct Table2Row {
    int64_t m = 0;
    int64_t hstar = 0;
    int64_t bp = 0;
    bool star = false;
};

struct Table3Row {
    int64_t m_lo = 0;
    int64_t m_hi = 0;
    int64_t count = 0;
    Ratio min_ratio;
    Ratio max_ratio;
};

struct Table4Row {
    int64_t k = 0;
    int beta = 0;
    std::string B;
};

struct Table5Row {
    int e = 0;
    int64_t r = 0;
    int64_t d = 0;
    // Unset on the ratio-only tail rows.
    std::optional<int64_t> m;
    std::optional<int64_t> bp;
    std::optional<int64_t> hstar;
    Ratio ratio;
};

// TC_3(P^{2m}) bounds for m = 32..63: cohomology column, searched BP
// column (naturality running max), and a star where the running max is
// matched by a closed-form family bound at some m' <= m.
std::vector<Table2Row> table2_rows();

// TC_4(P^{2m}) for m in [2048, 4095], split into the four ranges:
// count of distinct family bounds arising in the range, and the range
// of (family running max) / (cohomology bound) over every m in it.
std::vector<Table3Row> table3_rows();

// beta and the repeating binary block for odd k = 9..23.
std::vector<Table4Row> table4_rows();

// TC_3(P^{3*2^e}) closed-form bound vs cohomology for e = 6..11, plus
// ratio-only rows e = 22, 23.
std::vector<Table5Row> table5_rows();

// Renders table 2..5 in the given format. Unknown id throws
// std::invalid_argument.
std::string gen_table(int table_id, Format format);

}  // namespace tcb::report
