#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "tcb/tables.hpp"
#include "tcb/zcl.hpp"

using namespace tcb::report;
using nlohmann::json;

TEST_CASE("ratio formatting rounds half to even") {
    CHECK(ratio_decimal(Ratio{524, 510}, 4) == "1.0275");
    CHECK(ratio_decimal(Ratio{524, 510}, 3) == "1.027");
    CHECK(ratio_decimal(Ratio{9016, 8190}, 4) == "1.1009");
    CHECK(ratio_decimal(Ratio{1, 2}, 0) == "0");   // ties to even
    CHECK(ratio_decimal(Ratio{3, 2}, 0) == "2");
    CHECK(ratio_decimal(Ratio{1, 8}, 2) == "0.12");
    CHECK(ratio_decimal(Ratio{3, 8}, 2) == "0.38");
    CHECK(ratio_decimal(Ratio{7, 1}, 2) == "7.00");
    CHECK(ratio_less(Ratio{1, 3}, Ratio{2, 5}));
    CHECK_FALSE(ratio_less(Ratio{2, 5}, Ratio{1, 3}));
}

TEST_CASE("csv rows named in the interface") {
    std::string t2 = gen_table(2, Format::csv);
    CHECK(t2.find("37,222,208,*\n") != std::string::npos);
    CHECK(t2.find("32,192,152,\n") != std::string::npos);

    std::string t5 = gen_table(5, Format::csv);
    CHECK(t5.find("10,2,1,1512,9016,8190,1.1009\n") != std::string::npos);

    std::string t4 = gen_table(4, Format::csv);
    CHECK(t4.find("13,12,111011000100\n") != std::string::npos);

    std::string t3 = gen_table(3, Format::csv);
    CHECK(t3.find("3980-4095,1,1.2908,1.2908\n") != std::string::npos);
}

TEST_CASE("rendering is deterministic") {
    for (int id : {3, 4, 5}) {
        for (Format f : {Format::csv, Format::md, Format::json}) {
            CHECK(gen_table(id, f) == gen_table(id, f));
        }
    }
}

TEST_CASE("json tables round-trip") {
    for (int id : {2, 3, 4, 5}) {
        std::string doc = gen_table(id, Format::json);
        json parsed = json::parse(doc);
        CHECK(parsed.dump(2) + "\n" == doc);
        CHECK(parsed.at("table") == id);
    }
}

TEST_CASE("table 4 columns") {
    auto rows = table4_rows();
    REQUIRE(rows.size() == 8);
    CHECK(rows.front().k == 9);
    CHECK(rows.front().beta == 6);
    CHECK(rows.front().B == "111000");
    CHECK(rows.back().k == 23);
    CHECK(rows.back().B == "11110100110");
}

TEST_CASE("table 5 structure") {
    auto rows = table5_rows();
    REQUIRE(rows.size() == 8);
    CHECK(rows[0].e == 6);
    CHECK(rows[0].m == 92);
    CHECK(rows[0].bp == 524);
    CHECK(rows[0].hstar == 510);
    CHECK_FALSE(rows[6].m.has_value());
    CHECK(rows[6].e == 22);
    CHECK(ratio_decimal(rows[6].ratio, 4) == "1.1235");
    CHECK(ratio_decimal(rows[7].ratio, 6) == "1.124994");
    // The hstar column is the cohomology bound at 3*2^e.
    for (const auto& row : rows) {
        if (row.hstar)
            CHECK(*row.hstar == tcb::zcl::zcl_bound(3, int64_t{3} << row.e).bound);
    }
}

TEST_CASE("unknown id and format are rejected") {
    CHECK_THROWS_AS(gen_table(1, Format::csv), std::invalid_argument);
    CHECK_THROWS_AS(gen_table(6, Format::csv), std::invalid_argument);
    CHECK_THROWS_AS(parse_format("tsv"), std::invalid_argument);
    CHECK(parse_format("md") == Format::md);
}

TEST_CASE("markdown shape") {
    std::string md = gen_table(4, Format::md);
    CHECK(md.find("| k | beta | B |") == 0);
    CHECK(md.find("| --- | --- | --- |") != std::string::npos);
    CHECK(md.find("| 15 | 4 | 1110 |") != std::string::npos);
}
