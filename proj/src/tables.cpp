#include "tcb/tables.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "tcb/certificate.hpp"
#include "tcb/search.hpp"
#include "tcb/zcl.hpp"

namespace tcb::report {

using nlohmann::json;

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "md") return Format::md;
    if (name == "json") return Format::json;
    throw std::invalid_argument("unknown format: " + name);
}

bool ratio_less(const Ratio& a, const Ratio& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

std::string ratio_decimal(const Ratio& r, int places) {
    if (r.den <= 0 || r.num < 0 || places < 0 || places > 18)
        throw std::domain_error("ratio_decimal: bad arguments");
    __int128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    __int128 scaled = static_cast<__int128>(r.num) * scale;
    __int128 q = scaled / r.den;
    __int128 rem = scaled % r.den;
    // round half to even
    if (2 * rem > r.den || (2 * rem == r.den && (q & 1))) ++q;

    uint64_t whole = static_cast<uint64_t>(q / scale);
    uint64_t frac = static_cast<uint64_t>(q % scale);
    std::string out = std::to_string(whole);
    if (places > 0) {
        std::string f = std::to_string(frac);
        out += "." + std::string(static_cast<size_t>(places) - f.size(), '0') + f;
    }
    return out;
}

std::vector<Table2Row> table2_rows() {
    auto scan = search::running_scan(63, 3);

    // Family bounds available at each m' <= 63.
    std::vector<int64_t> family(64, -1);
    for (int64_t m = 1; m <= 63; ++m)
        if (auto best = bpcert::specres_best(3, m)) family[static_cast<size_t>(m)] = best->second;

    std::vector<Table2Row> rows;
    for (int64_t m = 32; m <= 63; ++m) {
        Table2Row row;
        row.m = m;
        row.hstar = zcl::zcl_bound(3, 2 * m).bound;
        row.bp = scan[static_cast<size_t>(m - 1)].best_bound.value_or(0);
        for (int64_t mp = 1; mp <= m && !row.star; ++mp)
            row.star = family[static_cast<size_t>(mp)] == row.bp;
        rows.push_back(row);
    }
    return rows;
}

std::vector<Table3Row> table3_rows() {
    constexpr int64_t kHi = 4095;

    // Family running max from m = 1 (naturality carries bounds across
    // the lower range edge).
    std::vector<int64_t> runmax(static_cast<size_t>(kHi) + 1, -1);
    std::vector<int64_t> direct(static_cast<size_t>(kHi) + 1, -1);
    int64_t best = -1;
    for (int64_t m = 1; m <= kHi; ++m) {
        if (auto b = bpcert::specres_best(4, m)) {
            direct[static_cast<size_t>(m)] = b->second;
            best = std::max(best, b->second);
        }
        runmax[static_cast<size_t>(m)] = best;
    }

    const std::vector<std::pair<int64_t, int64_t>> ranges = {
        {2048, 2815}, {2816, 3071}, {3072, 3979}, {3980, 4095}};

    std::vector<Table3Row> rows;
    for (auto [lo, hi] : ranges) {
        Table3Row row;
        row.m_lo = lo;
        row.m_hi = hi;
        std::set<int64_t> bounds;
        bool have = false;
        for (int64_t m = lo; m <= hi; ++m) {
            if (direct[static_cast<size_t>(m)] >= 0) bounds.insert(direct[static_cast<size_t>(m)]);
            Ratio ratio{runmax[static_cast<size_t>(m)], zcl::zcl_bound(4, 2 * m).bound};
            if (!have) {
                row.min_ratio = row.max_ratio = ratio;
                have = true;
            } else {
                if (ratio_less(ratio, row.min_ratio)) row.min_ratio = ratio;
                if (ratio_less(row.max_ratio, ratio)) row.max_ratio = ratio;
            }
        }
        row.count = static_cast<int64_t>(bounds.size());
        rows.push_back(row);
    }
    return rows;
}

std::vector<Table4Row> table4_rows() {
    std::vector<Table4Row> rows;
    for (int64_t k = 9; k <= 23; k += 2) {
        zcl::BaseBlock block = zcl::base_block(k);
        rows.push_back(Table4Row{k, block.beta, block.B});
    }
    return rows;
}

std::vector<Table5Row> table5_rows() {
    std::vector<Table5Row> rows;
    auto make = [](int e, bool full) {
        auto [r, d] = bpcert::thm33_rd_for_e(e);
        bpcert::Thm33Params p = bpcert::thm33_params(r, d);
        int64_t hstar = 2 * ((int64_t{1} << (e + 2)) - 1);
        Table5Row row;
        row.e = e;
        row.r = r;
        row.d = d;
        row.ratio = Ratio{p.bound, hstar};
        if (full) {
            row.m = p.m;
            row.bp = p.bound;
            row.hstar = hstar;
        }
        return row;
    };
    for (int e = 6; e <= 11; ++e) rows.push_back(make(e, true));
    rows.push_back(make(22, false));
    rows.push_back(make(23, false));
    return rows;
}

namespace {

struct TableDoc {
    int id = 0;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> cells;  // already rendered
    json rows_json;
};

std::string opt_cell(const std::optional<int64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

TableDoc build_doc(int table_id) {
    TableDoc doc;
    doc.id = table_id;
    doc.rows_json = json::array();
    switch (table_id) {
        case 2: {
            doc.header = {"m", "hstar", "bp", "star"};
            for (const auto& r : table2_rows()) {
                doc.cells.push_back({std::to_string(r.m), std::to_string(r.hstar),
                                     std::to_string(r.bp), r.star ? "*" : ""});
                doc.rows_json.push_back(
                    json{{"m", r.m}, {"hstar", r.hstar}, {"bp", r.bp}, {"star", r.star}});
            }
            break;
        }
        case 3: {
            doc.header = {"range", "count", "min_ratio", "max_ratio"};
            for (const auto& r : table3_rows()) {
                std::string range = std::to_string(r.m_lo) + "-" + std::to_string(r.m_hi);
                std::string lo = ratio_decimal(r.min_ratio, 4);
                std::string hi = ratio_decimal(r.max_ratio, 4);
                doc.cells.push_back({range, std::to_string(r.count), lo, hi});
                doc.rows_json.push_back(json{{"range", range},
                                             {"count", r.count},
                                             {"min_ratio", lo},
                                             {"max_ratio", hi}});
            }
            break;
        }
        case 4: {
            doc.header = {"k", "beta", "B"};
            for (const auto& r : table4_rows()) {
                doc.cells.push_back({std::to_string(r.k), std::to_string(r.beta), r.B});
                doc.rows_json.push_back(json{{"k", r.k}, {"beta", r.beta}, {"B", r.B}});
            }
            break;
        }
        case 5: {
            doc.header = {"e", "r", "d", "m", "bp", "hstar", "ratio"};
            for (const auto& r : table5_rows()) {
                std::string ratio = ratio_decimal(r.ratio, 4);
                doc.cells.push_back({std::to_string(r.e), std::to_string(r.r),
                                     std::to_string(r.d), opt_cell(r.m), opt_cell(r.bp),
                                     opt_cell(r.hstar), ratio});
                json row{{"e", r.e}, {"r", r.r}, {"d", r.d}, {"ratio", ratio}};
                row["m"] = r.m ? json(*r.m) : json(nullptr);
                row["bp"] = r.bp ? json(*r.bp) : json(nullptr);
                row["hstar"] = r.hstar ? json(*r.hstar) : json(nullptr);
                doc.rows_json.push_back(row);
            }
            break;
        }
        default:
            throw std::invalid_argument("unknown table id: " + std::to_string(table_id));
    }
    return doc;
}

std::string render_csv(const TableDoc& doc) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (size_t i = 0; i < cells.size(); ++i) {
            if (i) out += ',';
            out += cells[i];
        }
        out += '\n';
    };
    line(doc.header);
    for (const auto& row : doc.cells) line(row);
    return out;
}

std::string render_md(const TableDoc& doc) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        out += '|';
        for (const auto& c : cells) {
            out += ' ';
            out += c;
            out += " |";
        }
        out += '\n';
    };
    line(doc.header);
    out += '|';
    for (size_t i = 0; i < doc.header.size(); ++i) out += " --- |";
    out += '\n';
    for (const auto& row : doc.cells) line(row);
    return out;
}

std::string render_json(const TableDoc& doc) {
    json j{{"table", doc.id}, {"rows", doc.rows_json}};
    return j.dump(2) + "\n";
}

}  // namespace

std::string gen_table(int table_id, Format format) {
    TableDoc doc = build_doc(table_id);
    switch (format) {
        case Format::csv:
            return render_csv(doc);
        case Format::md:
            return render_md(doc);
        case Format::json:
            return render_json(doc);
    }
    throw std::invalid_argument("unknown format");
}

}  // namespace tcb::report
