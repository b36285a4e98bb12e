// tcbounds - lower bounds for the higher topological complexity of
// real projective spaces.
//
// Subcommands: zcl, verify, search, table, threepower, family.
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tcb/json_io.hpp"
#include "tcb/search.hpp"
#include "tcb/tables.hpp"
#include "tcb/zcl.hpp"

using nlohmann::json;

namespace {

int run(int argc, char** argv) {
    CLI::App app{"Lower bounds for higher topological complexity of real projective spaces"};
    app.require_subcommand(1);

    // zcl --k K --n N
    auto* zcl_cmd = app.add_subcommand("zcl", "Cohomology lower bound zcl_k(P^n)");
    int64_t zk = 0, zn = 0;
    zcl_cmd->add_option("--k", zk, "k >= 2")->required();
    zcl_cmd->add_option("--n", zn, "n >= 1")->required();

    // verify --cert FILE
    auto* verify_cmd = app.add_subcommand("verify", "Verify a certificate file");
    std::string cert_path;
    verify_cmd->add_option("--cert", cert_path, "certificate JSON file")->required();

    // search --k K --m M [--running-max] [--a-max N] [--r-max R]
    auto* search_cmd = app.add_subcommand("search", "Search certificates at (or up to) m");
    int64_t sk = 0, sm = 0;
    bool running = false;
    int64_t opt_a_max = -1, opt_r_max = -1;
    search_cmd->add_option("--k", sk, "k >= 3")->required();
    search_cmd->add_option("--m", sm, "m >= 1")->required();
    search_cmd->add_flag("--running-max", running, "best over all m' <= m");
    search_cmd->add_option("--a-max", opt_a_max, "tuple box upper end (default 3m)");
    search_cmd->add_option("--r-max", opt_r_max, "largest r tried");

    // table --id N --format F [--out FILE]
    auto* table_cmd = app.add_subcommand("table", "Generate a bundled table");
    int table_id = 0;
    std::string format_name = "csv", out_path;
    table_cmd->add_option("--id", table_id, "table id: 2, 3, 4 or 5")->required();
    table_cmd->add_option("--format", format_name, "csv, md or json");
    table_cmd->add_option("--out", out_path, "output file (default stdout)");

    // threepower --e E
    auto* three_cmd = app.add_subcommand("threepower", "Bound for TC_3(P^{3*2^e})");
    int three_e = 0;
    three_cmd->add_option("--e", three_e, "e >= 2")->required();

    // family specres|prop31|thm33
    auto* family_cmd = app.add_subcommand("family", "Closed-form certificate families");
    family_cmd->require_subcommand(1);
    auto* specres_cmd = family_cmd->add_subcommand("specres", "The certificate family tuple");
    int64_t fk = 0, fr = 0, fm = 0;
    specres_cmd->add_option("--k", fk)->required();
    specres_cmd->add_option("--r", fr)->required();
    specres_cmd->add_option("--m", fm)->required();
    auto* prop31_cmd = family_cmd->add_subcommand("prop31", "Family m near 2-power ends");
    int64_t pk = 0, pr = 0, pd = 0;
    prop31_cmd->add_option("--k", pk)->required();
    prop31_cmd->add_option("--r", pr)->required();
    prop31_cmd->add_option("--d", pd)->required();
    auto* thm33_cmd = family_cmd->add_subcommand("thm33", "(e, m, bound) for TC_3(P^{3*2^e})");
    int64_t tr = 0, td = 0;
    thm33_cmd->add_option("--r", tr)->required();
    thm33_cmd->add_option("--d", td)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*zcl_cmd) {
        std::cout << tcb::zcl::zcl_bound(zk, zn).bound << "\n";
        return 0;
    }

    if (*verify_cmd) {
        std::ifstream in(cert_path);
        if (!in) {
            std::cerr << "error: cannot open " << cert_path << "\n";
            return 2;
        }
        tcb::bpcert::Certificate cert;
        try {
            json doc = json::parse(in);
            cert = doc.get<tcb::bpcert::Certificate>();
        } catch (const json::exception& e) {
            std::cerr << "error: malformed certificate file: " << e.what() << "\n";
            return 2;
        }
        tcb::bpcert::ConditionReport report = tcb::bpcert::verify(cert);
        std::cout << json(report).dump(2) << "\n";
        return report.all_ok() ? 0 : 1;
    }

    if (*search_cmd) {
        tcb::search::SearchConfig cfg;
        if (opt_a_max >= 0) cfg.a_max = opt_a_max;
        if (opt_r_max >= 0) cfg.r_max = opt_r_max;
        tcb::search::SearchResult res = running
                                            ? tcb::search::running_max_bound(sm, sk, cfg)
                                            : tcb::search::best_bound_at(sm, sk, cfg);
        std::cout << json(res).dump(2) << "\n";
        return 0;
    }

    if (*table_cmd) {
        std::string doc = tcb::report::gen_table(table_id, tcb::report::parse_format(format_name));
        if (out_path.empty()) {
            std::cout << doc;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return 2;
            }
            out << doc;
        }
        return 0;
    }

    if (*three_cmd) {
        std::cout << json(tcb::search::threepower_bound(three_e)).dump(2) << "\n";
        return 0;
    }

    if (*specres_cmd) {
        std::cout << json(tcb::bpcert::specres_tuple(fk, fr, fm)).dump(2) << "\n";
        return 0;
    }
    if (*prop31_cmd) {
        std::cout << tcb::bpcert::prop31_m(pk, pr, pd) << "\n";
        return 0;
    }
    if (*thm33_cmd) {
        tcb::bpcert::Thm33Params p = tcb::bpcert::thm33_params(tr, td);
        std::cout << json{{"e", p.e}, {"m", p.m}, {"bound", p.bound}}.dump(2) << "\n";
        return 0;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
