#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "aglab/enumerate.hpp"
#include "aglab/harness.hpp"
#include "aglab/report.hpp"

namespace {

using nlohmann::ordered_json;

int default_workers() {
    if (const char* env = std::getenv("AGLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

aglab::FiniteMagma load_table(const std::string& path) {
    if (path == "-") return aglab::parse_cayley_table(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return aglab::parse_cayley_table(in);
}

std::string witness_list(const aglab::FiniteMagma& m, bool intra) {
    std::ostringstream os;
    for (int a = 0; a < m.n; ++a) {
        if (a) os << " ";
        os << m.label(a) << ":";
        if (intra) {
            auto w = aglab::intra_regular_witness(m, a);
            if (w) os << "(" << m.label(w->x) << "," << m.label(w->y) << ")";
            else os << "-";
        } else {
            auto w = aglab::regular_witness(m, a);
            if (w) os << m.label(w->x);
            else os << "-";
        }
    }
    return os.str();
}

int cmd_check(const std::string& path, bool with_ideals, bool as_json) {
    auto m = load_table(path);
    bool li = aglab::is_left_invertive(m);
    auto ids = aglab::left_identities(m);

    const aglab::IdealKind kinds[] = {
        aglab::IdealKind::Subgroupoid,    aglab::IdealKind::Left,
        aglab::IdealKind::Right,          aglab::IdealKind::TwoSided,
        aglab::IdealKind::GeneralizedBi,  aglab::IdealKind::Bi,
        aglab::IdealKind::OneTwo,
    };

    if (as_json) {
        ordered_json j;
        j["order"] = m.n;
        ordered_json labels = ordered_json::array();
        for (int i = 0; i < m.n; ++i) labels.push_back(m.label(i));
        j["labels"] = std::move(labels);
        j["left_invertive"] = li;
        if (!li) {
            auto v = aglab::left_invertive_violation(m);
            j["violation"] = {(*v)[0], (*v)[1], (*v)[2]};
        }
        j["medial"] = aglab::is_medial(m);
        j["paramedial"] = aglab::is_paramedial(m);
        j["law4"] = aglab::satisfies_law4(m);
        j["left_identities"] = ids;
        j["regular"] = aglab::is_regular(m);
        j["intra_regular"] = aglab::is_intra_regular(m);
        j["band"] = aglab::is_ag_band(m);
        j["left_duo"] = aglab::is_left_duo(m);
        if (with_ideals) {
            ordered_json all;
            for (auto kind : kinds) {
                ordered_json masks = ordered_json::array();
                for (auto a : aglab::all_ideals(m, kind)) {
                    ordered_json members = ordered_json::array();
                    for (int i = 0; i < m.n; ++i)
                        if (a >> i & 1) members.push_back(i);
                    masks.push_back(std::move(members));
                }
                all[std::string(aglab::ideal_kind_name(kind))] = std::move(masks);
            }
            j["ideals"] = std::move(all);
        }
        std::cout << j.dump(2) << "\n";
        return li ? 0 : 1;
    }

    std::cout << aglab::format_cayley_table(m);
    std::cout << "left invertive: " << (li ? "yes" : "no");
    if (!li) {
        auto v = aglab::left_invertive_violation(m);
        std::cout << "  (fails at a=" << m.label((*v)[0]) << " b=" << m.label((*v)[1])
                  << " c=" << m.label((*v)[2]) << ")";
    }
    std::cout << "\n";
    std::cout << "medial: " << (aglab::is_medial(m) ? "yes" : "no") << "\n";
    std::cout << "paramedial: " << (aglab::is_paramedial(m) ? "yes" : "no") << "\n";
    std::cout << "a(bc) = b(ac): " << (aglab::satisfies_law4(m) ? "yes" : "no") << "\n";
    std::cout << "left identities:";
    if (ids.empty()) std::cout << " none";
    for (int e : ids) std::cout << " " << m.label(e);
    std::cout << "\n";
    std::cout << "regular: " << (aglab::is_regular(m) ? "yes" : "no") << "  ["
              << witness_list(m, false) << "]\n";
    std::cout << "intra-regular: " << (aglab::is_intra_regular(m) ? "yes" : "no") << "  ["
              << witness_list(m, true) << "]\n";
    std::cout << "band: " << (aglab::is_ag_band(m) ? "yes" : "no") << "\n";
    std::cout << "left duo: " << (aglab::is_left_duo(m) ? "yes" : "no") << "\n";
    if (with_ideals) {
        for (auto kind : kinds) {
            auto masks = aglab::all_ideals(m, kind);
            std::cout << aglab::ideal_kind_name(kind) << " (" << masks.size() << "):";
            for (auto a : masks) std::cout << " " << aglab::format_subset(m, a);
            std::cout << "\n";
        }
    }
    return li ? 0 : 1;
}

int cmd_enumerate(int order, bool count_only, bool need_li, bool up_to_iso,
                  bool with_stats, int workers, const std::string& out_path) {
    aglab::SearchConfig cfg;
    cfg.order = order;
    cfg.require_left_identity = need_li;
    cfg.up_to_isomorphism = up_to_iso;
    cfg.worker_count = workers;

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::invalid_argument("cannot open " + out_path);
        out = &file;
    }

    aglab::EnumerationStats stats;
    std::uint64_t count = 0;
    aglab::enumerate_ag_groupoids(
        cfg,
        [&](const aglab::FiniteMagma& m) {
            ++count;
            if (!count_only) *out << aglab::format_cayley_table(m) << "\n";
        },
        &stats);
    if (count_only) *out << count << "\n";
    if (with_stats) std::cerr << aglab::stats_to_json(stats).dump() << "\n";
    return 0;
}

int cmd_verify(int order_max, const std::string& grid_spec,
               const std::string& only_name, const std::string& report_path,
               bool as_json, int workers) {
    aglab::ValueGrid grid =
        grid_spec.empty() ? aglab::default_grid() : aglab::ValueGrid::parse(grid_spec);

    aglab::TheoremReport report;
    if (!only_name.empty()) {
        auto id = aglab::check_id_from_name(only_name);
        if (!id) throw std::invalid_argument("unknown check: " + only_name);
        auto magmas = aglab::standard_stream(order_max, workers);
        report.entries.emplace_back(*id, aglab::run_check(*id, magmas, grid));
    } else {
        report = aglab::run_all(order_max, grid, workers);
    }

    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) throw std::invalid_argument("cannot open " + report_path);
        out << aglab::report_to_string(report);
    }
    if (as_json) {
        std::cout << aglab::report_to_string(report);
    } else {
        std::cout << "orders 1.." << order_max << " plus bundled examples, grid {"
                  << grid.str() << "}\n";
        std::cout << aglab::render_report_text(report);
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_counterexamples(const std::string& only, bool as_json) {
    auto scenarios = aglab::run_scenarios();
    if (!only.empty()) {
        std::vector<aglab::ScenarioResult> filtered;
        for (auto& s : scenarios)
            if (s.name == only) filtered.push_back(std::move(s));
        if (filtered.empty()) throw std::invalid_argument("unknown scenario: " + only);
        scenarios = std::move(filtered);
    }
    bool ok = true;
    for (const auto& s : scenarios) ok = ok && s.pass;
    if (as_json)
        std::cout << aglab::scenarios_to_json(scenarios).dump(2) << "\n";
    else
        std::cout << aglab::render_scenarios_text(scenarios);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite AG-groupoid laboratory"};
    app.set_version_flag("--version", "aglab 0.1.0");
    app.require_subcommand(1);
    int workers = default_workers();

    auto* check = app.add_subcommand("check", "inspect a Cayley table file");
    std::string check_path;
    bool check_ideals = false, check_json = false;
    check->add_option("file", check_path, "table file, or - for stdin")->required();
    check->add_flag("--ideals", check_ideals, "list every crisp ideal of each kind");
    check->add_flag("--json", check_json, "JSON output");

    auto* enumerate = app.add_subcommand("enumerate", "generate AG-groupoids of one order");
    int order = 2;
    bool count_only = false, need_li = false, up_to_iso = false, with_stats = false;
    std::string out_path;
    enumerate->add_option("--order", order, "order to enumerate")->required();
    enumerate->add_flag("--count", count_only, "print only the number found");
    enumerate->add_flag("--left-identity", need_li, "keep tables with a left identity");
    enumerate->add_flag("--up-to-iso", up_to_iso, "one representative per isomorphism class");
    enumerate->add_flag("--stats", with_stats, "print search statistics to stderr");
    enumerate->add_option("-o,--output", out_path, "write tables to a file");
    enumerate->add_option("--workers", workers, "worker threads")->envname("AGLAB_THREADS");

    auto* verify = app.add_subcommand("verify", "run the theorem checks");
    int order_max = 3;
    std::string grid_spec, only_check, report_path;
    bool verify_json = false;
    verify->add_option("--order-max", order_max, "largest order to enumerate");
    verify->add_option("--grid", grid_spec, "comma-separated grade levels, e.g. 0,1/2,1");
    verify->add_option("--only", only_check, "run a single check by name");
    verify->add_option("--report", report_path, "write the JSON report to a file");
    verify->add_flag("--json", verify_json, "print the JSON report instead of text");
    verify->add_option("--workers", workers, "worker threads")->envname("AGLAB_THREADS");

    auto* cx = app.add_subcommand("counterexamples", "replay the bundled scenarios");
    std::string scenario;
    bool cx_json = false;
    cx->add_option("--scenario", scenario, "replay a single scenario by name");
    cx->add_flag("--json", cx_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) return cmd_check(check_path, check_ideals, check_json);
        if (*enumerate)
            return cmd_enumerate(order, count_only, need_li, up_to_iso, with_stats,
                                 workers, out_path);
        if (*verify)
            return cmd_verify(order_max, grid_spec, only_check, report_path, verify_json,
                              workers);
        if (*cx) return cmd_counterexamples(scenario, cx_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
