#include "aglab/report.hpp"

#include <sstream>
#include <stdexcept>

namespace aglab {

using nlohmann::ordered_json;

namespace {

ordered_json counterexample_to_json(const CheckCounterexample& cx) {
    ordered_json j;
    j["magma"] = format_cayley_table(cx.magma);
    ordered_json sets = ordered_json::array();
    for (const auto& s : cx.sets) sets.push_back(format_ifs(s));
    j["sets"] = std::move(sets);
    j["detail"] = cx.detail;
    return j;
}

CheckCounterexample counterexample_from_json(const ordered_json& j) {
    CheckCounterexample cx{parse_cayley_table_text(j.at("magma").get<std::string>()),
                           {},
                           j.at("detail").get<std::string>()};
    for (const auto& s : j.at("sets")) cx.sets.push_back(parse_ifs(s.get<std::string>()));
    return cx;
}

Verdict verdict_from_name(const std::string& name) {
    if (name == "pass") return Verdict::Pass;
    if (name == "fail") return Verdict::Fail;
    if (name == "skipped") return Verdict::Skipped;
    throw std::invalid_argument("unknown verdict: " + name);
}

} // namespace

ordered_json report_to_json(const TheoremReport& report) {
    ordered_json checks = ordered_json::object();
    for (const auto& [id, r] : report.entries) {
        ordered_json e;
        e["verdict"] = std::string(verdict_name(r.verdict));
        e["instances_checked"] = r.instances_checked;
        e["elapsed_ms"] = r.elapsed_ms;
        if (r.counterexample) e["counterexample"] = counterexample_to_json(*r.counterexample);
        checks[std::string(check_id_name(id))] = std::move(e);
    }
    ordered_json j;
    j["checks"] = std::move(checks);
    return j;
}

TheoremReport report_from_json(const ordered_json& j) {
    TheoremReport report;
    for (const auto& [name, e] : j.at("checks").items()) {
        auto id = check_id_from_name(name);
        if (!id) throw std::invalid_argument("unknown check name: " + name);
        CheckResult r;
        r.verdict = verdict_from_name(e.at("verdict").get<std::string>());
        r.instances_checked = e.at("instances_checked").get<std::uint64_t>();
        r.elapsed_ms = e.at("elapsed_ms").get<std::int64_t>();
        if (e.contains("counterexample"))
            r.counterexample = counterexample_from_json(e.at("counterexample"));
        report.entries.emplace_back(*id, std::move(r));
    }
    return report;
}

std::string report_to_string(const TheoremReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

TheoremReport report_from_string(const std::string& text) {
    return report_from_json(ordered_json::parse(text));
}

ordered_json scenarios_to_json(const std::vector<ScenarioResult>& scenarios) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : scenarios) {
        ordered_json e;
        e["name"] = s.name;
        e["magma"] = s.magma_name;
        e["pass"] = s.pass;
        ordered_json claims = ordered_json::array();
        for (const auto& c : s.claims) {
            ordered_json cj;
            cj["text"] = c.text;
            cj["holds"] = c.holds;
            claims.push_back(std::move(cj));
        }
        e["claims"] = std::move(claims);
        if (!s.note.empty()) e["note"] = s.note;
        ordered_json sets = ordered_json::array();
        for (const auto& a : s.sets) sets.push_back(format_ifs(a));
        e["sets"] = std::move(sets);
        arr.push_back(std::move(e));
    }
    ordered_json j;
    j["scenarios"] = std::move(arr);
    return j;
}

ordered_json stats_to_json(const EnumerationStats& stats) {
    ordered_json j;
    j["tables_visited"] = stats.tables_visited;
    j["magmas_emitted"] = stats.magmas_emitted;
    j["elapsed_ms"] = stats.elapsed_ms;
    return j;
}

namespace {

void render_counterexample(std::ostringstream& os, const CheckCounterexample& cx) {
    os << "    " << cx.detail << "\n";
    std::istringstream table(format_cayley_table(cx.magma));
    for (std::string line; std::getline(table, line);) os << "      " << line << "\n";
    for (size_t i = 0; i < cx.sets.size(); ++i) {
        os << "      set " << i + 1 << ":\n";
        std::istringstream body(format_ifs(cx.sets[i]));
        for (std::string line; std::getline(body, line);) os << "        " << line << "\n";
    }
}

} // namespace

std::string render_report_text(const TheoremReport& report) {
    std::ostringstream os;
    int pass = 0, fail = 0, skipped = 0;
    for (const auto& [id, r] : report.entries) {
        os << "  ";
        std::string name(check_id_name(id));
        os << name << std::string(name.size() < 28 ? 28 - name.size() : 1, ' ');
        os << verdict_name(r.verdict) << "  " << r.instances_checked << " instances, "
           << r.elapsed_ms << " ms\n";
        switch (r.verdict) {
            case Verdict::Pass: ++pass; break;
            case Verdict::Fail: ++fail; break;
            case Verdict::Skipped: ++skipped; break;
        }
        if (r.counterexample) render_counterexample(os, *r.counterexample);
    }
    os << report.entries.size() << " checks: " << pass << " pass, " << fail << " fail, "
       << skipped << " skipped\n";
    return os.str();
}

std::string render_scenarios_text(const std::vector<ScenarioResult>& scenarios) {
    std::ostringstream os;
    int pass = 0;
    for (const auto& s : scenarios) {
        os << "scenario " << s.name << " (on " << s.magma_name << "): "
           << (s.pass ? "pass" : "FAIL") << "\n";
        for (const auto& c : s.claims)
            os << "  [" << (c.holds ? "ok" : "NO") << "] " << c.text << "\n";
        if (!s.note.empty()) os << "  note: " << s.note << "\n";
        if (s.pass) ++pass;
    }
    os << pass << "/" << scenarios.size() << " scenarios hold as documented\n";
    return os.str();
}

} // namespace aglab
