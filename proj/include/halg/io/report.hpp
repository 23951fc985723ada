#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "halg/verify/outcome.hpp"

namespace halg {

inline constexpr const char* kVersion = "0.1.0";

struct ReportHeader {
    std::string command;
    std::string field = "prime 32003";
    std::optional<int> bound;          // --bound override
    std::map<std::string, int> bounds;  // N actually used, per ring
    std::vector<std::string> assertions;  // metadata echoed from the corpus
};

/// Computed numbers shown in the markdown tables.
struct ModuleSummary {
    std::string id;
    int depth = 0;
    int dim = 0;
    std::vector<std::int64_t> betti;
    std::vector<std::int64_t> bass;
};

inline std::string lower(Status s)
{
    std::string t = to_string(s);
    for (char& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return t;
}

inline nlohmann::json witness_value(std::int64_t v)
{
    if (v == kWitnessMinusInfinity) return "-inf";
    if (v == INT64_MAX) return "+inf";
    return v;
}

inline nlohmann::json report_json(const ReportHeader& h, const std::vector<CheckOutcome>& outcomes)
{
    using nlohmann::json;
    json doc;
    doc["version"] = kVersion;
    doc["command"] = h.command;
    doc["field"] = h.field;
    doc["bound"] = h.bound ? json(*h.bound) : json("s + dim R + 4");
    doc["bounds"] = h.bounds;
    doc["assertions"] = h.assertions;
    json entries = json::array();
    std::map<std::string, int> summary{{"pass", 0}, {"fail", 0}, {"skip", 0}, {"unknown", 0}};
    for (const auto& o : outcomes) {
        json e;
        e["module"] = o.module_id;
        e["check"] = o.check;
        e["status"] = lower(o.status);
        e["window"] = o.window_lo <= o.window_hi ? json::array({o.window_lo, o.window_hi}) : json(nullptr);
        json w = json::array();
        for (const auto& x : o.witnesses)
            w.push_back({{"index", x.index}, {"lhs", witness_value(x.lhs)}, {"rhs", witness_value(x.rhs)}, {"label", x.label}});
        e["witnesses"] = w;
        e["notes"] = o.notes;
        if (!o.reason.empty()) e["reason"] = o.reason;
        if (!o.verdict.empty()) e["verdict"] = o.verdict;
        entries.push_back(std::move(e));
        ++summary[lower(o.status)];
    }
    doc["entries"] = entries;
    doc["summary"] = summary;
    return doc;
}

inline std::string write_report_json(const ReportHeader& h, const std::vector<CheckOutcome>& outcomes)
{
    return report_json(h, outcomes).dump(2) + "\n";
}

inline std::string write_report_markdown(const ReportHeader& h, const std::vector<CheckOutcome>& outcomes,
                                         const std::vector<ModuleSummary>& modules = {})
{
    auto num = [](std::int64_t v) {
        if (v == kWitnessMinusInfinity) return std::string("-∞");
        if (v == INT64_MAX) return std::string("+∞");
        return std::to_string(v);
    };
    auto list = [](const std::vector<std::int64_t>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
        return s;
    };
    std::string s = "# halg report\n\n";
    s += "- command: `" + h.command + "`\n- version: " + kVersion + "\n- field: " + h.field + "\n";
    s += "- bound N: " + (h.bound ? std::to_string(*h.bound) : std::string("s + dim R + 4")) + "\n";
    for (const auto& [r, n] : h.bounds) s += "  - " + r + ": N = " + std::to_string(n) + "\n";
    if (!h.assertions.empty()) {
        s += "\n## Asserted metadata (not computed)\n\n";
        for (const auto& a : h.assertions) s += "- " + a + "\n";
    }
    if (!modules.empty()) {
        s += "\n## Modules\n\n| module | depth | dim | betti | bass |\n|---|---|---|---|---|\n";
        for (const auto& m : modules)
            s += "| " + m.id + " | " + (m.depth == INT_MAX ? "+∞" : std::to_string(m.depth)) + " | " +
                 (m.dim == INT_MIN ? "-∞" : std::to_string(m.dim)) + " | " + list(m.betti) + " | " + list(m.bass) + " |\n";
    }
    std::map<std::string, int> summary{{"pass", 0}, {"fail", 0}, {"skip", 0}, {"unknown", 0}};
    s += "\n## Checks\n\n| module | check | status | window | detail |\n|---|---|---|---|---|\n";
    for (const auto& o : outcomes) {
        ++summary[lower(o.status)];
        std::string detail = o.verdict.empty() ? o.reason : o.verdict + (o.reason.empty() ? "" : ": " + o.reason);
        if (o.status == Status::fail && !o.witnesses.empty()) {
            const auto& w = o.witnesses.front();
            detail += (detail.empty() ? "" : "; ") + w.label + " at " + std::to_string(w.index) + ": " + num(w.lhs) + " vs " + num(w.rhs);
        }
        const std::string window =
            o.window_lo <= o.window_hi ? "[" + std::to_string(o.window_lo) + ", " + std::to_string(o.window_hi) + "]" : "";
        s += "| " + o.module_id + " | " + o.check + " | " + to_string(o.status) + " | " + window + " | " + detail + " |\n";
    }
    s += "\n## Summary\n\n";
    for (const auto& [k, v] : summary) s += "- " + k + ": " + std::to_string(v) + "\n";
    return s;
}

}  // namespace halg
