#include "splitcycle/report.hpp"

#include <json.hpp>

#include "splitcycle/error.hpp"
#include "splitcycle/text_format.hpp"

namespace splitcycle {

namespace {

struct Row {
    MethodId method;
    MethodOutcome outcome;
};

std::vector<Row> evaluate_all(const Profile& p, std::span<const MethodId> methods) {
    const auto m = margin_graph(p);
    std::vector<Row> rows;
    for (auto id : methods) {
        auto outcome = evaluate(id, p, m);
        if (outcome.defeats) {
            for (const auto& [x, y] : outcome.defeats->pairs())
                if (outcome.defeats->contains(y, x))
                    throw Error(ErrorKind::InvariantViolation, "defeat relation is not asymmetric");
        }
        rows.push_back({id, std::move(outcome)});
    }
    return rows;
}

std::vector<Edge> defeat_pairs(const MethodOutcome& o) { return o.defeats ? o.defeats->pairs() : std::vector<Edge>{}; }

std::string as_text(const std::vector<Row>& rows) {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += '\n';
        out += "method: " + std::string(to_string(rows[i].method)) + "\n";
        out += "defeats:";
        for (const auto& [x, y] : defeat_pairs(rows[i].outcome)) out += " " + x.name() + ">" + y.name();
        out += "\nwinners:";
        for (const auto& c : rows[i].outcome.winners) out += " " + c.name();
        out += '\n';
    }
    return out;
}

std::string as_json(const std::vector<Row>& rows) {
    nlohmann::ordered_json results = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        nlohmann::ordered_json entry;
        entry["method"] = to_string(row.method);
        entry["defeats"] = nlohmann::ordered_json::array();
        for (const auto& [x, y] : defeat_pairs(row.outcome)) entry["defeats"].push_back({x.name(), y.name()});
        entry["winners"] = nlohmann::ordered_json::array();
        for (const auto& c : row.outcome.winners) entry["winners"].push_back(c.name());
        results.push_back(std::move(entry));
    }
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["results"] = std::move(results);
    return doc.dump(2) + "\n";
}

std::string as_dot(const Profile& p, const std::vector<Row>& rows) {
    std::string out = margin_graph_dot(margin_graph(p));
    for (const auto& row : rows) {
        const DefeatRelation empty(p.candidates());
        out += defeat_graph_dot(row.outcome.defeats ? *row.outcome.defeats : empty, to_string(row.method));
    }
    return out;
}

} // namespace

std::optional<OutputFormat> parse_format(std::string_view token) noexcept {
    if (token == "text") return OutputFormat::Text;
    if (token == "json") return OutputFormat::Json;
    if (token == "dot") return OutputFormat::Dot;
    return std::nullopt;
}

std::vector<MethodId> parse_method_list(std::string_view csv) {
    if (csv == "all") return all_methods();
    std::vector<MethodId> out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const auto end = std::min(csv.find(',', start), csv.size());
        const auto token = csv.substr(start, end - start);
        const auto id = parse_method(token);
        if (!id) fail_input("unknown method '" + std::string(token) + "'");
        out.push_back(*id);
        start = end + 1;
    }
    return out;
}

std::string tabulate(const Profile& p, std::span<const MethodId> methods, OutputFormat format) {
    const auto rows = evaluate_all(p, methods);
    switch (format) {
    case OutputFormat::Text: return as_text(rows);
    case OutputFormat::Json: return as_json(rows);
    case OutputFormat::Dot: return as_dot(p, rows);
    }
    return {};
}

} // namespace splitcycle
