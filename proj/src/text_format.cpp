#include "splitcycle/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "splitcycle/error.hpp"

namespace splitcycle {

namespace {

constexpr std::size_t kMaxVoters = 10'000'000;

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = text.find('\n', start);
        auto line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        ++number;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const auto first = line.find_first_not_of(" \t");
        if (first != std::string_view::npos && line[first] != '#') out.push_back({number, line});
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return out;
}

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

// Splits on whitespace, remembering columns relative to `base`.
std::vector<Token> words(std::string_view s, std::size_t base_column) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        const auto begin = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > begin) out.push_back({s.substr(begin, i - begin), base_column + begin});
    }
    return out;
}

std::optional<std::size_t> header_end(std::string_view line, std::string_view keyword) {
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line.substr(first, keyword.size()) != keyword) return std::nullopt;
    auto rest = first + keyword.size();
    while (rest < line.size() && (line[rest] == ' ' || line[rest] == '\t')) ++rest;
    if (rest >= line.size() || line[rest] != ':') return std::nullopt;
    return rest + 1;
}

CandidateSet parse_names(const Line& line, std::size_t from, std::string_view what) {
    std::vector<Candidate> names;
    std::set<std::string_view> seen;
    for (const auto& tok : words(line.text.substr(from), from + 1)) {
        if (!Candidate::valid_name(tok.text))
            throw ParseError(line.number, tok.column, "invalid " + std::string(what) + " name '" + std::string(tok.text) + "'");
        if (!seen.insert(tok.text).second)
            throw ParseError(line.number, tok.column, "duplicate " + std::string(what) + " '" + std::string(tok.text) + "'");
        names.emplace_back(std::string(tok.text));
    }
    if (names.empty()) throw ParseError(line.number, from + 1, "no " + std::string(what) + "s declared");
    return make_candidate_set(std::move(names));
}

template <typename Int>
std::optional<Int> parse_int(std::string_view s) {
    Int v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

// Parses "a > b = c" starting at `column` (1-based) of the given line.
Ballot parse_ballot_at(std::string_view s, std::size_t line_no, std::size_t column, const CandidateSet& candidates) {
    std::vector<Ballot::Tier> tiers;
    std::set<Candidate> seen;
    std::size_t pos = 0;
    for (;;) {
        const auto gt = s.find('>', pos);
        const auto tier_text = s.substr(pos, gt == std::string_view::npos ? std::string_view::npos : gt - pos);
        Ballot::Tier tier;
        std::size_t tpos = 0;
        for (;;) {
            const auto eq = tier_text.find('=', tpos);
            const auto name_text = tier_text.substr(tpos, eq == std::string_view::npos ? std::string_view::npos : eq - tpos);
            const auto toks = words(name_text, column + pos + tpos);
            if (toks.size() != 1) {
                const auto col = toks.empty() ? column + pos + tpos : toks[1].column;
                throw ParseError(line_no, col, toks.empty() ? "missing candidate name" : "expected '>' or '=' between names");
            }
            const auto& tok = toks.front();
            if (!Candidate::valid_name(tok.text))
                throw ParseError(line_no, tok.column, "invalid candidate name '" + std::string(tok.text) + "'");
            Candidate c{std::string(tok.text)};
            if (!contains(candidates, c))
                throw ParseError(line_no, tok.column, "unknown candidate '" + c.name() + "'");
            if (!seen.insert(c).second)
                throw ParseError(line_no, tok.column, "candidate '" + c.name() + "' listed twice");
            tier.push_back(std::move(c));
            if (eq == std::string_view::npos) break;
            tpos = eq + 1;
        }
        tiers.push_back(std::move(tier));
        if (gt == std::string_view::npos) break;
        pos = gt + 1;
    }
    if (seen.size() != candidates.size()) {
        std::string missing;
        for (const auto& c : candidates)
            if (!seen.count(c)) missing += (missing.empty() ? "" : " ") + c.name();
        throw ParseError(line_no, column + s.size(), "ballot omits: " + missing);
    }
    return Ballot(std::move(tiers));
}

std::string quoted(const Candidate& c) {
    std::string s = "\"";
    for (char ch : c.name()) {
        if (ch == '"' || ch == '\\') s += '\\';
        s += ch;
    }
    return s + "\"";
}

} // namespace

Ballot parse_ballot(std::string_view text, const CandidateSet& candidates) {
    return parse_ballot_at(text, 1, 1, candidates);
}

Profile parse_profile(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty profile: expected 'candidates:' line");
    const auto& head = lines.front();
    const auto after = header_end(head.text, "candidates");
    if (!after) throw ParseError(head.number, 1, "expected 'candidates:' line");
    const CandidateSet candidates = parse_names(head, *after, "candidate");

    std::vector<Ballot> ballots;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        std::size_t count = 1;
        std::size_t body = 0;
        if (const auto colon = line.text.find(':'); colon != std::string_view::npos) {
            const auto toks = words(line.text.substr(0, colon), 1);
            if (toks.size() != 1) throw ParseError(line.number, toks.empty() ? 1 : toks[1].column, "expected a voter count before ':'");
            const auto n = parse_int<std::size_t>(toks.front().text);
            if (!n || *n == 0) throw ParseError(line.number, toks.front().column, "voter count must be a positive integer");
            if (*n > kMaxVoters - ballots.size())
                throw ParseError(line.number, toks.front().column, "profile exceeds " + std::to_string(kMaxVoters) + " voters");
            count = *n;
            body = colon + 1;
        }
        auto ballot = parse_ballot_at(line.text.substr(body), line.number, body + 1, candidates);
        for (std::size_t c = 0; c < count; ++c) ballots.push_back(ballot);
    }
    if (ballots.empty()) throw ParseError(head.number + 1, 1, "profile has no ballots");
    return Profile::from_ballots(candidates, std::move(ballots));
}

std::string format_profile(const Profile& p) {
    std::ostringstream out;
    out << "candidates:";
    for (const auto& c : p.candidates()) out << ' ' << c.name();
    out << '\n';
    const auto& voters = p.voters();
    for (std::size_t i = 0; i < voters.size();) {
        std::size_t j = i;
        while (j < voters.size() && voters[j].second == voters[i].second) ++j;
        out << (j - i) << ": " << voters[i].second.to_string() << '\n';
        i = j;
    }
    return out.str();
}

MarginGraph parse_tournament(std::string_view text) {
    const auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "empty tournament: expected 'nodes:' line");
    const auto& head = lines.front();
    const auto after = header_end(head.text, "nodes");
    if (!after) throw ParseError(head.number, 1, "expected 'nodes:' line");
    const CandidateSet nodes = parse_names(head, *after, "node");

    std::vector<WeightedEdge> edges;
    std::set<std::pair<Candidate, Candidate>> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& line = lines[k];
        const auto toks = words(line.text, 1);
        if (toks.size() != 3) throw ParseError(line.number, toks.size() > 3 ? toks[3].column : 1, "expected 'from to weight'");
        std::vector<Candidate> ends;
        for (std::size_t t = 0; t < 2; ++t) {
            if (!Candidate::valid_name(toks[t].text))
                throw ParseError(line.number, toks[t].column, "invalid node name '" + std::string(toks[t].text) + "'");
            Candidate c{std::string(toks[t].text)};
            if (!contains(nodes, c)) throw ParseError(line.number, toks[t].column, "unknown node '" + c.name() + "'");
            ends.push_back(std::move(c));
        }
        const auto w = parse_int<int>(toks[2].text);
        if (!w || *w < 1) throw ParseError(line.number, toks[2].column, "weight must be a positive integer");
        if (ends[0] == ends[1]) throw ParseError(line.number, toks[1].column, "self-edge");
        if (seen.count({ends[1], ends[0]}) || !seen.insert({ends[0], ends[1]}).second)
            throw ParseError(line.number, toks[0].column, "second edge between '" + ends[0].name() + "' and '" + ends[1].name() + "'");
        edges.push_back({ends[0], ends[1], *w});
    }
    return MarginGraph(nodes, edges);
}

std::string format_tournament(const MarginGraph& m) {
    std::ostringstream out;
    out << "nodes:";
    for (const auto& c : m.nodes()) out << ' ' << c.name();
    out << '\n';
    for (const auto& e : m.edges()) out << e.from.name() << ' ' << e.to.name() << ' ' << e.weight << '\n';
    return out.str();
}

std::string margin_graph_dot(const MarginGraph& m, std::string_view graph_name) {
    std::ostringstream out;
    out << "digraph \"" << graph_name << "\" {\n";
    for (const auto& c : m.nodes()) out << "  " << quoted(c) << ";\n";
    for (const auto& e : m.edges())
        out << "  " << quoted(e.from) << " -> " << quoted(e.to) << " [label=\"" << e.weight << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string defeat_graph_dot(const DefeatRelation& d, std::string_view graph_name) {
    std::ostringstream out;
    out << "digraph \"" << graph_name << "\" {\n";
    for (const auto& c : d.nodes()) out << "  " << quoted(c) << ";\n";
    for (const auto& [x, y] : d.pairs()) out << "  " << quoted(x) << " -> " << quoted(y) << " [label=\"D\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace splitcycle
