#include "splitcycle/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <set>
#include <string>

#include "splitcycle/error.hpp"
#include "splitcycle/graph.hpp"
#include "splitcycle/methods.hpp"

namespace splitcycle {

Profile debord_realize(const MarginGraph& m) {
    const std::size_t n = m.size();
    std::optional<int> parity;
    for (const auto& e : m.edges()) {
        if (parity && *parity != e.weight % 2)
            throw Error(ErrorKind::NotRealizable, "edge weights do not share parity");
        parity = e.weight % 2;
    }
    const bool odd = parity.value_or(0) == 1;
    if (odd) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (m.margin(i, j) == 0)
                    throw Error(ErrorKind::NotRealizable, "odd weights but no edge between '" + m.nodes()[i].name() +
                                                              "' and '" + m.nodes()[j].name() + "'");
    }

    const auto& nodes = m.nodes();
    std::vector<Ballot> ballots;
    const Ballot base = Ballot::linear(nodes);
    if (odd) ballots.push_back(base);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int deficit = m.margin(i, j) - (odd ? 1 : 0);
            const auto& winner = deficit > 0 ? nodes[i] : nodes[j];
            const auto& loser = deficit > 0 ? nodes[j] : nodes[i];
            std::vector<Candidate> rest;
            for (const auto& c : nodes)
                if (c != winner && c != loser) rest.push_back(c);
            std::vector<Candidate> first{winner, loser};
            first.insert(first.end(), rest.begin(), rest.end());
            std::vector<Candidate> second(rest.rbegin(), rest.rend());
            second.push_back(winner);
            second.push_back(loser);
            const Ballot a = Ballot::linear(std::move(first));
            const Ballot b = Ballot::linear(std::move(second));
            for (int g = 0; g < std::abs(deficit) / 2; ++g) {
                ballots.push_back(a);
                ballots.push_back(b);
            }
        }
    }
    if (ballots.empty()) {
        ballots.push_back(base);
        ballots.push_back(reverse(base));
    }
    return Profile::from_ballots(nodes, std::move(ballots));
}

namespace {

void validate(const CycleShape& shape) {
    if (shape.cycle.size() < 3) fail_input("a cycle needs x, y and at least one z");
    if (shape.margin <= 0 || shape.margin % 2 != 0) fail_input("cycle margin must be even and positive");
    make_candidate_set(shape.cycle);
}

std::vector<Candidate> concat(std::initializer_list<std::vector<Candidate>> parts) {
    std::vector<Candidate> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// z[from..to] inclusive, 1-based, ascending or descending.
std::vector<Candidate> run(const std::vector<Candidate>& z, int from, int to) {
    std::vector<Candidate> out;
    if (from <= to)
        for (int i = from; i <= to; ++i) out.push_back(z[static_cast<std::size_t>(i - 1)]);
    else
        for (int i = from; i >= to; --i) out.push_back(z[static_cast<std::size_t>(i - 1)]);
    return out;
}

} // namespace

Profile cycle_profile(const CycleShape& shape) {
    validate(shape);
    const Candidate& x = shape.cycle[0];
    const Candidate& y = shape.cycle[1];
    const std::vector<Candidate> z(shape.cycle.begin() + 2, shape.cycle.end());
    const int n = static_cast<int>(z.size());

    std::vector<std::pair<std::vector<Candidate>, std::vector<Candidate>>> columns;
    columns.emplace_back(concat({{x, y}, run(z, 1, n)}), concat({run(z, n, 1), {x, y}}));
    columns.emplace_back(concat({{y}, run(z, 1, n), {x}}), concat({{x}, n >= 2 ? run(z, n, 2) : std::vector<Candidate>{}, {y, z[0]}}));
    for (int i = 1; i <= n - 1; ++i) {
        const auto below = i >= 2 ? run(z, 1, i - 1) : std::vector<Candidate>{};
        const auto below_desc = i >= 2 ? run(z, i - 1, 1) : std::vector<Candidate>{};
        const auto above_desc = i + 2 <= n ? run(z, n, i + 2) : std::vector<Candidate>{};
        columns.emplace_back(concat({run(z, i, n), {x, y}, below}),
                             concat({below_desc, {y, x}, above_desc, {z[static_cast<std::size_t>(i - 1)], z[static_cast<std::size_t>(i)]}}));
    }
    columns.emplace_back(concat({{z[static_cast<std::size_t>(n - 1)], x, y}, n >= 2 ? run(z, 1, n - 1) : std::vector<Candidate>{}}),
                         concat({n >= 2 ? run(z, n - 1, 1) : std::vector<Candidate>{}, {y, z[static_cast<std::size_t>(n - 1)], x}}));

    std::vector<Ballot> ballots;
    const int half = shape.margin / 2;
    for (const auto& [first, second] : columns) {
        for (int k = 0; k < half; ++k) ballots.push_back(Ballot::linear(first));
        for (int k = 0; k < half; ++k) ballots.push_back(Ballot::linear(second));
    }
    return Profile::from_ballots(make_candidate_set(shape.cycle), std::move(ballots));
}

Profile cycle_profile_tied(const CycleShape& shape) {
    validate(shape);
    const auto& seq = shape.cycle;
    const std::size_t len = seq.size();
    std::vector<Ballot> ballots;
    // For each cycle edge (u, v): u > v > {rest} and {rest} > {u, v}.
    for (std::size_t k = 0; k < len; ++k) {
        const Candidate& u = seq[k];
        const Candidate& v = seq[(k + 1) % len];
        std::vector<Candidate> rest;
        for (const auto& c : seq)
            if (c != u && c != v) rest.push_back(c);
        const Ballot top{{{u}, {v}, rest}};
        const Ballot bottom{{rest, {u, v}}};
        for (int i = 0; i < shape.margin; ++i) ballots.push_back(top);
        for (int i = 0; i < shape.margin; ++i) ballots.push_back(bottom);
    }
    return Profile::from_ballots(make_candidate_set(seq), std::move(ballots));
}

std::map<Candidate, Candidate> cycle_rotation(const CycleShape& shape) {
    validate(shape);
    std::map<Candidate, Candidate> sigma;
    for (std::size_t k = 0; k < shape.cycle.size(); ++k) sigma.emplace(shape.cycle[k], shape.cycle[(k + 1) % shape.cycle.size()]);
    return sigma;
}

Ballot lemma_ballot(const Profile& p, const Candidate& x, const Candidate& y) {
    const auto m = margin_graph(p);
    const auto xi = m.index_of(x);
    const auto yi = m.index_of(y);
    const int k = m.margin(xi, yi);
    if (!split_cycle(m).contains(xi, yi)) fail_input("(" + x.name() + "," + y.name() + ") is not a split cycle defeat");
    if (k <= 2) fail_input("margin of " + x.name() + " over " + y.name() + " must exceed 2");

    const EdgeSet cut = minimal_cut(m, y, x, k - 1, false);
    for (const auto& [a, b] : cut)
        for (const auto& [c, d] : cut)
            if (b == c)
                throw Error(ErrorKind::InvariantViolation, "cut has connecting edges " + a.name() + "->" + b.name() +
                                                               " and " + c.name() + "->" + d.name());

    EdgeSet relation;
    for (const auto& [a, b] : cut) relation.emplace(b, a);
    for (std::size_t z = 0; z < m.size(); ++z)
        if (z != yi && m.margin(yi, z) <= 0) relation.emplace(y, m.nodes()[z]);

    // Among the available candidates, rank highest the one most beaten by the
    // candidates not yet placed; ties go to the least name.
    const auto pick = [&m](const std::vector<std::size_t>& available, const std::vector<bool>& placed) {
        std::size_t best = available.front();
        long best_score = 0;
        bool first = true;
        for (auto i : available) {
            long score = 0;
            for (std::size_t w = 0; w < m.size(); ++w)
                if (!placed[w] && w != i) score += m.margin(w, i);
            if (first || score > best_score) {
                best = i;
                best_score = score;
                first = false;
            }
        }
        return best;
    };
    Ballot ballot = [&] {
        try {
            return linear_extension(relation, m.nodes(), pick);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Cyclic) throw Error(ErrorKind::InvariantViolation, e.what());
            throw;
        }
    }();
    return ballot;
}

ReductionSequence coherent_reduction_sequence(const Profile& p, const Candidate& x, const Candidate& y) {
    const auto m = margin_graph(p);
    if (!split_cycle(m).contains(m.index_of(x), m.index_of(y)))
        fail_input("(" + x.name() + "," + y.name() + ") is not a split cycle defeat");
    ReductionSequence seq{p.is_linear() ? p : double_profile(p), {}};
    const int k = margin(seq.base, x, y);
    Profile current = seq.base;
    for (int step = 0; step + 2 < k; ++step) {
        Ballot b = lemma_ballot(current, x, y);
        current = add_ballot(current, b);
        seq.ballots.push_back(std::move(b));
    }
    return seq;
}

// ---- fixtures ----

namespace {

constexpr std::array<std::pair<FixtureId, std::string_view>, 15> kFixtureNames{{
    {FixtureId::Fig1, "FIG1"},
    {FixtureId::Ex210, "EX210"},
    {FixtureId::IiaP, "IIA-P"},
    {FixtureId::IiaPc, "IIA-Pc"},
    {FixtureId::Fig3G, "FIG3-G"},
    {FixtureId::Fig4G0, "FIG4-G0"},
    {FixtureId::ScwcP, "SCWC-P"},
    {FixtureId::ScwcQ, "SCWC-Q"},
    {FixtureId::IscG, "ISC-G"},
    {FixtureId::OcaG, "OCA-G"},
    {FixtureId::RcG, "RC-G"},
    {FixtureId::MmP, "MM-P"},
    {FixtureId::MmPc, "MM-Pc"},
    {FixtureId::IrvP, "IRV-P"},
    {FixtureId::IrvQ, "IRV-Q"},
}};

Candidate cand(std::string_view s) { return Candidate(std::string(s)); }

MarginGraph graph(std::initializer_list<std::string_view> nodes,
                  std::initializer_list<std::tuple<std::string_view, std::string_view, int>> edges) {
    std::vector<Candidate> ns;
    for (auto n : nodes) ns.push_back(cand(n));
    std::vector<WeightedEdge> es;
    for (const auto& [a, b, w] : edges) es.push_back({cand(a), cand(b), w});
    return MarginGraph(make_candidate_set(std::move(ns)), es);
}

Ballot ranking(std::string_view order) {
    std::vector<Candidate> out;
    for (char ch : order) out.push_back(cand(std::string_view(&ch, 1)));
    return Ballot::linear(std::move(out));
}

// Each entry: voter count, then the ranking with one letter per candidate.
Profile columns(std::initializer_list<std::string_view> names,
                std::initializer_list<std::pair<int, std::string_view>> cols) {
    std::vector<Ballot> ballots;
    for (const auto& [count, order] : cols)
        for (int i = 0; i < count; ++i) ballots.push_back(ranking(order));
    return Profile::from_ballots(make_candidate_set(names), std::move(ballots));
}

} // namespace

std::string_view to_string(FixtureId id) noexcept {
    for (const auto& [f, name] : kFixtureNames)
        if (f == id) return name;
    return "unknown";
}

std::optional<FixtureId> parse_fixture(std::string_view token) noexcept {
    for (const auto& [f, name] : kFixtureNames)
        if (name == token) return f;
    return std::nullopt;
}

const std::vector<FixtureId>& all_fixtures() {
    static const std::vector<FixtureId> ids = [] {
        std::vector<FixtureId> v;
        for (const auto& entry : kFixtureNames) v.push_back(entry.first);
        return v;
    }();
    return ids;
}

Fixture paper_fixture(FixtureId id) {
    switch (id) {
    case FixtureId::Fig1:
        return graph({"a", "b", "c", "d"}, {{"c", "a", 8}, {"b", "a", 2}, {"a", "d", 10}, {"b", "c", 4}, {"d", "c", 12}, {"d", "b", 6}});
    case FixtureId::Ex210:
        return columns({"a", "b", "c", "d", "e"}, {{9, "bdcea"}, {5, "bceda"}, {3, "abedc"}, {1, "abced"}, {8, "aebcd"}, {4, "adbce"},
                                                   {3, "dbeca"}, {7, "dcaeb"}, {4, "cabde"}, {3, "ceadb"}, {1, "cdeab"}});
    case FixtureId::IiaP:
        return columns({"a", "b", "c"}, {{1, "abc"}, {1, "bac"}, {1, "cab"}});
    case FixtureId::IiaPc:
        return columns({"a", "b", "c"}, {{1, "abc"}, {1, "bca"}, {1, "cab"}});
    case FixtureId::Fig3G:
        return graph({"a", "b", "c", "x", "y"}, {{"x", "y", 4}, {"y", "b", 2}, {"b", "x", 2}, {"a", "x", 4}, {"y", "c", 4}, {"c", "x", 2}});
    case FixtureId::Fig4G0:
        return graph({"a", "b", "x", "y"}, {{"x", "y", 4}, {"y", "b", 2}, {"b", "x", 2}, {"a", "x", 4}});
    case FixtureId::ScwcP:
        return columns({"a", "b", "x", "y"}, {{1, "axyb"}, {2, "ayxb"}, {2, "baxy"}, {2, "yxba"}, {1, "xyba"}, {1, "xbay"}});
    case FixtureId::ScwcQ:
        return columns({"a", "b", "x", "y"}, {{1, "axyb"}, {2, "aybx"}, {2, "baxy"}, {2, "yxba"}, {1, "xyba"}, {1, "xbay"}});
    case FixtureId::IscG:
        return graph({"a", "b", "c"}, {{"c", "b", 5}, {"b", "a", 3}, {"a", "c", 1}});
    case FixtureId::OcaG:
    case FixtureId::RcG:
        return graph({"x", "y", "z"}, {{"x", "y", 2}, {"y", "z", 2}});
    case FixtureId::MmP:
        return graph({"a", "b", "x", "y"}, {{"a", "x", 2}, {"b", "y", 2}});
    case FixtureId::MmPc:
        return graph({"a", "b", "x", "y"}, {{"a", "x", 1}, {"y", "x", 1}, {"b", "a", 1}, {"b", "x", 1}, {"y", "a", 1}, {"b", "y", 3}});
    case FixtureId::IrvP:
        return columns({"x", "y", "z"}, {{3, "xyz"}, {4, "yxz"}, {2, "zxy"}});
    case FixtureId::IrvQ:
        return columns({"x", "y", "z"}, {{3, "xyz"}, {4, "yxz"}, {3, "zxy"}});
    }
    fail_input("unknown fixture");
}

Profile fixture_profile(FixtureId id) {
    auto f = paper_fixture(id);
    if (auto* p = std::get_if<Profile>(&f)) return *p;
    return debord_realize(std::get<MarginGraph>(f));
}

MarginGraph fixture_graph(FixtureId id) {
    auto f = paper_fixture(id);
    if (auto* m = std::get_if<MarginGraph>(&f)) return *m;
    return margin_graph(std::get<Profile>(f));
}

} // namespace splitcycle
