#include <algorithm>
#include <array>

#include "splitcycle/error.hpp"
#include "splitcycle/graph.hpp"
#include "splitcycle/methods.hpp"

namespace splitcycle {

namespace {

constexpr std::array<std::pair<MethodId, std::string_view>, 11> kMethodNames{{
    {MethodId::SplitCycle, "split-cycle"},
    {MethodId::RankedPairs, "ranked-pairs"},
    {MethodId::BeatPath, "beat-path"},
    {MethodId::Gocha, "gocha"},
    {MethodId::WeightedCovering, "weighted-covering"},
    {MethodId::RightCovering, "right-covering"},
    {MethodId::Minimax, "minimax"},
    {MethodId::Scwc, "scwc"},
    {MethodId::Isc, "isc"},
    {MethodId::Oca, "oca"},
    {MethodId::Irv, "irv"},
}};

template <typename Pred>
DefeatRelation relation_where(const MarginGraph& m, Pred pred) {
    DefeatRelation out(m.nodes());
    for (std::size_t x = 0; x < m.size(); ++x)
        for (std::size_t y = 0; y < m.size(); ++y)
            if (x != y && pred(x, y)) out.add(x, y);
    return out;
}

} // namespace

std::string_view to_string(MethodId id) noexcept {
    for (const auto& [m, name] : kMethodNames)
        if (m == id) return name;
    return "unknown";
}

std::optional<MethodId> parse_method(std::string_view token) noexcept {
    for (const auto& [m, name] : kMethodNames)
        if (name == token) return m;
    return std::nullopt;
}

const std::vector<MethodId>& all_methods() {
    static const std::vector<MethodId> ids = [] {
        std::vector<MethodId> v;
        for (const auto& entry : kMethodNames) v.push_back(entry.first);
        return v;
    }();
    return ids;
}

bool has_defeat_relation(MethodId id) noexcept { return id != MethodId::Irv; }

DefeatRelation beat_path(const MarginGraph& m) {
    const auto widest = detail::widest_paths(m);
    const std::size_t n = m.size();
    return relation_where(m, [&](std::size_t x, std::size_t y) { return widest[x * n + y] > widest[y * n + x]; });
}

DefeatRelation gocha(const MarginGraph& m) {
    const auto reach = detail::transitive_closure(m);
    const std::size_t n = m.size();
    return relation_where(m, [&](std::size_t x, std::size_t y) { return reach[x * n + y] && !reach[y * n + x]; });
}

DefeatRelation weighted_covering(const MarginGraph& m) {
    return relation_where(m, [&](std::size_t x, std::size_t y) {
        if (m.margin(x, y) <= 0) return false;
        for (std::size_t z = 0; z < m.size(); ++z)
            if (m.margin(x, z) < m.margin(y, z)) return false;
        return true;
    });
}

DefeatRelation right_covering(const MarginGraph& m) {
    return relation_where(m, [&](std::size_t x, std::size_t y) {
        if (m.margin(x, y) <= 0) return false;
        for (std::size_t z = 0; z < m.size(); ++z)
            if (m.margin(y, z) > 0 && m.margin(x, z) <= 0) return false;
        return true;
    });
}

std::vector<int> weakness(const MarginGraph& m) {
    const std::size_t n = m.size();
    std::vector<int> out(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
        std::optional<int> worst;
        for (std::size_t z = 0; z < n; ++z)
            if (z != x) worst = std::max(worst.value_or(m.margin(z, x)), m.margin(z, x));
        out[x] = worst.value_or(0);
    }
    return out;
}

DefeatRelation minimax_vccr(const MarginGraph& m) {
    const auto w = weakness(m);
    return relation_where(m, [&](std::size_t x, std::size_t y) { return w[x] < w[y]; });
}

CandidateSet minimax_winners(const MarginGraph& m) {
    const auto w = weakness(m);
    const int best = *std::min_element(w.begin(), w.end());
    CandidateSet out;
    for (std::size_t x = 0; x < m.size(); ++x)
        if (w[x] == best) out.push_back(m.nodes()[x]);
    return out;
}

DefeatRelation scwc(const MarginGraph& m) {
    const auto sc = split_cycle(m);
    const auto wc = weighted_covering(m);
    return relation_where(m, [&](std::size_t x, std::size_t y) { return sc.contains(x, y) || wc.contains(x, y); });
}

DefeatRelation isc(const MarginGraph& m) {
    return relation_where(m, [&](std::size_t x, std::size_t y) {
        const int k = m.margin(x, y);
        return k > 0 && ExtendedWeight::finite(k) > detail::ignore_source_strength(m, y, x);
    });
}

DefeatRelation oca(const MarginGraph& m) {
    return relation_where(m, [&](std::size_t x, std::size_t y) {
        for (std::size_t z = 0; z < m.size(); ++z)
            if (m.margin(x, y) <= m.margin(y, z)) return false;
        return true;
    });
}

CandidateSet irv_winners(const Profile& p) {
    if (!p.is_linear()) fail_input("irv requires a linear profile");
    std::vector<bool> alive(p.num_candidates(), true);
    std::size_t remaining = p.num_candidates();
    while (remaining > 1) {
        std::vector<std::size_t> firsts(p.num_candidates(), 0);
        for (const auto& [id, ballot] : p.voters()) {
            for (const auto& tier : ballot.tiers()) {
                const auto i = p.index_of(tier.front());
                if (alive[i]) {
                    ++firsts[i];
                    break;
                }
            }
        }
        std::size_t fewest = p.num_voters() + 1;
        for (std::size_t i = 0; i < alive.size(); ++i)
            if (alive[i]) fewest = std::min(fewest, firsts[i]);
        std::size_t eliminated = 0;
        for (std::size_t i = 0; i < alive.size(); ++i)
            if (alive[i] && firsts[i] == fewest) ++eliminated;
        if (eliminated == remaining) break;
        for (std::size_t i = 0; i < alive.size(); ++i)
            if (alive[i] && firsts[i] == fewest) alive[i] = false;
        remaining -= eliminated;
    }
    CandidateSet out;
    for (std::size_t i = 0; i < alive.size(); ++i)
        if (alive[i]) out.push_back(p.candidates()[i]);
    return out;
}

DefeatRelation defeats(MethodId id, const MarginGraph& m) {
    switch (id) {
    case MethodId::SplitCycle: return split_cycle(m);
    case MethodId::RankedPairs: return ranked_pairs(m);
    case MethodId::BeatPath: return beat_path(m);
    case MethodId::Gocha: return gocha(m);
    case MethodId::WeightedCovering: return weighted_covering(m);
    case MethodId::RightCovering: return right_covering(m);
    case MethodId::Minimax: return minimax_vccr(m);
    case MethodId::Scwc: return scwc(m);
    case MethodId::Isc: return isc(m);
    case MethodId::Oca: return oca(m);
    case MethodId::Irv: break;
    }
    fail_input(std::string(to_string(id)) + " has no defeat relation");
}

MethodOutcome evaluate(MethodId id, const Profile& p) { return evaluate(id, p, margin_graph(p)); }

MethodOutcome evaluate(MethodId id, const Profile& p, const MarginGraph& m) {
    if (id == MethodId::Irv) return {std::nullopt, irv_winners(p)};
    auto d = defeats(id, m);
    auto w = winners(d);
    return {std::move(d), std::move(w)};
}

} // namespace splitcycle
