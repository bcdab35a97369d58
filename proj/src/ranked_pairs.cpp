#include <algorithm>
#include <map>
#include <string>

#include "splitcycle/error.hpp"
#include "splitcycle/methods.hpp"

namespace splitcycle {

namespace {

using IndexPair = std::pair<std::size_t, std::size_t>;

std::vector<IndexPair> domain_indices(const MarginGraph& m) {
    std::vector<IndexPair> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            if (i != j && m.margin(i, j) >= 0) out.emplace_back(i, j);
    return out;
}

// Locks pairs in the given order; a pair that would close a cycle is
// replaced by its converse.
DefeatRelation lock(const MarginGraph& m, const std::vector<IndexPair>& order) {
    const std::size_t n = m.size();
    std::vector<char> reach(n * n, 0);
    DefeatRelation out(m.nodes());
    auto insert = [&](std::size_t a, std::size_t b) {
        if (out.contains(a, b)) return;
        out.add(a, b);
        for (std::size_t i = 0; i < n; ++i) {
            if (i != a && !reach[i * n + a]) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (j == b || reach[b * n + j]) reach[i * n + j] = 1;
        }
    };
    for (const auto& [x, y] : order) {
        if (reach[y * n + x])
            insert(y, x);
        else
            insert(x, y);
    }
    return out;
}

} // namespace

std::vector<Edge> ranked_pairs_domain(const MarginGraph& m) {
    std::vector<Edge> out;
    for (const auto& [i, j] : domain_indices(m)) out.emplace_back(m.nodes()[i], m.nodes()[j]);
    return out;
}

DefeatRelation ranked_pairs_single(const MarginGraph& m, const std::vector<Edge>& tiebreak) {
    auto domain = domain_indices(m);
    std::map<IndexPair, std::size_t> position;
    for (std::size_t k = 0; k < tiebreak.size(); ++k) {
        const IndexPair ip{m.index_of(tiebreak[k].first), m.index_of(tiebreak[k].second)};
        if (!position.emplace(ip, k).second) fail_input("tie-breaker repeats a pair");
    }
    if (position.size() != domain.size()) fail_input("tie-breaker must order exactly the non-negative-margin pairs");
    for (const auto& ip : domain)
        if (!position.count(ip)) fail_input("tie-breaker misses a non-negative-margin pair");
    std::sort(domain.begin(), domain.end(), [&](const IndexPair& a, const IndexPair& b) {
        const int ma = m.margin(a.first, a.second);
        const int mb = m.margin(b.first, b.second);
        if (ma != mb) return ma > mb;
        return position.at(a) < position.at(b);
    });
    return lock(m, domain);
}

DefeatRelation ranked_pairs(const MarginGraph& m, std::uint64_t bound) {
    std::map<int, std::vector<IndexPair>, std::greater<>> by_margin;
    for (const auto& ip : domain_indices(m)) by_margin[m.margin(ip.first, ip.second)].push_back(ip);
    std::vector<std::vector<IndexPair>> groups;
    std::uint64_t orderings = 1;
    for (auto& [margin, group] : by_margin) {
        for (std::uint64_t f = 2; f <= group.size(); ++f) {
            if (orderings > bound / f)
                throw Error(ErrorKind::OracleBound, "ranked pairs tie-breaker enumeration exceeds bound " +
                                                        std::to_string(bound));
            orderings *= f;
        }
        std::sort(group.begin(), group.end());
        groups.push_back(std::move(group));
    }

    std::optional<DefeatRelation> meet;
    for (;;) {
        std::vector<IndexPair> order;
        for (const auto& g : groups) order.insert(order.end(), g.begin(), g.end());
        auto locked = lock(m, order);
        if (!meet) {
            meet = std::move(locked);
        } else {
            DefeatRelation next(m.nodes());
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < m.size(); ++j)
                    if (meet->contains(i, j) && locked.contains(i, j)) next.add(i, j);
            meet = std::move(next);
        }
        // Odometer over the per-group permutations.
        std::size_t g = groups.size();
        bool advanced = false;
        while (g-- > 0) {
            if (std::next_permutation(groups[g].begin(), groups[g].end())) {
                advanced = true;
                break;
            }
        }
        if (!advanced) break;
    }
    return *meet;
}

} // namespace splitcycle
