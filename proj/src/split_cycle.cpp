#include <algorithm>
#include <string>

#include "splitcycle/error.hpp"
#include "splitcycle/graph.hpp"
#include "splitcycle/methods.hpp"

namespace splitcycle {

DefeatRelation split_cycle(const MarginGraph& m) {
    const std::size_t n = m.size();
    DefeatRelation out(m.nodes());
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const int w = m.weight(x, y);
            if (w > 0 && !detail::reachable_from(m, y, w)[x]) out.add(x, y);
        }
    return out;
}

namespace {

void require_bound(const MarginGraph& m, std::size_t node_bound) {
    if (m.size() > node_bound)
        throw Error(ErrorKind::OracleBound, "cycle enumeration limited to " + std::to_string(node_bound) +
                                                " nodes, graph has " + std::to_string(m.size()));
}

struct IndexedCycle {
    std::vector<std::size_t> nodes;  // without the repeated endpoint
    int split;
};

std::vector<IndexedCycle> indexed_cycles(const MarginGraph& m) {
    std::vector<IndexedCycle> out;
    for (const auto& path : simple_cycles(m)) {
        IndexedCycle c;
        for (std::size_t k = 0; k + 1 < path.nodes.size(); ++k) c.nodes.push_back(m.index_of(path.nodes[k]));
        c.split = path_strength(m, path);
        out.push_back(std::move(c));
    }
    return out;
}

bool contains_both(const IndexedCycle& c, std::size_t x, std::size_t y) {
    return std::find(c.nodes.begin(), c.nodes.end(), x) != c.nodes.end() &&
           std::find(c.nodes.begin(), c.nodes.end(), y) != c.nodes.end();
}

bool y_follows_x(const IndexedCycle& c, std::size_t x, std::size_t y) {
    const std::size_t len = c.nodes.size();
    for (std::size_t k = 0; k < len; ++k)
        if (c.nodes[k] == x && c.nodes[(k + 1) % len] == y) return true;
    return false;
}

} // namespace

DefeatRelation split_cycle_by_cycles(const MarginGraph& m, std::size_t node_bound) {
    return split_cycle_by_condition(m, SplitCycleCondition::SimpleCycle, node_bound);
}

DefeatRelation split_cycle_by_condition(const MarginGraph& m, SplitCycleCondition condition,
                                        std::size_t node_bound) {
    const std::size_t n = m.size();
    DefeatRelation out(m.nodes());
    switch (condition) {
    case SplitCycleCondition::AnyCycle: {
        // A closed walk through x and y with every edge >= t exists iff x and
        // y are mutually reachable in the graph restricted to t.
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const int k = m.weight(x, y);
                if (k <= 0) continue;
                const auto closure = detail::transitive_closure(m, k);
                const bool same_component = closure[x * n + y] && closure[y * n + x];
                if (!same_component) out.add(x, y);
            }
        return out;
    }
    case SplitCycleCondition::SimpleCycle:
    case SplitCycleCondition::AdjacentCycle: {
        require_bound(m, node_bound);
        const auto cycles = indexed_cycles(m);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const int k = m.weight(x, y);
                if (k <= 0) continue;
                bool beats_all = true;
                for (const auto& c : cycles) {
                    const bool relevant = condition == SplitCycleCondition::SimpleCycle ? contains_both(c, x, y)
                                                                                       : y_follows_x(c, x, y);
                    if (relevant && k <= c.split) {
                        beats_all = false;
                        break;
                    }
                }
                if (beats_all) out.add(x, y);
            }
        return out;
    }
    case SplitCycleCondition::PathStrength: {
        const auto widest = detail::widest_paths(m);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                const int k = m.weight(x, y);
                if (k > 0 && k > widest[y * n + x]) out.add(x, y);
            }
        return out;
    }
    }
    fail_input("unknown split cycle condition");
}

} // namespace splitcycle
