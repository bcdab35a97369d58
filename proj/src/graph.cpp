#include "splitcycle/graph.hpp"

#include <algorithm>

#include "splitcycle/error.hpp"

namespace splitcycle {

MarginGraph restrict_to_k(const MarginGraph& m, int k) {
    if (k < 1) fail_input("restriction threshold must be positive");
    std::vector<int> w = m.weights_;
    for (int& v : w)
        if (v < k) v = 0;
    return MarginGraph(m.nodes(), std::move(w));
}

namespace detail {

std::vector<char> reachable_from(const MarginGraph& m, std::size_t src, int min_weight) {
    const std::size_t n = m.size();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{src};
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v] && m.weight(u, v) >= min_weight && m.weight(u, v) > 0) {
                seen[v] = 1;
                stack.push_back(v);
            }
        }
    }
    return seen;
}

std::vector<char> transitive_closure(const MarginGraph& m, int min_weight) {
    const std::size_t n = m.size();
    std::vector<char> reach(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            reach[i * n + j] = m.weight(i, j) >= std::max(min_weight, 1);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (reach[i * n + k])
                for (std::size_t j = 0; j < n; ++j)
                    if (reach[k * n + j]) reach[i * n + j] = 1;
    return reach;
}

std::vector<int> widest_paths(const MarginGraph& m) {
    const std::size_t n = m.size();
    std::vector<int> w(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = m.weight(i, j);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w[i * n + k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                const int via = std::min(w[i * n + k], w[k * n + j]);
                if (via > w[i * n + j]) w[i * n + j] = via;
            }
        }
    for (std::size_t i = 0; i < n; ++i) w[i * n + i] = 0;
    return w;
}

ExtendedWeight ignore_source_strength(const MarginGraph& m, std::size_t x, std::size_t y) {
    // Bottleneck Dijkstra on the graph whose x-sourced edges weigh infinity.
    const std::size_t n = m.size();
    std::vector<std::optional<ExtendedWeight>> best(n);
    std::vector<bool> done(n, false);
    best[x] = ExtendedWeight::infinity();
    for (;;) {
        std::optional<std::size_t> u;
        for (std::size_t v = 0; v < n; ++v)
            if (!done[v] && best[v] && (!u || *best[v] > *best[*u])) u = v;
        if (!u) break;
        done[*u] = true;
        if (*u == y) break;
        for (std::size_t v = 0; v < n; ++v) {
            if (done[v] || !m.has_edge(*u, v)) continue;
            const auto edge = *u == x ? ExtendedWeight::infinity() : ExtendedWeight::finite(m.weight(*u, v));
            const auto through = std::min(*best[*u], edge);
            if (!best[v] || through > *best[v]) best[v] = through;
        }
    }
    return best[y] ? *best[y] : ExtendedWeight::finite(0);
}

} // namespace detail

bool reachable(const MarginGraph& m, const Candidate& x, const Candidate& y) {
    const auto i = m.index_of(x);
    const auto j = m.index_of(y);
    return detail::reachable_from(m, i)[j] != 0;
}

std::vector<Path> simple_cycles(const MarginGraph& m) {
    const std::size_t n = m.size();
    std::vector<Path> out;
    std::vector<std::size_t> stack;
    std::vector<bool> on_stack(n, false);

    // Cycles rooted at `start` use only nodes with larger index.
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t u) {
        for (std::size_t v = start; v < n; ++v) {
            if (!m.has_edge(u, v)) continue;
            if (v == start) {
                Path p;
                for (auto k : stack) p.nodes.push_back(m.nodes()[k]);
                p.nodes.push_back(m.nodes()[start]);
                out.push_back(std::move(p));
            } else if (!on_stack[v]) {
                on_stack[v] = true;
                stack.push_back(v);
                extend(start, v);
                stack.pop_back();
                on_stack[v] = false;
            }
        }
    };
    for (std::size_t s = 0; s < n; ++s) {
        stack = {s};
        on_stack[s] = true;
        extend(s, s);
        on_stack[s] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

int path_strength(const MarginGraph& m, const Path& path) {
    if (path.nodes.size() < 2) fail_input("a path needs at least two nodes");
    int strength = 0;
    for (std::size_t k = 0; k + 1 < path.nodes.size(); ++k) {
        const int w = m.weight(m.index_of(path.nodes[k]), m.index_of(path.nodes[k + 1]));
        if (w <= 0) fail_input("not an edge: " + path.nodes[k].name() + "->" + path.nodes[k + 1].name());
        strength = k == 0 ? w : std::min(strength, w);
    }
    return strength;
}

int widest_path_strength(const MarginGraph& m, const Candidate& x, const Candidate& y) {
    const auto i = m.index_of(x);
    const auto j = m.index_of(y);
    if (i == j) fail_input("widest path needs distinct endpoints");
    return detail::widest_paths(m)[i * m.size() + j];
}

ExtendedWeight ignore_source_strength(const MarginGraph& m, const Candidate& x, const Candidate& y) {
    const auto i = m.index_of(x);
    const auto j = m.index_of(y);
    if (i == j) fail_input("ignore-source strength needs distinct endpoints");
    return detail::ignore_source_strength(m, i, j);
}

namespace {

bool connected_without(const MarginGraph& m, std::size_t src, std::size_t dst, const std::vector<char>& removed) {
    const std::size_t n = m.size();
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{src};
    seen[src] = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (seen[v] || !m.has_edge(u, v) || removed[u * n + v]) continue;
            if (v == dst) return true;
            seen[v] = 1;
            stack.push_back(v);
        }
    }
    return false;
}

} // namespace

EdgeSet minimal_cut(const MarginGraph& m, const Candidate& src, const Candidate& dst, int max_weight,
                    bool exclude_source_edges) {
    const auto s = m.index_of(src);
    const auto t = m.index_of(dst);
    if (s == t) fail_input("cut endpoints must differ");
    const std::size_t n = m.size();
    std::vector<char> cut(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (exclude_source_edges && i == s) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (m.has_edge(i, j) && m.weight(i, j) <= max_weight) cut[i * n + j] = 1;
    }
    if (connected_without(m, s, t, cut))
        throw Error(ErrorKind::NoCut, "no cut from '" + src.name() + "' to '" + dst.name() +
                                          "' within weight " + std::to_string(max_weight));
    // Row-major index order is the sorted edge order.
    for (std::size_t k = 0; k < cut.size(); ++k) {
        if (!cut[k]) continue;
        cut[k] = 0;
        if (connected_without(m, s, t, cut)) cut[k] = 1;
    }
    EdgeSet out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (cut[i * n + j]) out.emplace(m.nodes()[i], m.nodes()[j]);
    return out;
}

Ballot linear_extension(const EdgeSet& relation, const CandidateSet& nodes) {
    return linear_extension(relation, nodes,
                            [](const std::vector<std::size_t>& available, const std::vector<bool>&) {
                                return *std::min_element(available.begin(), available.end());
                            });
}

Ballot linear_extension(const EdgeSet& relation, const CandidateSet& nodes, const ExtensionPicker& pick) {
    const CandidateSet sorted = make_candidate_set(nodes);
    const std::size_t n = sorted.size();
    auto idx = [&](const Candidate& c) {
        auto it = std::lower_bound(sorted.begin(), sorted.end(), c);
        if (it == sorted.end() || *it != c) fail_input("relation mentions '" + c.name() + "' outside the node set");
        return static_cast<std::size_t>(it - sorted.begin());
    };
    std::vector<std::vector<std::size_t>> succ(n);
    std::vector<std::size_t> indegree(n, 0);
    for (const auto& [a, b] : relation) {
        const auto i = idx(a);
        const auto j = idx(b);
        if (i == j) throw Error(ErrorKind::Cyclic, "relation is reflexive at '" + a.name() + "'");
        succ[i].push_back(j);
        ++indegree[j];
    }
    std::vector<bool> placed(n, false);
    std::vector<Candidate> order;
    order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<std::size_t> available;
        for (std::size_t i = 0; i < n; ++i)
            if (!placed[i] && indegree[i] == 0) available.push_back(i);
        if (available.empty()) {
            // Every remaining node has a predecessor: walk backwards to a cycle.
            std::size_t u = 0;
            while (placed[u]) ++u;
            std::vector<std::size_t> trail;
            std::vector<int> pos(n, -1);
            while (pos[u] < 0) {
                pos[u] = static_cast<int>(trail.size());
                trail.push_back(u);
                for (std::size_t v = 0; v < n; ++v) {
                    if (placed[v]) continue;
                    if (std::find(succ[v].begin(), succ[v].end(), u) != succ[v].end()) {
                        u = v;
                        break;
                    }
                }
            }
            std::string witness;
            for (auto k = trail.size(); k-- > static_cast<std::size_t>(pos[u]);) witness += sorted[trail[k]].name() + " -> ";
            witness += sorted[trail.back()].name();
            throw Error(ErrorKind::Cyclic, "relation has a cycle: " + witness);
        }
        const auto chosen = pick(available, placed);
        if (std::find(available.begin(), available.end(), chosen) == available.end())
            throw Error(ErrorKind::InvariantViolation, "extension picker returned an unavailable node");
        placed[chosen] = true;
        order.push_back(sorted[chosen]);
        for (auto j : succ[chosen]) --indegree[j];
    }
    return Ballot::linear(std::move(order));
}

} // namespace splitcycle
