#include "splitcycle/margin_graph.hpp"

#include <algorithm>

#include "splitcycle/error.hpp"

namespace splitcycle {

namespace {

std::size_t lookup(const CandidateSet& nodes, const Candidate& c) {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), c);
    if (it == nodes.end() || *it != c) fail_input("unknown node '" + c.name() + "'");
    return static_cast<std::size_t>(it - nodes.begin());
}

} // namespace

MarginGraph::MarginGraph(CandidateSet nodes, const std::vector<WeightedEdge>& edges)
    : nodes_(make_candidate_set(std::move(nodes))), weights_(nodes_.size() * nodes_.size(), 0) {
    if (nodes_.empty()) fail_input("margin graph has no nodes");
    const std::size_t n = nodes_.size();
    for (const auto& e : edges) {
        const auto i = lookup(nodes_, e.from);
        const auto j = lookup(nodes_, e.to);
        if (i == j) fail_input("self-edge on '" + e.from.name() + "'");
        if (e.weight < 1) fail_input("edge " + e.from.name() + "->" + e.to.name() + " has non-positive weight");
        if (weights_[i * n + j] != 0) fail_input("duplicate edge " + e.from.name() + "->" + e.to.name());
        if (weights_[j * n + i] != 0)
            fail_input("edges in both directions between '" + e.from.name() + "' and '" + e.to.name() + "'");
        weights_[i * n + j] = e.weight;
    }
}

MarginGraph::MarginGraph(CandidateSet nodes, std::vector<int> weights)
    : nodes_(std::move(nodes)), weights_(std::move(weights)) {}

std::optional<std::size_t> MarginGraph::find(const Candidate& c) const noexcept {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), c);
    if (it == nodes_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t MarginGraph::index_of(const Candidate& c) const { return lookup(nodes_, c); }

std::vector<WeightedEdge> MarginGraph::edges() const {
    std::vector<WeightedEdge> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (weight(i, j) > 0) out.push_back({nodes_[i], nodes_[j], weight(i, j)});
    return out;
}

std::size_t MarginGraph::edge_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(weights_.begin(), weights_.end(), [](int w) { return w > 0; }));
}

int MarginGraph::max_weight() const noexcept {
    return weights_.empty() ? 0 : *std::max_element(weights_.begin(), weights_.end());
}

MarginGraph margin_graph(const Profile& p) {
    const std::size_t n = p.num_candidates();
    std::vector<int> w(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            w[i * n + j] = std::max(0, p.margin(i, j));
    return MarginGraph(p.candidates(), std::move(w));
}

// ---- DefeatRelation ----

DefeatRelation::DefeatRelation(CandidateSet nodes)
    : nodes_(make_candidate_set(std::move(nodes))), bits_(nodes_.size() * nodes_.size(), 0) {}

DefeatRelation::DefeatRelation(CandidateSet nodes, const std::vector<Edge>& pairs)
    : DefeatRelation(std::move(nodes)) {
    for (const auto& [x, y] : pairs) add(index_of(x), index_of(y));
}

std::size_t DefeatRelation::index_of(const Candidate& c) const { return lookup(nodes_, c); }

bool DefeatRelation::contains(const Candidate& x, const Candidate& y) const {
    return contains(index_of(x), index_of(y));
}

void DefeatRelation::add(std::size_t i, std::size_t j) {
    const std::size_t n = size();
    if (i >= n || j >= n) fail_input("defeat pair index out of range");
    if (i == j) throw Error(ErrorKind::InvariantViolation, "self-defeat on '" + nodes_[i].name() + "'");
    if (bits_[j * n + i])
        throw Error(ErrorKind::InvariantViolation,
                    "defeat relation not asymmetric at " + nodes_[i].name() + "," + nodes_[j].name());
    bits_[i * n + j] = 1;
}

std::vector<Edge> DefeatRelation::pairs() const {
    std::vector<Edge> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (contains(i, j)) out.emplace_back(nodes_[i], nodes_[j]);
    return out;
}

std::size_t DefeatRelation::pair_count() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

bool DefeatRelation::is_acyclic() const {
    // Kahn's algorithm.
    const std::size_t n = size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (contains(i, j)) ++indegree[j];
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0) ready.push_back(i);
    std::size_t removed = 0;
    while (!ready.empty()) {
        const auto i = ready.back();
        ready.pop_back();
        ++removed;
        for (std::size_t j = 0; j < n; ++j)
            if (contains(i, j) && --indegree[j] == 0) ready.push_back(j);
    }
    return removed == n;
}

bool DefeatRelation::subset_of(const DefeatRelation& other) const {
    if (nodes_ != other.nodes_) return false;
    for (std::size_t k = 0; k < bits_.size(); ++k)
        if (bits_[k] && !other.bits_[k]) return false;
    return true;
}

CandidateSet winners(const DefeatRelation& d) {
    CandidateSet out;
    const std::size_t n = d.size();
    for (std::size_t j = 0; j < n; ++j) {
        bool beaten = false;
        for (std::size_t i = 0; i < n && !beaten; ++i) beaten = d.contains(i, j);
        if (!beaten) out.push_back(d.nodes()[j]);
    }
    return out;
}

} // namespace splitcycle
