#pragma once

#include <set>
#include <utility>
#include <vector>

#include "splitcycle/election.hpp"

namespace splitcycle {

using Edge = std::pair<Candidate, Candidate>;
using EdgeSet = std::set<Edge>;

struct WeightedEdge {
    Candidate from;
    Candidate to;
    int weight;
    friend auto operator<=>(const WeightedEdge&, const WeightedEdge&) = default;
    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Asymmetric digraph with positive integer weights. Stored densely:
// weight(i, j) > 0 iff i -> j is an edge.
class MarginGraph {
public:
    MarginGraph(CandidateSet nodes, const std::vector<WeightedEdge>& edges);

    const CandidateSet& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }
    std::optional<std::size_t> find(const Candidate& c) const noexcept;
    std::size_t index_of(const Candidate& c) const;

    int weight(std::size_t i, std::size_t j) const noexcept { return weights_[i * nodes_.size() + j]; }
    bool has_edge(std::size_t i, std::size_t j) const noexcept { return weight(i, j) > 0; }
    // Signed margin: weight(i,j) - weight(j,i).
    int margin(std::size_t i, std::size_t j) const noexcept { return weight(i, j) - weight(j, i); }
    int margin(const Candidate& x, const Candidate& y) const { return margin(index_of(x), index_of(y)); }

    std::vector<WeightedEdge> edges() const;
    std::size_t edge_count() const noexcept;
    int max_weight() const noexcept;

    friend bool operator==(const MarginGraph&, const MarginGraph&) = default;

private:
    MarginGraph(CandidateSet nodes, std::vector<int> weights);
    friend MarginGraph margin_graph(const Profile& p);
    friend MarginGraph restrict_to_k(const MarginGraph& m, int k);

    CandidateSet nodes_;
    std::vector<int> weights_;
};

MarginGraph margin_graph(const Profile& p);

// Asymmetric, irreflexive relation over a node set.
class DefeatRelation {
public:
    explicit DefeatRelation(CandidateSet nodes);
    DefeatRelation(CandidateSet nodes, const std::vector<Edge>& pairs);

    const CandidateSet& nodes() const noexcept { return nodes_; }
    std::size_t size() const noexcept { return nodes_.size(); }

    bool contains(std::size_t i, std::size_t j) const noexcept { return bits_[i * nodes_.size() + j] != 0; }
    bool contains(const Candidate& x, const Candidate& y) const;
    // Rejects self-pairs and pairs whose converse is present.
    void add(std::size_t i, std::size_t j);

    std::vector<Edge> pairs() const;  // sorted
    std::size_t pair_count() const noexcept;
    bool empty() const noexcept { return pair_count() == 0; }
    bool is_acyclic() const;
    bool subset_of(const DefeatRelation& other) const;

    friend bool operator==(const DefeatRelation&, const DefeatRelation&) = default;

private:
    std::size_t index_of(const Candidate& c) const;

    CandidateSet nodes_;
    std::vector<char> bits_;
};

CandidateSet winners(const DefeatRelation& d);

} // namespace splitcycle
