#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "splitcycle/margin_graph.hpp"

namespace splitcycle {

// Non-negative integer or +infinity.
class ExtendedWeight {
public:
    constexpr ExtendedWeight() = default;
    static constexpr ExtendedWeight finite(std::int64_t v) { return ExtendedWeight(v, false); }
    static constexpr ExtendedWeight infinity() { return ExtendedWeight(0, true); }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    // Only meaningful when finite.
    constexpr std::int64_t value() const noexcept { return value_; }

    friend constexpr bool operator==(ExtendedWeight a, ExtendedWeight b) noexcept {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtendedWeight a, ExtendedWeight b) noexcept {
        if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
        return a.value_ <=> b.value_;
    }

    std::string to_string() const { return infinite_ ? "inf" : std::to_string(value_); }

private:
    constexpr ExtendedWeight(std::int64_t v, bool inf) : value_(v), infinite_(inf) {}
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

// At least two nodes; a cycle repeats its first node at the end.
struct Path {
    std::vector<Candidate> nodes;
    friend auto operator<=>(const Path&, const Path&) = default;
    friend bool operator==(const Path&, const Path&) = default;
};

MarginGraph restrict_to_k(const MarginGraph& m, int k);

// Path of length >= 1 from x to y.
bool reachable(const MarginGraph& m, const Candidate& x, const Candidate& y);

// Every simple cycle once, rotated to start at its least node, sorted.
std::vector<Path> simple_cycles(const MarginGraph& m);

int path_strength(const MarginGraph& m, const Path& path);
int widest_path_strength(const MarginGraph& m, const Candidate& x, const Candidate& y);
ExtendedWeight ignore_source_strength(const MarginGraph& m, const Candidate& x, const Candidate& y);

// Subset-minimal set of edges with weight <= max_weight whose removal
// disconnects src from dst.
EdgeSet minimal_cut(const MarginGraph& m, const Candidate& src, const Candidate& dst, int max_weight,
                    bool exclude_source_edges);

// Picks which of the currently minimal nodes to place next. Receives indices
// into the node set and the placed flags; returns one of `available`.
using ExtensionPicker =
    std::function<std::size_t(const std::vector<std::size_t>& available, const std::vector<bool>& placed)>;

// Topological order of an acyclic relation, least available name first.
Ballot linear_extension(const EdgeSet& relation, const CandidateSet& nodes);
Ballot linear_extension(const EdgeSet& relation, const CandidateSet& nodes, const ExtensionPicker& pick);

// Index-level helpers used by the methods.
namespace detail {

// reach[i*n+j]: a path of length >= 1 from i to j using edges of weight >= min_weight.
std::vector<char> transitive_closure(const MarginGraph& m, int min_weight = 1);
// Nodes reachable from src by a path of length >= 1 using edges of weight >= min_weight.
std::vector<char> reachable_from(const MarginGraph& m, std::size_t src, int min_weight = 1);
// widest[i*n+j]: maximum bottleneck over paths i -> j, 0 when none (also on the diagonal).
std::vector<int> widest_paths(const MarginGraph& m);
ExtendedWeight ignore_source_strength(const MarginGraph& m, std::size_t x, std::size_t y);

} // namespace detail

} // namespace splitcycle
