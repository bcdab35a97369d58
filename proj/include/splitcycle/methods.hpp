#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "splitcycle/margin_graph.hpp"

namespace splitcycle {

enum class MethodId {
    SplitCycle,
    RankedPairs,
    BeatPath,
    Gocha,
    WeightedCovering,
    RightCovering,
    Minimax,
    Scwc,
    Isc,
    Oca,
    Irv,
};

std::string_view to_string(MethodId id) noexcept;
std::optional<MethodId> parse_method(std::string_view token) noexcept;
const std::vector<MethodId>& all_methods();
// Every method except irv is a function of the margin graph.
bool has_defeat_relation(MethodId id) noexcept;

inline constexpr std::size_t kDefaultOracleBound = 8;
inline constexpr std::uint64_t kDefaultTieBreakBound = 40320;

// Fast path: restrict to the edge's weight, then ask for a path back.
DefeatRelation split_cycle(const MarginGraph& m);
// Enumerates simple cycles; throws OracleBound above `node_bound` nodes.
DefeatRelation split_cycle_by_cycles(const MarginGraph& m, std::size_t node_bound = kDefaultOracleBound);

// Four equivalent characterizations of a split-cycle defeat of x over y:
//   AnyCycle:       margin beats the splitting number of every cycle (walks allowed) through x and y
//   SimpleCycle:    the same over simple cycles
//   AdjacentCycle:  the same over simple cycles in which y immediately follows x
//   PathStrength:   margin beats the strength of every path from y to x
enum class SplitCycleCondition { AnyCycle, SimpleCycle, AdjacentCycle, PathStrength };
DefeatRelation split_cycle_by_condition(const MarginGraph& m, SplitCycleCondition condition,
                                        std::size_t node_bound = kDefaultOracleBound);

// Ordered pairs with non-negative margin; zero-margin pairs appear both ways.
std::vector<Edge> ranked_pairs_domain(const MarginGraph& m);
// `tiebreak` is a linear order over ranked_pairs_domain(m), best first.
DefeatRelation ranked_pairs_single(const MarginGraph& m, const std::vector<Edge>& tiebreak);
// Intersection over every ordering of the equal-margin groups.
DefeatRelation ranked_pairs(const MarginGraph& m, std::uint64_t bound = kDefaultTieBreakBound);

DefeatRelation beat_path(const MarginGraph& m);
DefeatRelation gocha(const MarginGraph& m);
DefeatRelation weighted_covering(const MarginGraph& m);
DefeatRelation right_covering(const MarginGraph& m);

// max over z != x of margin(z, x); 0 for a single node. May be negative.
std::vector<int> weakness(const MarginGraph& m);
DefeatRelation minimax_vccr(const MarginGraph& m);
CandidateSet minimax_winners(const MarginGraph& m);

DefeatRelation scwc(const MarginGraph& m);
DefeatRelation isc(const MarginGraph& m);
DefeatRelation oca(const MarginGraph& m);

// Linear profiles only.
CandidateSet irv_winners(const Profile& p);

// Throws InvalidInput for irv.
DefeatRelation defeats(MethodId id, const MarginGraph& m);

struct MethodOutcome {
    std::optional<DefeatRelation> defeats;  // absent for irv
    CandidateSet winners;
};

MethodOutcome evaluate(MethodId id, const Profile& p);
MethodOutcome evaluate(MethodId id, const Profile& p, const MarginGraph& m);

} // namespace splitcycle
