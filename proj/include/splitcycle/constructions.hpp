#pragma once

#include <map>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "splitcycle/margin_graph.hpp"

namespace splitcycle {

// Linear profile whose margin graph is exactly `m`. Requires all weights to
// share parity, and even parity when some pair has no edge.
Profile debord_realize(const MarginGraph& m);

// Pure cycle x -> y -> z1 -> ... -> zn -> x, every edge weighing `margin`.
struct CycleShape {
    std::vector<Candidate> cycle;  // x, y, z1, ..., zn with n >= 1
    int margin = 2;                // even, positive
};

Profile cycle_profile(const CycleShape& shape);
Profile cycle_profile_tied(const CycleShape& shape);
// x -> y, y -> z1, ..., zn -> x.
std::map<Candidate, Candidate> cycle_rotation(const CycleShape& shape);

// One linear ballot L with (x, y) still a split-cycle defeat in p + L and
// margin(x, y) lowered by one. Needs (x, y) in sc(p) and margin(x, y) > 2.
Ballot lemma_ballot(const Profile& p, const Candidate& x, const Candidate& y);

struct ReductionSequence {
    Profile base;                // p itself, or 2p when p has ties
    std::vector<Ballot> ballots; // margin(base, x, y) - 2 of them, or none
};

ReductionSequence coherent_reduction_sequence(const Profile& p, const Candidate& x, const Candidate& y);

enum class FixtureId {
    Fig1,
    Ex210,
    IiaP,
    IiaPc,
    Fig3G,
    Fig4G0,
    ScwcP,
    ScwcQ,
    IscG,
    OcaG,
    RcG,
    MmP,
    MmPc,
    IrvP,
    IrvQ,
};

std::string_view to_string(FixtureId id) noexcept;
std::optional<FixtureId> parse_fixture(std::string_view token) noexcept;
const std::vector<FixtureId>& all_fixtures();

using Fixture = std::variant<Profile, MarginGraph>;
Fixture paper_fixture(FixtureId id);
// Graph fixtures are realized with debord_realize.
Profile fixture_profile(FixtureId id);
MarginGraph fixture_graph(FixtureId id);

} // namespace splitcycle
