#pragma once

#include <string>
#include <string_view>

#include "splitcycle/margin_graph.hpp"

namespace splitcycle {

// Profile file:
//   candidates: a b c
//   3: a > b = c
//   c > b > a
// Blank lines and lines starting with '#' are ignored. Throws ParseError.
Profile parse_profile(std::string_view text);
// Consecutive voters with equal ballots share one line, so parsing the output
// of a profile with voter ids 0..n-1 gives the profile back.
std::string format_profile(const Profile& p);

// Tournament file:
//   nodes: a b c
//   a b 4
MarginGraph parse_tournament(std::string_view text);
std::string format_tournament(const MarginGraph& m);

Ballot parse_ballot(std::string_view text, const CandidateSet& candidates);

std::string margin_graph_dot(const MarginGraph& m, std::string_view graph_name = "margins");
// Defeat edges are labelled "D".
std::string defeat_graph_dot(const DefeatRelation& d, std::string_view graph_name = "defeats");

} // namespace splitcycle
