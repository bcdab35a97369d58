#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace splitcycle {

// A candidate name: non-empty, no whitespace, none of '>', '=', ':', and no
// leading '#'.
class Candidate {
public:
    explicit Candidate(std::string name);

    const std::string& name() const noexcept { return name_; }

    friend auto operator<=>(const Candidate&, const Candidate&) = default;
    friend bool operator==(const Candidate&, const Candidate&) = default;

    static bool valid_name(std::string_view name) noexcept;

private:
    std::string name_;
};

// Sorted, duplicate-free.
using CandidateSet = std::vector<Candidate>;

CandidateSet make_candidate_set(std::vector<Candidate> items);
CandidateSet make_candidate_set(std::initializer_list<std::string_view> names);
bool contains(const CandidateSet& set, const Candidate& c);

struct VoterId {
    std::uint64_t value = 0;
    friend auto operator<=>(const VoterId&, const VoterId&) = default;
};

enum class BallotKind { Linear, Weak };

// Strict weak order stored as a sequence of tiers, best first. Each tier is
// non-empty and sorted; tiers are pairwise disjoint.
class Ballot {
public:
    using Tier = std::vector<Candidate>;

    explicit Ballot(std::vector<Tier> tiers);

    static Ballot linear(std::vector<Candidate> order);
    // The single-tier ballot: every candidate tied.
    static Ballot indifferent(const CandidateSet& candidates);

    const std::vector<Tier>& tiers() const noexcept { return tiers_; }
    CandidateSet candidates() const;
    std::size_t size() const noexcept;
    bool is_linear() const noexcept;

    bool contains(const Candidate& c) const noexcept;
    std::size_t tier_of(const Candidate& c) const;
    bool prefers(const Candidate& x, const Candidate& y) const;
    bool first_uniquely(const Candidate& c) const noexcept;
    bool last_uniquely(const Candidate& c) const noexcept;

    Ballot restricted_to(const CandidateSet& keep) const;
    std::string to_string() const;

    friend auto operator<=>(const Ballot&, const Ballot&) = default;
    friend bool operator==(const Ballot&, const Ballot&) = default;

private:
    std::vector<Tier> tiers_;
};

Ballot reverse(const Ballot& b);
// Dispatches on the ballot's own linearity.
Ballot move_up_one_place(const Ballot& b, const Candidate& x);
// Linear: swap with the predecessor. Weak: break out of a tie, or merge into
// the tier above.
Ballot move_up_one_place(const Ballot& b, const Candidate& x, BallotKind semantics);

using VoterBallot = std::pair<VoterId, Ballot>;

class Profile {
public:
    Profile(CandidateSet candidates, std::vector<VoterBallot> voters);
    // Voter ids 0..n-1 in the given order.
    static Profile from_ballots(CandidateSet candidates, std::vector<Ballot> ballots);

    const CandidateSet& candidates() const noexcept { return candidates_; }
    const std::vector<VoterBallot>& voters() const noexcept { return voters_; }
    std::size_t num_candidates() const noexcept { return candidates_.size(); }
    std::size_t num_voters() const noexcept { return voters_.size(); }

    const Ballot& ballot(VoterId id) const;
    std::optional<std::size_t> find(const Candidate& c) const noexcept;
    std::size_t index_of(const Candidate& c) const;

    // Margin by candidate index; margin(i,i) == 0.
    int margin(std::size_t i, std::size_t j) const noexcept { return margins_[i * candidates_.size() + j]; }
    bool is_linear() const noexcept { return linear_; }

    std::map<Ballot, std::size_t> anonymized() const;

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.candidates_ == b.candidates_ && a.voters_ == b.voters_;
    }

private:
    CandidateSet candidates_;
    std::vector<VoterBallot> voters_;
    std::vector<int> margins_;
    bool linear_ = true;
};

int margin(const Profile& p, const Candidate& x, const Candidate& y);

Profile restrict(const Profile& p, const CandidateSet& keep);
// Voter id v becomes 2v and 2v+1.
Profile double_profile(const Profile& p);
// New voters get ids max+1, max+2, ...
Profile add_ballots(const Profile& p, std::span<const Ballot> ballots);
Profile add_ballot(const Profile& p, const Ballot& ballot);
Profile replace_ballot(const Profile& p, VoterId voter, Ballot ballot);

// pi must be injective with domain exactly X(p).
Profile permute_candidates(const Profile& p, const std::map<Candidate, Candidate>& pi);
// pi must be a bijection on V(p); the result gives voter i the ballot of pi(i).
Profile permute_voters(const Profile& p, const std::map<VoterId, VoterId>& pi);

enum class Parity { Even, Odd };
Parity parity_class(const Profile& p);

} // namespace splitcycle
