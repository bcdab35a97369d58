#include "splitcycle/election.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "splitcycle/error.hpp"

namespace splitcycle {

bool Candidate::valid_name(std::string_view name) noexcept {
    if (name.empty() || name.front() == '#') return false;
    for (char ch : name) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '>' || ch == '=' || ch == ':') return false;
    }
    return true;
}

Candidate::Candidate(std::string name) : name_(std::move(name)) {
    if (!valid_name(name_)) fail_input("invalid candidate name '" + name_ + "'");
}

CandidateSet make_candidate_set(std::vector<Candidate> items) {
    std::sort(items.begin(), items.end());
    if (std::adjacent_find(items.begin(), items.end()) != items.end()) fail_input("duplicate candidate in set");
    return items;
}

CandidateSet make_candidate_set(std::initializer_list<std::string_view> names) {
    std::vector<Candidate> items;
    for (auto n : names) items.emplace_back(std::string(n));
    return make_candidate_set(std::move(items));
}

bool contains(const CandidateSet& set, const Candidate& c) {
    return std::binary_search(set.begin(), set.end(), c);
}

// ---- Ballot ----

Ballot::Ballot(std::vector<Tier> tiers) : tiers_(std::move(tiers)) {
    if (tiers_.empty()) fail_input("ballot has no tiers");
    std::vector<Candidate> seen;
    for (auto& tier : tiers_) {
        if (tier.empty()) fail_input("ballot has an empty tier");
        std::sort(tier.begin(), tier.end());
        seen.insert(seen.end(), tier.begin(), tier.end());
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        fail_input("candidate appears twice in ballot " + to_string());
}

Ballot Ballot::linear(std::vector<Candidate> order) {
    std::vector<Tier> tiers;
    tiers.reserve(order.size());
    for (auto& c : order) tiers.push_back({std::move(c)});
    return Ballot(std::move(tiers));
}

Ballot Ballot::indifferent(const CandidateSet& candidates) {
    return Ballot(std::vector<Tier>{candidates});
}

CandidateSet Ballot::candidates() const {
    CandidateSet out;
    for (const auto& tier : tiers_) out.insert(out.end(), tier.begin(), tier.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Ballot::size() const noexcept {
    std::size_t n = 0;
    for (const auto& tier : tiers_) n += tier.size();
    return n;
}

bool Ballot::is_linear() const noexcept {
    return std::all_of(tiers_.begin(), tiers_.end(), [](const Tier& t) { return t.size() == 1; });
}

bool Ballot::contains(const Candidate& c) const noexcept {
    for (const auto& tier : tiers_)
        if (std::binary_search(tier.begin(), tier.end(), c)) return true;
    return false;
}

std::size_t Ballot::tier_of(const Candidate& c) const {
    for (std::size_t i = 0; i < tiers_.size(); ++i)
        if (std::binary_search(tiers_[i].begin(), tiers_[i].end(), c)) return i;
    fail_input("candidate '" + c.name() + "' not on ballot");
}

bool Ballot::prefers(const Candidate& x, const Candidate& y) const {
    return tier_of(x) < tier_of(y);
}

bool Ballot::first_uniquely(const Candidate& c) const noexcept {
    return tiers_.front().size() == 1 && tiers_.front().front() == c;
}

bool Ballot::last_uniquely(const Candidate& c) const noexcept {
    return tiers_.back().size() == 1 && tiers_.back().front() == c;
}

Ballot Ballot::restricted_to(const CandidateSet& keep) const {
    std::vector<Tier> out;
    for (const auto& tier : tiers_) {
        Tier kept;
        for (const auto& c : tier)
            if (splitcycle::contains(keep, c)) kept.push_back(c);
        if (!kept.empty()) out.push_back(std::move(kept));
    }
    if (out.empty()) fail_input("restriction leaves an empty ballot");
    return Ballot(std::move(out));
}

std::string Ballot::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < tiers_.size(); ++i) {
        if (i) s += " > ";
        for (std::size_t j = 0; j < tiers_[i].size(); ++j) {
            if (j) s += " = ";
            s += tiers_[i][j].name();
        }
    }
    return s;
}

Ballot reverse(const Ballot& b) {
    auto tiers = b.tiers();
    std::reverse(tiers.begin(), tiers.end());
    return Ballot(std::move(tiers));
}

Ballot move_up_one_place(const Ballot& b, const Candidate& x) {
    return move_up_one_place(b, x, b.is_linear() ? BallotKind::Linear : BallotKind::Weak);
}

Ballot move_up_one_place(const Ballot& b, const Candidate& x, BallotKind semantics) {
    const std::size_t t = b.tier_of(x);
    if (b.first_uniquely(x)) fail_input("candidate '" + x.name() + "' is already uniquely top");
    auto tiers = b.tiers();
    if (semantics == BallotKind::Linear) {
        if (!b.is_linear()) fail_input("linear move-up on a ballot with ties");
        std::swap(tiers[t - 1], tiers[t]);
        return Ballot(std::move(tiers));
    }
    if (tiers[t].size() > 1) {
        std::erase(tiers[t], x);
        tiers.insert(tiers.begin() + static_cast<std::ptrdiff_t>(t), Ballot::Tier{x});
    } else {
        tiers[t - 1].push_back(x);
        tiers.erase(tiers.begin() + static_cast<std::ptrdiff_t>(t));
    }
    return Ballot(std::move(tiers));
}

// ---- Profile ----

Profile::Profile(CandidateSet candidates, std::vector<VoterBallot> voters)
    : candidates_(std::move(candidates)), voters_(std::move(voters)) {
    if (candidates_.empty()) fail_input("profile has no candidates");
    if (!std::is_sorted(candidates_.begin(), candidates_.end()) ||
        std::adjacent_find(candidates_.begin(), candidates_.end()) != candidates_.end())
        candidates_ = make_candidate_set(std::move(candidates_));
    if (voters_.empty()) fail_input("profile has no voters");
    std::sort(voters_.begin(), voters_.end(),
              [](const VoterBallot& a, const VoterBallot& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < voters_.size(); ++i)
        if (voters_[i - 1].first == voters_[i].first)
            fail_input("duplicate voter id " + std::to_string(voters_[i].first.value));

    const std::size_t n = candidates_.size();
    margins_.assign(n * n, 0);
    std::vector<std::size_t> rank(n);
    for (const auto& [id, ballot] : voters_) {
        if (ballot.size() != n) fail_input("ballot '" + ballot.to_string() + "' does not cover the candidate set");
        const auto& tiers = ballot.tiers();
        for (std::size_t t = 0; t < tiers.size(); ++t) {
            for (const auto& c : tiers[t]) {
                auto it = std::lower_bound(candidates_.begin(), candidates_.end(), c);
                if (it == candidates_.end() || *it != c)
                    fail_input("ballot mentions unknown candidate '" + c.name() + "'");
                const auto idx = static_cast<std::size_t>(it - candidates_.begin());
                rank[idx] = t;
            }
        }
        if (tiers.size() != n) linear_ = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rank[i] < rank[j]) {
                    ++margins_[i * n + j];
                    --margins_[j * n + i];
                }
    }
}

Profile Profile::from_ballots(CandidateSet candidates, std::vector<Ballot> ballots) {
    std::vector<VoterBallot> voters;
    voters.reserve(ballots.size());
    for (std::size_t i = 0; i < ballots.size(); ++i) voters.emplace_back(VoterId{i}, std::move(ballots[i]));
    return Profile(std::move(candidates), std::move(voters));
}

const Ballot& Profile::ballot(VoterId id) const {
    auto it = std::lower_bound(voters_.begin(), voters_.end(), id,
                               [](const VoterBallot& vb, VoterId v) { return vb.first < v; });
    if (it == voters_.end() || it->first != id) fail_input("unknown voter id " + std::to_string(id.value));
    return it->second;
}

std::optional<std::size_t> Profile::find(const Candidate& c) const noexcept {
    auto it = std::lower_bound(candidates_.begin(), candidates_.end(), c);
    if (it == candidates_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - candidates_.begin());
}

std::size_t Profile::index_of(const Candidate& c) const {
    auto i = find(c);
    if (!i) fail_input("unknown candidate '" + c.name() + "'");
    return *i;
}

std::map<Ballot, std::size_t> Profile::anonymized() const {
    std::map<Ballot, std::size_t> out;
    for (const auto& [id, b] : voters_) ++out[b];
    return out;
}

int margin(const Profile& p, const Candidate& x, const Candidate& y) {
    return p.margin(p.index_of(x), p.index_of(y));
}

Profile restrict(const Profile& p, const CandidateSet& keep) {
    if (keep.empty()) fail_input("restriction to the empty set");
    for (const auto& c : keep) p.index_of(c);
    CandidateSet sorted = make_candidate_set(keep);
    std::vector<VoterBallot> voters;
    voters.reserve(p.num_voters());
    for (const auto& [id, b] : p.voters()) voters.emplace_back(id, b.restricted_to(sorted));
    return Profile(std::move(sorted), std::move(voters));
}

Profile double_profile(const Profile& p) {
    std::vector<VoterBallot> voters;
    voters.reserve(2 * p.num_voters());
    for (const auto& [id, b] : p.voters()) {
        voters.emplace_back(VoterId{2 * id.value}, b);
        voters.emplace_back(VoterId{2 * id.value + 1}, b);
    }
    return Profile(p.candidates(), std::move(voters));
}

Profile add_ballots(const Profile& p, std::span<const Ballot> ballots) {
    auto voters = p.voters();
    std::uint64_t next = voters.back().first.value + 1;
    for (const auto& b : ballots) {
        if (b.candidates() != p.candidates()) fail_input("added ballot '" + b.to_string() + "' has a different candidate set");
        voters.emplace_back(VoterId{next++}, b);
    }
    return Profile(p.candidates(), std::move(voters));
}

Profile add_ballot(const Profile& p, const Ballot& ballot) {
    return add_ballots(p, std::span<const Ballot>(&ballot, 1));
}

Profile replace_ballot(const Profile& p, VoterId voter, Ballot ballot) {
    auto voters = p.voters();
    auto it = std::find_if(voters.begin(), voters.end(), [&](const VoterBallot& vb) { return vb.first == voter; });
    if (it == voters.end()) fail_input("unknown voter id " + std::to_string(voter.value));
    it->second = std::move(ballot);
    return Profile(p.candidates(), std::move(voters));
}

Profile permute_candidates(const Profile& p, const std::map<Candidate, Candidate>& pi) {
    if (pi.size() != p.num_candidates()) fail_input("candidate map is not total on the candidate set");
    std::set<Candidate> image;
    for (const auto& c : p.candidates()) {
        auto it = pi.find(c);
        if (it == pi.end()) fail_input("candidate map misses '" + c.name() + "'");
        if (!image.insert(it->second).second) fail_input("candidate map is not injective");
    }
    std::vector<VoterBallot> voters;
    voters.reserve(p.num_voters());
    for (const auto& [id, b] : p.voters()) {
        std::vector<Ballot::Tier> tiers;
        for (const auto& tier : b.tiers()) {
            Ballot::Tier t;
            for (const auto& c : tier) t.push_back(pi.at(c));
            tiers.push_back(std::move(t));
        }
        voters.emplace_back(id, Ballot(std::move(tiers)));
    }
    return Profile(CandidateSet(image.begin(), image.end()), std::move(voters));
}

Profile permute_voters(const Profile& p, const std::map<VoterId, VoterId>& pi) {
    if (pi.size() != p.num_voters()) fail_input("voter map is not total on the voter set");
    std::set<VoterId> image;
    for (const auto& [from, to] : pi) {
        p.ballot(from);
        p.ballot(to);
        if (!image.insert(to).second) fail_input("voter map is not injective");
    }
    std::vector<VoterBallot> voters;
    voters.reserve(p.num_voters());
    for (const auto& [id, b] : p.voters()) voters.emplace_back(id, p.ballot(pi.at(id)));
    return Profile(p.candidates(), std::move(voters));
}

Parity parity_class(const Profile& p) {
    if (!p.is_linear()) fail_input("parity class is defined for linear profiles only");
    return p.num_voters() % 2 == 0 ? Parity::Even : Parity::Odd;
}

} // namespace splitcycle
