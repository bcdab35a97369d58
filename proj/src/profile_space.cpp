#include <algorithm>
#include <limits>
#include <string>

#include "splitcycle/axioms.hpp"
#include "splitcycle/error.hpp"

namespace splitcycle {

CandidateSet default_candidates(std::size_t count) {
    if (count == 0 || count > 26) fail_input("candidate count must be between 1 and 26");
    CandidateSet out;
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

std::vector<Ballot> all_ballots(const CandidateSet& candidates, BallotKind kind) {
    std::vector<Ballot> out;
    const std::size_t n = candidates.size();
    if (kind == BallotKind::Linear) {
        std::vector<Candidate> order = candidates;
        do {
            out.push_back(Ballot::linear(order));
        } while (std::next_permutation(order.begin(), order.end()));
        return out;
    }
    // Tier assignments whose used tiers form a prefix 0..t-1.
    std::vector<std::size_t> tier(n, 0);
    for (;;) {
        std::size_t used = 0;
        std::vector<bool> hit(n, false);
        for (auto t : tier) hit[t] = true;
        while (used < n && hit[used]) ++used;
        if (std::all_of(tier.begin(), tier.end(), [&](std::size_t t) { return t < used; })) {
            std::vector<Ballot::Tier> tiers(used);
            for (std::size_t i = 0; i < n; ++i) tiers[tier[i]].push_back(candidates[i]);
            out.emplace_back(std::move(tiers));
        }
        std::size_t k = n;
        while (k > 0 && ++tier[k - 1] == n) tier[--k] = 0;
        if (k == 0) break;
    }
    return out;
}

ProfileSpace::ProfileSpace(const SearchConfig& cfg)
    : candidates_(default_candidates(cfg.candidates)), voters_(cfg.voters), size_(1) {
    if (voters_ == 0) fail_input("voter count must be positive");
    // Bound the ballot list before materializing it.
    std::uint64_t ballot_count = 1;
    for (std::size_t i = 2; i <= cfg.candidates; ++i) ballot_count *= i;
    if (cfg.ballots == BallotKind::Weak) ballot_count *= 1ULL << (cfg.candidates - 1);  // upper bound on ordered partitions
    if (ballot_count > cfg.ceiling)
        throw Error(ErrorKind::OracleBound, "profile space exceeds the exhaustive ceiling");
    ballots_ = all_ballots(candidates_, cfg.ballots);
    for (std::size_t v = 0; v < voters_; ++v) {
        if (size_ > cfg.ceiling / ballots_.size())
            throw Error(ErrorKind::OracleBound, "profile space exceeds the exhaustive ceiling of " +
                                                    std::to_string(cfg.ceiling) + " profiles");
        size_ *= ballots_.size();
    }
}

Profile ProfileSpace::at(std::uint64_t index) const {
    if (index >= size_) fail_input("profile index out of range");
    std::vector<Ballot> chosen;
    chosen.reserve(voters_);
    // Voter 0 is the most significant digit.
    std::vector<std::size_t> digits(voters_);
    for (std::size_t v = voters_; v-- > 0;) {
        digits[v] = static_cast<std::size_t>(index % ballots_.size());
        index /= ballots_.size();
    }
    for (auto d : digits) chosen.push_back(ballots_[d]);
    return Profile::from_ballots(candidates_, std::move(chosen));
}

ProfileSpace enumerate_profiles(const SearchConfig& cfg) { return ProfileSpace(cfg); }

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    // splitmix64 finalizer over the pair.
    std::uint64_t z = seed * 0x9E3779B97F4A7C15ULL + index + 0x632BE59BD9B4E019ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return std::mt19937_64(z);
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) fail_input("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit) return r % bound;
    }
}

Ballot random_ballot(const CandidateSet& candidates, BallotKind kind, std::mt19937_64& rng) {
    std::vector<Candidate> order = candidates;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    if (kind == BallotKind::Linear) return Ballot::linear(std::move(order));
    std::vector<Ballot::Tier> tiers{{order.front()}};
    for (std::size_t i = 1; i < order.size(); ++i) {
        if (uniform_below(rng, 2) == 0)
            tiers.back().push_back(order[i]);
        else
            tiers.push_back({order[i]});
    }
    return Ballot(std::move(tiers));
}

Profile random_profile(const SearchConfig& cfg, std::uint64_t index) {
    auto rng = trial_rng(cfg.seed, index);
    const std::size_t low = std::min<std::size_t>(2, cfg.candidates);
    const std::size_t k = low + static_cast<std::size_t>(uniform_below(rng, cfg.candidates - low + 1));
    const std::size_t n = 1 + static_cast<std::size_t>(uniform_below(rng, cfg.voters));
    const auto candidates = default_candidates(k);
    std::vector<Ballot> ballots;
    ballots.reserve(n);
    for (std::size_t v = 0; v < n; ++v) ballots.push_back(random_ballot(candidates, cfg.ballots, rng));
    return Profile::from_ballots(candidates, std::move(ballots));
}

} // namespace splitcycle
