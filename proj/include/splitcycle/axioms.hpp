#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "splitcycle/methods.hpp"

namespace splitcycle {

enum class AxiomId {
    Anonymity,
    Neutrality,
    Availability,
    Homogeneity,
    UpwardHomogeneity,
    DownwardHomogeneity,
    Monotonicity,
    Monotonicity2c,
    NeutralReversal,
    NeutralIndifference,
    Iia,
    WeakIia,
    CoherentIia,
    MajorityDefeat,
    CoherentDefeat,
    PositiveInvolvement,
    PositiveInvolvementInDefeat,
    FirstPlaceInvolvementInDefeat,
    NegativeInvolvement,
    NegativeInvolvementInDefeat,
    TolerantPositiveInvolvement,
    PureIia,
    HanssonPairwiseIndependence,
};

// Vccr judges the defeat relation; Vscc judges the winner set.
enum class Level { Vccr, Vscc };

std::string_view to_string(AxiomId id) noexcept;
std::string_view to_string(Level level) noexcept;
std::optional<AxiomId> parse_axiom(std::string_view token) noexcept;
std::optional<Level> parse_level(std::string_view token) noexcept;
const std::vector<AxiomId>& all_axioms();
bool applies_at(AxiomId id, Level level) noexcept;
// "There is an x such that ..." axioms: a violation needs evidence for every x.
bool is_existential(AxiomId id, Level level) noexcept;

enum class SearchMode { Exhaustive, Random };

// A fixed case tried before the search. `other` is the comparison profile for
// relational axioms; `ballot` is the only added ballot for involvement axioms.
struct SeedCase {
    Profile profile;
    std::optional<Profile> other;
    std::optional<Ballot> ballot;
};

struct SearchConfig {
    std::size_t candidates = 3;
    std::size_t voters = 3;
    BallotKind ballots = BallotKind::Linear;
    SearchMode mode = SearchMode::Exhaustive;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::uint64_t ceiling = 1'000'000;
    std::vector<SeedCase> seeds;
};

struct Evidence {
    Candidate challenger;
    Profile profile;
    std::string family;
};

// Everything needed to re-check a violation without the search.
struct Witness {
    std::string family;
    Profile before;
    std::optional<Profile> after;
    std::vector<Ballot> added;                // after == before + added
    std::optional<VoterId> voter;             // monotonicity: the voter whose ballot moved
    std::map<Candidate, Candidate> relabel;   // neutrality
    std::vector<Candidate> focus;             // (x, y), or the single candidate concerned
    std::vector<Evidence> evidence;           // existential axioms, one per challenger
};

enum class Verdict { NoCounterexample, Counterexample };

struct AxiomReport {
    Verdict verdict = Verdict::NoCounterexample;
    std::optional<Witness> witness;
    std::uint64_t trials = 0;
    std::vector<std::string> notes;
};

bool coherently_reduces(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y);
// Same voters, and every voter orders x and y the same way.
bool same_pair_restriction(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y);

AxiomReport check(MethodId method, Level level, AxiomId axiom, const SearchConfig& cfg);
AxiomReport check_coherent_iia_vccr(MethodId method, const SearchConfig& cfg);
// Looks for a profile where some defeat of g is not a defeat of f.
AxiomReport refines(MethodId f, MethodId g, const SearchConfig& cfg);

// Re-evaluates the axiom's defining condition from the witness alone.
bool replay(MethodId method, Level level, AxiomId axiom, const Witness& w);
bool replay_refinement(MethodId f, MethodId g, const Witness& w);

std::string format_report(const AxiomReport& report);

// ---- search spaces ----

// Candidates named a, b, c, ...
CandidateSet default_candidates(std::size_t count);
// Deterministic order: permutations in lexicographic order, or ordered set
// partitions by tier assignment.
std::vector<Ballot> all_ballots(const CandidateSet& candidates, BallotKind kind);

// Every profile with exactly `cfg.candidates` candidates and `cfg.voters`
// voters (ids 0..n-1). Throws OracleBound above cfg.ceiling.
class ProfileSpace {
public:
    explicit ProfileSpace(const SearchConfig& cfg);
    std::uint64_t size() const noexcept { return size_; }
    Profile at(std::uint64_t index) const;
    const CandidateSet& candidates() const noexcept { return candidates_; }

private:
    CandidateSet candidates_;
    std::vector<Ballot> ballots_;
    std::size_t voters_;
    std::uint64_t size_;
};

ProfileSpace enumerate_profiles(const SearchConfig& cfg);
// 2..cfg.candidates candidates and 1..cfg.voters voters, fixed by (seed, index).
Profile random_profile(const SearchConfig& cfg, std::uint64_t index);

// Seed-deterministic helpers shared with the tests.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
Ballot random_ballot(const CandidateSet& candidates, BallotKind kind, std::mt19937_64& rng);

} // namespace splitcycle
