#include "splitcycle/axioms.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

#include "splitcycle/error.hpp"
#include "splitcycle/graph.hpp"
#include "splitcycle/text_format.hpp"

namespace splitcycle {

namespace {

struct AxiomInfo {
    AxiomId id;
    std::string_view name;
    bool vccr;
    bool vscc;
};

constexpr std::array<AxiomInfo, 23> kAxioms{{
    {AxiomId::Anonymity, "anonymity", true, true},
    {AxiomId::Neutrality, "neutrality", true, true},
    {AxiomId::Availability, "availability", true, true},
    {AxiomId::Homogeneity, "homogeneity", true, true},
    {AxiomId::UpwardHomogeneity, "upward-homogeneity", true, true},
    {AxiomId::DownwardHomogeneity, "downward-homogeneity", true, true},
    {AxiomId::Monotonicity, "monotonicity", true, true},
    {AxiomId::Monotonicity2c, "monotonicity-2c", true, true},
    {AxiomId::NeutralReversal, "neutral-reversal", true, true},
    {AxiomId::NeutralIndifference, "neutral-indifference", true, true},
    {AxiomId::Iia, "iia", true, false},
    {AxiomId::WeakIia, "weak-iia", true, false},
    {AxiomId::CoherentIia, "coherent-iia", true, true},
    {AxiomId::MajorityDefeat, "majority-defeat", true, false},
    {AxiomId::CoherentDefeat, "coherent-defeat", true, true},
    {AxiomId::PositiveInvolvement, "positive-involvement", true, true},
    {AxiomId::PositiveInvolvementInDefeat, "positive-involvement-in-defeat", true, false},
    {AxiomId::FirstPlaceInvolvementInDefeat, "first-place-involvement-in-defeat", true, false},
    {AxiomId::NegativeInvolvement, "negative-involvement", true, true},
    {AxiomId::NegativeInvolvementInDefeat, "negative-involvement-in-defeat", true, false},
    {AxiomId::TolerantPositiveInvolvement, "tolerant-positive-involvement", false, true},
    {AxiomId::PureIia, "pure-iia", false, true},
    {AxiomId::HanssonPairwiseIndependence, "hansson-pairwise-independence", false, true},
}};

bool wins(const MethodOutcome& o, const Candidate& c) { return contains(o.winners, c); }

bool defeats_pair(const MethodOutcome& o, const Candidate& x, const Candidate& y) {
    return o.defeats->contains(x, y);
}

// Same output at the judged level.
bool same_output(Level level, const MethodOutcome& a, const MethodOutcome& b) {
    return level == Level::Vccr ? *a.defeats == *b.defeats : a.winners == b.winners;
}

bool is_subset(const CandidateSet& a, const CandidateSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

int relation_sign(const Ballot& b, const Candidate& x, const Candidate& y) {
    const auto tx = b.tier_of(x);
    const auto ty = b.tier_of(y);
    return tx < ty ? 1 : (tx > ty ? -1 : 0);
}

bool same_voter_ids(const Profile& p, const Profile& q) {
    if (p.num_voters() != q.num_voters()) return false;
    for (std::size_t i = 0; i < p.num_voters(); ++i)
        if (p.voters()[i].first != q.voters()[i].first) return false;
    return true;
}

bool is_moved_ballot(const Ballot& before, const Ballot& after, const Candidate& x) {
    if (!before.contains(x) || before.first_uniquely(x)) return false;
    if (before.is_linear() && move_up_one_place(before, x, BallotKind::Linear) == after) return true;
    return move_up_one_place(before, x, BallotKind::Weak) == after;
}

bool extends_by(const Profile& before, const Profile& after, const std::vector<Ballot>& added) {
    for (const auto& b : added)
        if (b.candidates() != before.candidates()) return false;
    return after == add_ballots(before, added);
}

bool no_path_back(const Profile& p, std::size_t x, std::size_t y) {
    const auto m = margin_graph(p);
    return !detail::reachable_from(m, y)[x];
}

// Both axiom premises and conclusions, evaluated from the witness alone.
// `before` and `after_hint` are the method's outcomes when already known.
bool violates(MethodId method, Level level, AxiomId axiom, const Witness& w, const MethodOutcome& before,
              const MethodOutcome* after_hint) {
    const Profile& p = w.before;
    const auto& X = p.candidates();
    auto after = [&]() -> MethodOutcome { return after_hint ? *after_hint : evaluate(method, *w.after); };
    auto focus = [&](std::size_t k) -> const Candidate& { return w.focus.at(k); };
    const bool vccr = level == Level::Vccr;

    switch (axiom) {
    case AxiomId::Anonymity: {
        if (!w.after || w.after->candidates() != X || !same_voter_ids(p, *w.after) ||
            w.after->anonymized() != p.anonymized())
            return false;
        return !same_output(level, before, after());
    }
    case AxiomId::Neutrality: {
        if (!w.after || w.relabel.size() != X.size()) return false;
        std::set<Candidate> image;
        for (const auto& [from, to] : w.relabel) {
            if (!contains(X, from) || !contains(X, to)) return false;
            image.insert(to);
        }
        if (image.size() != X.size() || *w.after != permute_candidates(p, w.relabel)) return false;
        const auto a = after();
        for (const auto& u : X) {
            if (vccr) {
                for (const auto& v : X)
                    if (u != v && defeats_pair(before, u, v) != defeats_pair(a, w.relabel.at(u), w.relabel.at(v)))
                        return true;
            } else if (wins(before, u) != wins(a, w.relabel.at(u))) {
                return true;
            }
        }
        return false;
    }
    case AxiomId::Availability:
        return before.winners.empty();
    case AxiomId::Homogeneity:
    case AxiomId::UpwardHomogeneity:
    case AxiomId::DownwardHomogeneity: {
        if (!w.after || *w.after != double_profile(p)) return false;
        const auto a = after();
        if (axiom == AxiomId::Homogeneity) return !same_output(level, before, a);
        // Upward: f(P) within f(2P), so winners of 2P within winners of P.
        const bool upward = axiom == AxiomId::UpwardHomogeneity;
        if (vccr) return upward ? !before.defeats->subset_of(*a.defeats) : !a.defeats->subset_of(*before.defeats);
        return upward ? !is_subset(a.winners, before.winners) : !is_subset(before.winners, a.winners);
    }
    case AxiomId::Monotonicity:
    case AxiomId::Monotonicity2c: {
        if (!w.after || !w.voter || w.focus.size() != 1) return false;
        if (axiom == AxiomId::Monotonicity2c && X.size() != 2) return false;
        const auto& x = focus(0);
        if (w.after->candidates() != X || !same_voter_ids(p, *w.after)) return false;
        for (std::size_t i = 0; i < p.num_voters(); ++i) {
            const auto& [id, b] = p.voters()[i];
            const auto& b2 = w.after->voters()[i].second;
            if (id == *w.voter ? !is_moved_ballot(b, b2, x) : b != b2) return false;
        }
        const auto a = after();
        if (!vccr) return wins(before, x) && !wins(a, x);
        for (const auto& y : X)
            if (y != x && defeats_pair(before, x, y) && !defeats_pair(a, x, y)) return true;
        return false;
    }
    case AxiomId::NeutralReversal:
    case AxiomId::NeutralIndifference: {
        if (!w.after) return false;
        if (axiom == AxiomId::NeutralReversal) {
            if (w.added.size() != 2 || w.added[1] != reverse(w.added[0])) return false;
        } else if (w.added.size() != 1 || w.added[0].tiers().size() != 1) {
            return false;
        }
        if (!extends_by(p, *w.after, w.added)) return false;
        return !same_output(level, before, after());
    }
    case AxiomId::Iia:
    case AxiomId::WeakIia:
    case AxiomId::HanssonPairwiseIndependence: {
        if (!w.after || w.focus.size() != 2) return false;
        const auto& x = focus(0);
        const auto& y = focus(1);
        if (x == y || !p.find(x) || !p.find(y) || !w.after->find(x) || !w.after->find(y)) return false;
        if (!same_pair_restriction(p, *w.after, x, y)) return false;
        if (axiom == AxiomId::HanssonPairwiseIndependence) {
            if (!wins(before, x) || wins(before, y)) return false;
            return wins(after(), y);
        }
        if (!defeats_pair(before, x, y)) return false;
        const auto a = after();
        return axiom == AxiomId::Iia ? !defeats_pair(a, x, y) : defeats_pair(a, y, x);
    }
    case AxiomId::CoherentIia:
    case AxiomId::PureIia: {
        if (axiom == AxiomId::CoherentIia && vccr) {
            if (!w.after || w.focus.size() != 2) return false;
            const auto& x = focus(0);
            const auto& y = focus(1);
            if (x == y || !p.find(x) || !p.find(y) || !w.after->find(x) || !w.after->find(y)) return false;
            if (!coherently_reduces(p, *w.after, x, y)) return false;
            return defeats_pair(before, x, y) && !defeats_pair(after(), x, y);
        }
        // Existential form: y loses, yet every challenger x has a profile
        // related to p through {x, y} in which y wins.
        if (w.focus.size() != 1) return false;
        const auto& y = focus(0);
        if (!p.find(y) || wins(before, y)) return false;
        for (const auto& x : X) {
            if (x == y) continue;
            bool refuted = false;
            for (const auto& e : w.evidence) {
                if (e.challenger != x || !e.profile.find(x) || !e.profile.find(y)) continue;
                const bool related = axiom == AxiomId::PureIia ? same_pair_restriction(p, e.profile, x, y)
                                                               : coherently_reduces(p, e.profile, x, y);
                if (related && wins(evaluate(method, e.profile), y)) {
                    refuted = true;
                    break;
                }
            }
            if (!refuted) return false;
        }
        return true;
    }
    case AxiomId::MajorityDefeat:
    case AxiomId::CoherentDefeat: {
        if (w.focus.size() != 2 || focus(0) == focus(1) || !p.find(focus(0)) || !p.find(focus(1))) return false;
        const auto i = p.index_of(focus(0));
        const auto j = p.index_of(focus(1));
        if (axiom == AxiomId::MajorityDefeat) return before.defeats->contains(i, j) && p.margin(i, j) <= 0;
        if (p.margin(i, j) <= 0 || !no_path_back(p, i, j)) return false;
        return vccr ? !before.defeats->contains(i, j) : wins(before, X[j]);
    }
    case AxiomId::PositiveInvolvement:
    case AxiomId::NegativeInvolvement:
    case AxiomId::TolerantPositiveInvolvement: {
        if (!w.after || w.added.size() != 1 || w.focus.size() != 1) return false;
        const auto& c = focus(0);
        const Ballot& L = w.added[0];
        if (!p.find(c) || !extends_by(p, *w.after, w.added)) return false;
        if (axiom == AxiomId::PositiveInvolvement) {
            if (!L.first_uniquely(c)) return false;
            return wins(before, c) && !wins(after(), c);
        }
        if (axiom == AxiomId::NegativeInvolvement) {
            if (!L.last_uniquely(c)) return false;
            return !wins(before, c) && wins(after(), c);
        }
        const auto ci = p.index_of(c);
        for (std::size_t j = 0; j < X.size(); ++j)
            if (j != ci && p.margin(ci, j) <= 0 && !L.prefers(c, X[j])) return false;
        return wins(before, c) && !wins(after(), c);
    }
    case AxiomId::PositiveInvolvementInDefeat:
    case AxiomId::FirstPlaceInvolvementInDefeat:
    case AxiomId::NegativeInvolvementInDefeat: {
        if (!w.after || w.added.size() != 1 || w.focus.size() != 2) return false;
        const auto& x = focus(0);
        const auto& y = focus(1);
        const Ballot& L = w.added[0];
        if (x == y || !p.find(x) || !p.find(y) || !extends_by(p, *w.after, w.added)) return false;
        if (axiom == AxiomId::NegativeInvolvementInDefeat) {
            if (!L.prefers(x, y)) return false;
            return defeats_pair(before, x, y) && !defeats_pair(after(), x, y);
        }
        const bool shaped = axiom == AxiomId::PositiveInvolvementInDefeat ? L.prefers(y, x) : L.first_uniquely(y);
        if (!shaped) return false;
        return !defeats_pair(before, x, y) && defeats_pair(after(), x, y);
    }
    }
    return false;
}

void require_applicable(MethodId method, Level level, AxiomId axiom) {
    if (!applies_at(axiom, level))
        fail_input(std::string(to_string(axiom)) + " is not defined at the " + std::string(to_string(level)) + " level");
    if (level == Level::Vccr && !has_defeat_relation(method))
        fail_input(std::string(to_string(method)) + " has no defeat relation; use the vscc level");
}

// ---- search ----

using Instance = std::function<bool(Witness&&, const MethodOutcome*)>;

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[uniform_below(rng, i)]);
    return perm;
}

// Places c as a new singleton tier at position `tier`, removing it first.
Ballot with_candidate_at(const Ballot& b, const Candidate& c, std::size_t tier) {
    std::vector<Ballot::Tier> tiers;
    for (const auto& t : b.tiers()) {
        Ballot::Tier kept;
        for (const auto& d : t)
            if (d != c) kept.push_back(d);
        if (!kept.empty()) tiers.push_back(std::move(kept));
    }
    tier = std::min(tier, tiers.size());
    tiers.insert(tiers.begin() + static_cast<std::ptrdiff_t>(tier), Ballot::Tier{c});
    return Ballot(std::move(tiers));
}

// Moves y so that it relates to x as `sign` (1: x above y, -1: y above x, 0: tied).
Ballot align_pair(const Ballot& b, const Candidate& x, const Candidate& y, int sign) {
    std::vector<Ballot::Tier> tiers;
    for (const auto& t : b.tiers()) {
        Ballot::Tier kept;
        for (const auto& d : t)
            if (d != y) kept.push_back(d);
        if (!kept.empty()) tiers.push_back(std::move(kept));
    }
    std::size_t tx = 0;
    while (!std::binary_search(tiers[tx].begin(), tiers[tx].end(), x)) ++tx;
    if (sign == 0)
        tiers[tx].push_back(y);
    else
        tiers.insert(tiers.begin() + static_cast<std::ptrdiff_t>(sign > 0 ? tx + 1 : tx), Ballot::Tier{y});
    return Ballot(std::move(tiers));
}

class Search {
public:
    Search(MethodId method, Level level, AxiomId axiom, const SearchConfig& cfg)
        : method_(method), level_(level), axiom_(axiom), cfg_(cfg) {}

    // Refinement search instead of an axiom.
    Search(MethodId f, MethodId g, const SearchConfig& cfg)
        : method_(f), level_(Level::Vccr), axiom_(AxiomId::Availability), cfg_(cfg), refines_(g) {}

    AxiomReport run() {
        if (cfg_.candidates == 0 || cfg_.candidates > 26) fail_input("candidate bound must be between 1 and 26");
        if (cfg_.voters == 0) fail_input("voter bound must be positive");
        for (std::size_t i = 0; i < cfg_.seeds.size(); ++i) {
            ++report_.trials;
            auto rng = trial_rng(cfg_.seed, ~static_cast<std::uint64_t>(i));
            if (examine(cfg_.seeds[i].profile, &cfg_.seeds[i], true, rng, "seed")) return report_;
        }
        bool sample = cfg_.mode == SearchMode::Random;
        if (!sample) {
            try {
                space_.emplace(cfg_);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::OracleBound) throw;
                report_.notes.push_back("exhaustive space exceeds the ceiling of " + std::to_string(cfg_.ceiling) +
                                        " profiles; switched to seeded sampling with " + std::to_string(cfg_.trials) +
                                        " trials");
                sample = true;
            }
        }
        if (!sample) {
            const auto n = space_->size();
            pair_space_ = n <= cfg_.ceiling / n;
            if (pair_space_) space_outcomes_.resize(n);
            for (std::uint64_t i = 0; i < n; ++i) {
                ++report_.trials;
                auto rng = trial_rng(cfg_.seed, i);
                if (examine(space_->at(i), nullptr, true, rng, "exhaustive")) return report_;
            }
            return report_;
        }
        space_.reset();
        for (std::uint64_t t = 0; t < cfg_.trials; ++t) {
            ++report_.trials;
            auto rng = trial_rng(cfg_.seed ^ 0xA5A5A5A5ULL, t);
            if (examine(random_profile(cfg_, t), nullptr, false, rng, "random")) return report_;
        }
        return report_;
    }

private:
    const MethodOutcome& outcome_of(const Profile& p) {
        if (!cached_ || cached_->first != p) cached_.emplace(p, evaluate(method_, p));
        return cached_->second;
    }

    const MethodOutcome& space_outcome(std::uint64_t index) {
        auto& slot = space_outcomes_[index];
        if (!slot) slot = evaluate(method_, space_->at(index));
        return *slot;
    }

    bool in_space(const Profile& p) const {
        if (!space_ || !pair_space_ || p.candidates() != space_->candidates() || p.num_voters() != cfg_.voters) return false;
        for (std::size_t i = 0; i < p.num_voters(); ++i)
            if (p.voters()[i].first.value != i) return false;
        return true;
    }

    bool record(Witness&& w) {
        const bool confirmed = refines_ ? replay_refinement(method_, *refines_, w) : replay(method_, level_, axiom_, w);
        if (!confirmed) throw Error(ErrorKind::InvariantViolation, "counterexample failed to replay");
        report_.verdict = Verdict::Counterexample;
        report_.witness = std::move(w);
        return true;
    }

    bool test(Witness&& w, const MethodOutcome* hint) {
        const auto& before = outcome_of(w.before);
        if (!violates(method_, level_, axiom_, w, before, hint)) return false;
        return record(std::move(w));
    }

    Witness base_witness(const Profile& p, std::string family) const {
        return Witness{std::move(family), p, std::nullopt, {}, std::nullopt, {}, {}, {}};
    }

    std::vector<Ballot> ballots_to_add(const Profile& p, const SeedCase* seed, bool wide, std::mt19937_64& rng) const {
        if (seed && seed->ballot) return {*seed->ballot};
        if (wide && p.num_candidates() <= 5) return all_ballots(p.candidates(), cfg_.ballots);
        return {random_ballot(p.candidates(), cfg_.ballots, rng)};
    }

    // Profiles q with the same voters where every voter orders x, y as in p.
    template <typename Visit>
    bool same_restriction_family(const Profile& p, const Candidate& x, const Candidate& y, const SeedCase* seed,
                                 bool wide, std::mt19937_64& rng, Visit&& visit) {
        if (seed && seed->other) return visit(*seed->other, "seed-pair", nullptr);
        for (const auto& q : restrictions_containing(p, x, y))
            if (visit(q, "restriction", nullptr)) return true;
        if (wide && in_space(p)) {
            for (std::uint64_t i = 0; i < space_->size(); ++i) {
                const auto q = space_->at(i);
                if (q == p || !same_pair_restriction(p, q, x, y)) continue;
                if (visit(q, "exhaustive-pair", &space_outcome(i))) return true;
            }
            return false;
        }
        for (int k = 0; k < 4; ++k) {
            std::vector<VoterBallot> voters;
            for (const auto& [id, b] : p.voters()) {
                const auto fresh = random_ballot(p.candidates(), cfg_.ballots, rng);
                voters.emplace_back(id, align_pair(fresh, x, y, relation_sign(b, x, y)));
            }
            if (visit(Profile(p.candidates(), std::move(voters)), "reroll", nullptr)) return true;
        }
        return false;
    }

    // Candidate profiles for the coherent reduction relation; the caller filters.
    template <typename Visit>
    bool coherent_family(const Profile& p, const SeedCase* seed, bool wide, Visit&& visit) {
        if (seed && seed->other) return visit(*seed->other, "seed-pair", nullptr);
        const auto& X = p.candidates();
        const std::size_t n = X.size();
        for (std::uint64_t mask = 1; mask + 1 < (1ULL << n); ++mask) {
            if (std::popcount(mask) < 2) continue;
            CandidateSet keep;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1ULL) keep.push_back(X[i]);
            if (visit(restrict(p, keep), "restriction", nullptr)) return true;
        }
        for (const auto& [id, b] : p.voters()) {
            for (const auto& c : X) {
                if (b.first_uniquely(c)) continue;
                const auto moved = move_up_one_place(b, c, b.is_linear() && cfg_.ballots == BallotKind::Linear
                                                               ? BallotKind::Linear
                                                               : BallotKind::Weak);
                if (visit(replace_ballot(p, id, moved), "single-move", nullptr)) return true;
            }
        }
        if (wide && in_space(p)) {
            for (std::uint64_t i = 0; i < space_->size(); ++i) {
                const auto q = space_->at(i);
                if (q != p && visit(q, "exhaustive-pair", &space_outcome(i))) return true;
            }
        }
        return false;
    }

    static std::vector<Profile> restrictions_containing(const Profile& p, const Candidate& x, const Candidate& y) {
        std::vector<Profile> out;
        std::vector<Candidate> others;
        for (const auto& c : p.candidates())
            if (c != x && c != y) others.push_back(c);
        const std::size_t n = others.size();
        // Smallest restrictions first; the full set is p itself.
        for (std::size_t size = 0; size < n; ++size) {
            for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
                if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
                std::vector<Candidate> keep{x, y};
                for (std::size_t i = 0; i < n; ++i)
                    if (mask >> i & 1ULL) keep.push_back(others[i]);
                out.push_back(restrict(p, make_candidate_set(std::move(keep))));
            }
        }
        return out;
    }

    bool examine(const Profile& p, const SeedCase* seed, bool wide, std::mt19937_64& rng, const std::string& label) {
        const auto& X = p.candidates();
        const std::size_t n = X.size();
        const MethodOutcome before = outcome_of(p);

        if (refines_) {
            const auto other = evaluate(*refines_, p);
            for (const auto& [x, y] : other.defeats->pairs())
                if (!before.defeats->contains(x, y)) {
                    auto w = base_witness(p, label);
                    w.focus = {x, y};
                    return record(std::move(w));
                }
            return false;
        }

        switch (axiom_) {
        case AxiomId::Availability:
            return test(base_witness(p, label), nullptr);
        case AxiomId::MajorityDefeat:
        case AxiomId::CoherentDefeat:
            for (const auto& x : p.candidates())
                for (const auto& y : p.candidates()) {
                    if (x == y) continue;
                    auto w = base_witness(p, label);
                    w.focus = {x, y};
                    if (test(std::move(w), nullptr)) return true;
                }
            return false;

        case AxiomId::Anonymity: {
            const std::size_t v = p.num_voters();
            std::vector<std::vector<std::size_t>> perms;
            if (wide && v <= 5)
                perms = permutations_of(v);
            else
                perms = {random_permutation(v, rng)};
            for (const auto& perm : perms) {
                std::map<VoterId, VoterId> pi;
                for (std::size_t i = 0; i < v; ++i) pi.emplace(p.voters()[i].first, p.voters()[perm[i]].first);
                auto w = base_witness(p, label);
                w.after = permute_voters(p, pi);
                if (test(std::move(w), nullptr)) return true;
            }
            return false;
        }
        case AxiomId::Neutrality: {
            std::vector<std::vector<std::size_t>> perms;
            if (wide && n <= 5)
                perms = permutations_of(n);
            else
                perms = {random_permutation(n, rng)};
            for (const auto& perm : perms) {
                auto w = base_witness(p, label);
                for (std::size_t i = 0; i < n; ++i) w.relabel.emplace(X[i], X[perm[i]]);
                w.after = permute_candidates(p, w.relabel);
                if (test(std::move(w), nullptr)) return true;
            }
            return false;
        }
        case AxiomId::Homogeneity:
        case AxiomId::UpwardHomogeneity:
        case AxiomId::DownwardHomogeneity: {
            auto w = base_witness(p, label);
            w.after = double_profile(p);
            return test(std::move(w), nullptr);
        }
        case AxiomId::Monotonicity:
        case AxiomId::Monotonicity2c: {
            std::vector<Profile> bases;
            if (axiom_ == AxiomId::Monotonicity) {
                bases.push_back(p);
            } else if (n >= 2) {
                if (wide) {
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t j = i + 1; j < n; ++j) bases.push_back(restrict(p, {X[i], X[j]}));
                } else {
                    const auto i = uniform_below(rng, n);
                    auto j = uniform_below(rng, n - 1);
                    if (j >= i) ++j;
                    bases.push_back(restrict(p, make_candidate_set({X[i], X[j]})));
                }
            }
            for (const auto& q : bases) {
                std::vector<std::pair<std::size_t, std::size_t>> moves;  // voter position, candidate index
                for (std::size_t v = 0; v < q.num_voters(); ++v)
                    for (std::size_t c = 0; c < q.num_candidates(); ++c)
                        if (!q.voters()[v].second.first_uniquely(q.candidates()[c])) moves.emplace_back(v, c);
                if (!wide && !moves.empty()) moves = {moves[uniform_below(rng, moves.size())]};
                for (const auto& [v, c] : moves) {
                    const auto& [id, b] = q.voters()[v];
                    const auto& x = q.candidates()[c];
                    const auto kind = b.is_linear() && cfg_.ballots == BallotKind::Linear ? BallotKind::Linear : BallotKind::Weak;
                    auto w = base_witness(q, label);
                    w.voter = id;
                    w.focus = {x};
                    w.after = replace_ballot(q, id, move_up_one_place(b, x, kind));
                    if (test(std::move(w), nullptr)) return true;
                }
            }
            return false;
        }
        case AxiomId::NeutralReversal: {
            for (const auto& L : ballots_to_add(p, seed, wide, rng)) {
                auto w = base_witness(p, label);
                w.added = {L, reverse(L)};
                w.after = add_ballots(p, w.added);
                if (test(std::move(w), nullptr)) return true;
            }
            return false;
        }
        case AxiomId::NeutralIndifference: {
            auto w = base_witness(p, label);
            w.added = {Ballot::indifferent(X)};
            w.after = add_ballots(p, w.added);
            return test(std::move(w), nullptr);
        }
        case AxiomId::Iia:
        case AxiomId::WeakIia:
        case AxiomId::HanssonPairwiseIndependence: {
            std::vector<Edge> pairs;
            if (axiom_ == AxiomId::HanssonPairwiseIndependence) {
                for (const auto& x : before.winners)
                    for (const auto& y : X)
                        if (!wins(before, y)) pairs.emplace_back(x, y);
            } else {
                pairs = before.defeats->pairs();
            }
            for (const auto& [x, y] : pairs) {
                const bool found = same_restriction_family(
                    p, x, y, seed, wide, rng, [&](const Profile& q, const char* family, const MethodOutcome* hint) {
                        auto w = base_witness(p, label + "/" + family);
                        w.focus = {x, y};
                        w.after = q;
                        return test(std::move(w), hint);
                    });
                if (found) return true;
            }
            return false;
        }
        case AxiomId::CoherentIia:
            if (level_ == Level::Vccr) {
                const auto pairs = before.defeats->pairs();
                if (pairs.empty()) return false;
                return coherent_family(p, seed, wide, [&](const Profile& q, const char* family, const MethodOutcome* hint) {
                    std::optional<MethodOutcome> q_outcome;
                    for (const auto& [x, y] : pairs) {
                        if (!q.find(x) || !q.find(y) || !coherently_reduces(p, q, x, y)) continue;
                        if (!hint && !q_outcome) q_outcome = evaluate(method_, q);
                        auto w = base_witness(p, label + "/" + family);
                        w.focus = {x, y};
                        w.after = q;
                        if (test(std::move(w), hint ? hint : &*q_outcome)) return true;
                    }
                    return false;
                });
            }
            [[fallthrough]];
        case AxiomId::PureIia: {
            for (const auto& y : X) {
                if (wins(before, y)) continue;
                std::vector<Evidence> evidence;
                bool all = true;
                for (const auto& x : X) {
                    if (x == y) continue;
                    std::optional<Evidence> found;
                    auto visit = [&](const Profile& q, const char* family, const MethodOutcome* hint) {
                        if (!q.find(x) || !q.find(y)) return false;
                        const bool related = axiom_ == AxiomId::PureIia ? same_pair_restriction(p, q, x, y)
                                                                        : coherently_reduces(p, q, x, y);
                        if (!related) return false;
                        const bool y_wins = hint ? wins(*hint, y) : wins(evaluate(method_, q), y);
                        if (y_wins) found = Evidence{x, q, family};
                        return y_wins;
                    };
                    if (axiom_ == AxiomId::PureIia)
                        same_restriction_family(p, x, y, seed, wide, rng, visit);
                    else
                        coherent_family(p, seed, wide, visit);
                    if (!found) {
                        all = false;
                        break;
                    }
                    evidence.push_back(std::move(*found));
                }
                if (!all) continue;
                auto w = base_witness(p, label);
                w.focus = {y};
                w.evidence = std::move(evidence);
                if (test(std::move(w), nullptr)) return true;
            }
            return false;
        }
        case AxiomId::PositiveInvolvement:
        case AxiomId::NegativeInvolvement:
        case AxiomId::TolerantPositiveInvolvement: {
            const bool positive = axiom_ != AxiomId::NegativeInvolvement;
            for (const auto& c : X) {
                if (wins(before, c) != positive) continue;
                std::vector<Ballot> candidates_L;
                if (seed && seed->ballot) {
                    candidates_L = {*seed->ballot};
                } else if (wide && n <= 5) {
                    candidates_L = all_ballots(X, cfg_.ballots);
                } else {
                    const auto fresh = random_ballot(X, cfg_.ballots, rng);
                    if (axiom_ == AxiomId::PositiveInvolvement) {
                        candidates_L = {with_candidate_at(fresh, c, 0)};
                    } else if (axiom_ == AxiomId::NegativeInvolvement) {
                        candidates_L = {with_candidate_at(fresh, c, fresh.tiers().size())};
                    } else {
                        // Lift c just above the best-placed candidate it must beat.
                        const auto ci = p.index_of(c);
                        std::size_t top = fresh.tiers().size();
                        for (std::size_t j = 0; j < n; ++j)
                            if (j != ci && p.margin(ci, j) <= 0) top = std::min(top, fresh.tier_of(X[j]));
                        const bool already = top == fresh.tiers().size() || fresh.tier_of(c) < top;
                        candidates_L = {already ? fresh : with_candidate_at(fresh, c, top)};
                    }
                }
                for (const auto& L : candidates_L) {
                    auto w = base_witness(p, label);
                    w.focus = {c};
                    w.added = {L};
                    w.after = add_ballot(p, L);
                    if (test(std::move(w), nullptr)) return true;
                }
            }
            return false;
        }
        case AxiomId::PositiveInvolvementInDefeat:
        case AxiomId::FirstPlaceInvolvementInDefeat:
        case AxiomId::NegativeInvolvementInDefeat: {
            for (const auto& L : ballots_to_add(p, seed, wide, rng)) {
                const Profile after = add_ballot(p, L);
                std::optional<MethodOutcome> after_outcome;
                for (const auto& x : X)
                    for (const auto& y : X) {
                        if (x == y) continue;
                        const bool shaped = axiom_ == AxiomId::NegativeInvolvementInDefeat      ? L.prefers(x, y)
                                            : axiom_ == AxiomId::PositiveInvolvementInDefeat ? L.prefers(y, x)
                                                                                             : L.first_uniquely(y);
                        if (!shaped) continue;
                        if (!after_outcome) after_outcome = evaluate(method_, after);
                        auto w = base_witness(p, label);
                        w.focus = {x, y};
                        w.added = {L};
                        w.after = after;
                        if (test(std::move(w), &*after_outcome)) return true;
                    }
            }
            return false;
        }
        }
        return false;
    }

    MethodId method_;
    Level level_;
    AxiomId axiom_;
    const SearchConfig& cfg_;
    std::optional<MethodId> refines_;
    AxiomReport report_;
    std::optional<ProfileSpace> space_;
    bool pair_space_ = false;
    std::vector<std::optional<MethodOutcome>> space_outcomes_;
    std::optional<std::pair<Profile, MethodOutcome>> cached_;
};

} // namespace

std::string_view to_string(AxiomId id) noexcept {
    for (const auto& a : kAxioms)
        if (a.id == id) return a.name;
    return "unknown";
}

std::string_view to_string(Level level) noexcept { return level == Level::Vccr ? "vccr" : "vscc"; }

std::optional<AxiomId> parse_axiom(std::string_view token) noexcept {
    for (const auto& a : kAxioms)
        if (a.name == token) return a.id;
    return std::nullopt;
}

std::optional<Level> parse_level(std::string_view token) noexcept {
    if (token == "vccr") return Level::Vccr;
    if (token == "vscc") return Level::Vscc;
    return std::nullopt;
}

const std::vector<AxiomId>& all_axioms() {
    static const std::vector<AxiomId> ids = [] {
        std::vector<AxiomId> v;
        for (const auto& a : kAxioms) v.push_back(a.id);
        return v;
    }();
    return ids;
}

bool applies_at(AxiomId id, Level level) noexcept {
    for (const auto& a : kAxioms)
        if (a.id == id) return level == Level::Vccr ? a.vccr : a.vscc;
    return false;
}

bool is_existential(AxiomId id, Level level) noexcept {
    return id == AxiomId::PureIia || (id == AxiomId::CoherentIia && level == Level::Vscc);
}

bool same_pair_restriction(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y) {
    if (!same_voter_ids(p, q)) return false;
    for (std::size_t i = 0; i < p.num_voters(); ++i)
        if (relation_sign(p.voters()[i].second, x, y) != relation_sign(q.voters()[i].second, x, y)) return false;
    return true;
}

bool coherently_reduces(const Profile& p, const Profile& q, const Candidate& x, const Candidate& y) {
    if (!p.find(x) || !p.find(y) || !q.find(x) || !q.find(y)) fail_input("both profiles must contain x and y");
    if (!is_subset(q.candidates(), p.candidates())) return false;
    if (!same_pair_restriction(p, q, x, y)) return false;
    const auto& Y = q.candidates();
    for (std::size_t i = 0; i < Y.size(); ++i)
        for (std::size_t j = i + 1; j < Y.size(); ++j) {
            const bool focus_pair = (Y[i] == x && Y[j] == y) || (Y[i] == y && Y[j] == x);
            if (focus_pair) continue;
            const int before = p.margin(p.index_of(Y[i]), p.index_of(Y[j]));
            const int after = q.margin(i, j);
            if (before > 0 && !(after >= 0 && after <= before)) return false;
            if (before < 0 && !(after <= 0 && after >= before)) return false;
            if (before == 0 && after != 0) return false;
        }
    return true;
}

AxiomReport check(MethodId method, Level level, AxiomId axiom, const SearchConfig& cfg) {
    require_applicable(method, level, axiom);
    if (method == MethodId::Irv && (cfg.ballots == BallotKind::Weak || axiom == AxiomId::NeutralIndifference))
        fail_input("irv is defined on linear profiles only");
    return Search(method, level, axiom, cfg).run();
}

AxiomReport check_coherent_iia_vccr(MethodId method, const SearchConfig& cfg) {
    return check(method, Level::Vccr, AxiomId::CoherentIia, cfg);
}

AxiomReport refines(MethodId f, MethodId g, const SearchConfig& cfg) {
    if (!has_defeat_relation(f) || !has_defeat_relation(g)) fail_input("refinement compares defeat relations");
    return Search(f, g, cfg).run();
}

bool replay(MethodId method, Level level, AxiomId axiom, const Witness& w) {
    require_applicable(method, level, axiom);
    return violates(method, level, axiom, w, evaluate(method, w.before), nullptr);
}

bool replay_refinement(MethodId f, MethodId g, const Witness& w) {
    if (w.focus.size() != 2) return false;
    const auto& x = w.focus[0];
    const auto& y = w.focus[1];
    if (!w.before.find(x) || !w.before.find(y) || x == y) return false;
    const auto m = margin_graph(w.before);
    return defeats(g, m).contains(x, y) && !defeats(f, m).contains(x, y);
}

std::string format_report(const AxiomReport& report) {
    std::string out;
    const bool found = report.verdict == Verdict::Counterexample;
    out += found ? "verdict: counterexample\n" : "verdict: no counterexample within budget\n";
    out += "trials: " + std::to_string(report.trials) + "\n";
    for (const auto& note : report.notes) out += "note: " + note + "\n";
    if (!report.witness) return out;
    const auto& w = *report.witness;
    out += "family: " + w.family + "\n";
    if (!w.focus.empty()) {
        out += "focus:";
        for (const auto& c : w.focus) out += " " + c.name();
        out += "\n";
    }
    if (w.voter) out += "voter: " + std::to_string(w.voter->value) + "\n";
    if (!w.relabel.empty()) {
        out += "relabel:";
        for (const auto& [from, to] : w.relabel) out += " " + from.name() + "->" + to.name();
        out += "\n";
    }
    for (const auto& b : w.added) out += "added: " + b.to_string() + "\n";
    out += "[before]\n" + format_profile(w.before);
    if (w.after) out += "[after]\n" + format_profile(*w.after);
    for (const auto& e : w.evidence)
        out += "[evidence " + e.challenger.name() + " " + e.family + "]\n" + format_profile(e.profile);
    return out;
}

} // namespace splitcycle
