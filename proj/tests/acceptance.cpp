// End-to-end acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "splitcycle/axioms.hpp"
#include "splitcycle/constructions.hpp"
#include "splitcycle/graph.hpp"
#include "splitcycle/report.hpp"
#include "splitcycle/text_format.hpp"

using namespace splitcycle;

namespace {

// Budgets and tolerances. Every comparison below is exact equality.
constexpr std::uint64_t kRandomProfiles = 10'000;
constexpr std::size_t kRandomMaxCandidates = 6;
constexpr std::size_t kRandomMaxVoters = 20;
constexpr int kParityProfiles = 1'000;
constexpr int kDebordTournaments = 300;
constexpr std::size_t kDebordMaxNodes = 5;
constexpr int kDebordMaxWeight = 8;
constexpr int kReductionInstances = 200;
constexpr std::uint64_t kAxiomTrials = 10'000;
constexpr std::uint64_t kEmptyBallotTrials = 1'000;
constexpr std::uint64_t kSeed = 20240601;
constexpr std::size_t kExactMismatchesAllowed = 0;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) detail = what;
        pass = false;
    }
};

Candidate C(const char* name) { return Candidate(name); }

EdgeSet E(std::initializer_list<std::pair<const char*, const char*>> pairs) {
    EdgeSet out;
    for (auto [a, b] : pairs) out.insert({C(a), C(b)});
    return out;
}

EdgeSet pairs_of(const DefeatRelation& d) { return oracle::pair_set(d); }

SearchConfig exhaustive_space(BallotKind kind = BallotKind::Linear) {
    SearchConfig cfg;
    cfg.ballots = kind;
    return cfg;
}

SearchConfig random_space(BallotKind kind, std::uint64_t trials = kRandomProfiles) {
    SearchConfig cfg;
    cfg.candidates = kRandomMaxCandidates;
    cfg.voters = kRandomMaxVoters;
    cfg.ballots = kind;
    cfg.mode = SearchMode::Random;
    cfg.trials = trials;
    cfg.seed = kSeed;
    return cfg;
}

// The exhaustive 3x3 linear space followed by the random linear and weak spaces.
void for_each_profile(const std::function<void(const Profile&)>& visit) {
    const ProfileSpace space(exhaustive_space());
    for (std::uint64_t i = 0; i < space.size(); ++i) visit(space.at(i));
    for (auto kind : {BallotKind::Linear, BallotKind::Weak}) {
        const auto cfg = random_space(kind);
        for (std::uint64_t i = 0; i < cfg.trials; ++i) visit(random_profile(cfg, i));
    }
}

SearchConfig seeded(SeedCase seed) {
    auto cfg = random_space(BallotKind::Linear, 0);
    cfg.seeds.push_back(std::move(seed));
    return cfg;
}

Path path_of(std::initializer_list<const char*> names) {
    Path p;
    for (auto n : names) p.nodes.emplace_back(n);
    return p;
}

Outcome figure_one() {
    Outcome o;
    const auto m = fixture_graph(FixtureId::Fig1);
    o.require(pairs_of(split_cycle(m)) == E({{"a", "d"}, {"d", "b"}, {"d", "c"}}), "defeat graph differs");
    const std::vector<Path> cycles{path_of({"a", "d", "b", "a"}), path_of({"a", "d", "b", "c", "a"}), path_of({"a", "d", "c", "a"})};
    o.require(simple_cycles(m) == cycles, "cycle list differs");
    return o;
}

Outcome example_48_voters() {
    Outcome o;
    const auto p = fixture_profile(FixtureId::Ex210);
    o.require(p.num_voters() == 48, "voter count");
    const auto m = margin_graph(p);
    const std::vector<WeightedEdge> printed{
        {C("a"), C("b"), 14}, {C("b"), C("d"), 12}, {C("b"), C("c"), 18}, {C("a"), C("e"), 6},  {C("d"), C("e"), 8},
        {C("d"), C("c"), 4},  {C("b"), C("e"), 10}, {C("d"), C("a"), 2},  {C("c"), C("a"), 16}, {C("c"), C("e"), 20}};
    o.require(m == MarginGraph(p.candidates(), printed), "margin graph differs");
    const auto d = split_cycle(m);
    o.require(pairs_of(d) == E({{"b", "d"}, {"b", "c"}, {"a", "e"}, {"d", "e"}, {"b", "e"}, {"c", "a"}, {"c", "e"}}),
              "defeat graph differs");
    o.require(winners(d) == make_candidate_set({"b"}), "winners differ");
    const MethodId only[] = {MethodId::SplitCycle};
    o.require(tabulate(p, only, OutputFormat::Text) ==
                  "method: split-cycle\ndefeats: a>e b>c b>d b>e c>a c>e d>e\nwinners: b\n",
              "tabulated text");
    return o;
}

Outcome four_conditions() {
    Outcome o;
    std::size_t compared = 0;
    std::size_t mismatches = 0;
    for_each_profile([&](const Profile& p) {
        const auto m = margin_graph(p);
        const auto reference = split_cycle_by_cycles(m);
        bool same = pairs_of(reference) == oracle::split_cycle(m) && split_cycle(m) == reference;
        for (auto cond : {SplitCycleCondition::AnyCycle, SplitCycleCondition::SimpleCycle, SplitCycleCondition::AdjacentCycle,
                          SplitCycleCondition::PathStrength})
            same = same && split_cycle_by_condition(m, cond) == reference;
        mismatches += !same;
        ++compared;
    });
    o.require(compared == 216 + 2 * kRandomProfiles, "profile count");
    o.require(mismatches == kExactMismatchesAllowed, std::to_string(mismatches) + " disagreements");
    o.detail = o.pass ? std::to_string(compared) + " profiles, 0 disagreements" : o.detail;
    return o;
}

Outcome parity_and_debord() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    for (int t = 0; t < kParityProfiles; ++t) {
        const auto p = oracle::random_linear_profile(rng, 2 + rng() % (kRandomMaxCandidates - 1), 1 + rng() % kRandomMaxVoters);
        const bool odd = p.num_voters() % 2 == 1;
        for (std::size_t i = 0; i < p.num_candidates(); ++i)
            for (std::size_t j = i + 1; j < p.num_candidates(); ++j)
                o.require((std::abs(p.margin(i, j)) % 2 == 1) == odd, "margin parity differs from voter parity");
        o.require(parity_class(p) == (odd ? Parity::Odd : Parity::Even), "parity class");
    }
    for (int t = 0; t < kDebordTournaments; ++t) {
        const auto m = oracle::random_tournament(rng, 2 + rng() % (kDebordMaxNodes - 1), kDebordMaxWeight, rng() % 2 == 1);
        const auto p = debord_realize(m);
        o.require(margin_graph(p) == m && p.is_linear(), "round trip differs: " + format_tournament(m));
    }
    return o;
}

Outcome necessity_suite() {
    Outcome o;
    const auto P = fixture_profile(FixtureId::ScwcP);
    const auto Q = fixture_profile(FixtureId::ScwcQ);
    o.require(pairs_of(scwc(margin_graph(P))) == E({{"x", "b"}, {"x", "y"}}), "scwc(P)");
    o.require(scwc(margin_graph(Q)).empty(), "scwc(Q)");
    o.require(coherently_reduces(P, Q, C("x"), C("y")), "P does not reduce to Q");
    const auto scwc_report = check_coherent_iia_vccr(MethodId::Scwc, seeded({P, Q, std::nullopt}));
    o.require(scwc_report.witness && scwc_report.witness->focus == std::vector<Candidate>{C("x"), C("y")} &&
                  scwc_report.witness->after == Q,
              "scwc coherent-iia witness");

    const auto G = fixture_profile(FixtureId::IscG);
    const auto cab = parse_ballot("c > a > b", G.candidates());
    o.require(!isc(margin_graph(G)).contains(C("b"), C("a")), "isc(G) contains (b,a)");
    o.require(isc(margin_graph(add_ballot(G, cab))).contains(C("b"), C("a")), "isc(G + c>a>b) lacks (b,a)");
    const auto isc_report = check(MethodId::Isc, Level::Vccr, AxiomId::PositiveInvolvementInDefeat, seeded({G, std::nullopt, cab}));
    o.require(isc_report.witness && isc_report.witness->focus == std::vector<Candidate>{C("b"), C("a")} &&
                  isc_report.witness->added == std::vector<Ballot>{cab},
              "isc involvement witness");
    const auto isc_refines = refines(MethodId::Isc, MethodId::SplitCycle, seeded({G, std::nullopt, std::nullopt}));
    o.require(isc_refines.witness && isc_refines.witness->focus == std::vector<Candidate>{C("b"), C("a")}, "isc refinement witness");

    const auto O = fixture_profile(FixtureId::OcaG);
    o.require(pairs_of(oca(margin_graph(O))) == E({{"y", "z"}}), "oca(G)");
    const auto oca_report = check(MethodId::Oca, Level::Vccr, AxiomId::CoherentDefeat, seeded({O, std::nullopt, std::nullopt}));
    o.require(oca_report.witness && oca_report.witness->focus == std::vector<Candidate>{C("x"), C("y")}, "oca coherent-defeat witness");
    return o;
}

Outcome involvement_replays() {
    Outcome o;
    const auto rc = fixture_profile(FixtureId::RcG);
    const auto yxz = parse_ballot("y > x > z", rc.candidates());
    o.require(!right_covering(margin_graph(rc)).contains(C("x"), C("y")), "rc already has (x,y)");
    o.require(right_covering(margin_graph(add_ballot(rc, yxz))).contains(C("x"), C("y")), "rc did not gain (x,y)");
    const auto rc_report = check(MethodId::RightCovering, Level::Vccr, AxiomId::PositiveInvolvementInDefeat, seeded({rc, std::nullopt, yxz}));
    o.require(rc_report.witness && rc_report.witness->focus == std::vector<Candidate>{C("x"), C("y")}, "rc witness");

    const auto mm = fixture_profile(FixtureId::MmP);
    const auto byxa = parse_ballot("b > y > x > a", mm.candidates());
    o.require(!minimax_vccr(margin_graph(mm)).contains(C("x"), C("y")), "mm already has (x,y)");
    o.require(minimax_vccr(margin_graph(add_ballot(mm, byxa))).contains(C("x"), C("y")), "mm did not gain (x,y)");
    const auto mm_report = check(MethodId::Minimax, Level::Vccr, AxiomId::PositiveInvolvementInDefeat, seeded({mm, std::nullopt, byxa}));
    o.require(mm_report.witness && mm_report.witness->focus == std::vector<Candidate>{C("x"), C("y")}, "mm witness");
    return o;
}

Outcome instant_runoff() {
    Outcome o;
    const auto P = fixture_profile(FixtureId::IrvP);
    const auto Q = fixture_profile(FixtureId::IrvQ);
    o.require(irv_winners(P) == make_candidate_set({"x"}), "irv(P)");
    o.require(irv_winners(Q) == make_candidate_set({"y"}), "irv(Q)");
    const auto zxy = parse_ballot("z > x > y", P.candidates());
    const auto r = check(MethodId::Irv, Level::Vscc, AxiomId::TolerantPositiveInvolvement, seeded({P, std::nullopt, zxy}));
    o.require(r.witness && r.witness->focus == std::vector<Candidate>{C("x")} && r.witness->after == Q, "tpi witness");
    return o;
}

Outcome reduction_machinery() {
    Outcome o;
    std::mt19937_64 rng(kSeed);
    int instances = 0;
    while (instances < kReductionInstances) {
        const auto p = instances % 4 == 3 ? oracle::random_weak_profile(rng, 3 + rng() % 3, 5 + rng() % 12)
                                          : oracle::random_linear_profile(rng, 3 + rng() % 3, 5 + rng() % 12);
        const auto m = margin_graph(p);
        for (const auto& [x, y] : split_cycle(m).pairs()) {
            if (m.margin(x, y) <= 2) continue;
            ++instances;
            const auto L = lemma_ballot(p, x, y);
            for (const auto& z : p.candidates())
                if (z != y && margin(p, y, z) <= 0) o.require(L.prefers(y, z), "y not above a non-dominated z");
            const auto after = margin_graph(add_ballot(p, L));
            o.require(split_cycle(after).contains(x, y), "defeat lost after one ballot");
            o.require(after.margin(x, y) == m.margin(x, y) - 1, "margin not lowered by one");
            const auto seq = coherent_reduction_sequence(p, x, y);
            o.require(seq.ballots.size() == static_cast<std::size_t>(margin(seq.base, x, y) - 2), "sequence length");
            const auto last = margin_graph(add_ballots(seq.base, seq.ballots));
            o.require(last.margin(x, y) == 2 && !reachable(last, y, x), "final state");
            break;
        }
    }
    const auto g0 = fixture_profile(FixtureId::Fig4G0);
    const auto seq = coherent_reduction_sequence(g0, C("x"), C("y"));
    const MarginGraph printed(g0.candidates(), {{C("x"), C("y"), 2}, {C("b"), C("x"), 4}, {C("a"), C("x"), 4}});
    o.require(seq.ballots.size() == 2 && margin_graph(add_ballots(seq.base, seq.ballots)) == printed, "two-step figure");
    return o;
}

Outcome axiom_regression() {
    Outcome o;
    struct Case {
        AxiomId axiom;
        Level level;
        BallotKind kind;
    };
    const std::vector<Case> cases{
        {AxiomId::Anonymity, Level::Vccr, BallotKind::Linear},
        {AxiomId::Neutrality, Level::Vccr, BallotKind::Linear},
        {AxiomId::Availability, Level::Vccr, BallotKind::Linear},
        {AxiomId::Homogeneity, Level::Vccr, BallotKind::Linear},
        {AxiomId::Monotonicity, Level::Vccr, BallotKind::Linear},
        {AxiomId::NeutralReversal, Level::Vccr, BallotKind::Linear},
        {AxiomId::NeutralIndifference, Level::Vccr, BallotKind::Weak},
        {AxiomId::MajorityDefeat, Level::Vccr, BallotKind::Linear},
        {AxiomId::CoherentDefeat, Level::Vccr, BallotKind::Linear},
        {AxiomId::PositiveInvolvementInDefeat, Level::Vccr, BallotKind::Linear},
        {AxiomId::TolerantPositiveInvolvement, Level::Vscc, BallotKind::Linear},
        {AxiomId::CoherentIia, Level::Vccr, BallotKind::Linear},
    };
    std::uint64_t trials = 0;
    for (const auto& c : cases) {
        for (const auto& cfg : {exhaustive_space(c.kind), random_space(c.kind, kAxiomTrials)}) {
            const auto r = check(MethodId::SplitCycle, c.level, c.axiom, cfg);
            trials += r.trials;
            o.require(r.verdict == Verdict::NoCounterexample, std::string(to_string(c.axiom)) + " counterexample:\n" + format_report(r));
            o.require(r.notes.empty(), std::string(to_string(c.axiom)) + " fell back to sampling");
        }
    }
    for (const auto& cfg : {exhaustive_space(), random_space(BallotKind::Linear, kAxiomTrials)}) {
        const auto isc_in_sc = refines(MethodId::SplitCycle, MethodId::Isc, cfg);
        const auto sc_in_bp = refines(MethodId::BeatPath, MethodId::SplitCycle, cfg);
        o.require(isc_in_sc.verdict == Verdict::NoCounterexample, "isc not within sc");
        o.require(sc_in_bp.verdict == Verdict::NoCounterexample, "sc not within bp");
        trials += isc_in_sc.trials + sc_in_bp.trials;
    }
    if (o.pass) o.detail = std::to_string(trials) + " trials";
    return o;
}

Outcome scwc_properties() {
    Outcome o;
    std::size_t violations = 0;
    for_each_profile([&](const Profile& p) {
        const auto m = margin_graph(p);
        if (!scwc(m).is_acyclic()) ++violations;
        const auto sc = split_cycle(m);
        const auto wc = weighted_covering(m);
        for (const auto& [x, y] : sc.pairs())
            for (const auto& [y2, z] : wc.pairs())
                if (y == y2 && x != z && !sc.contains(x, z)) ++violations;
    });
    o.require(violations == kExactMismatchesAllowed, std::to_string(violations) + " violations");
    return o;
}

Outcome empty_ballot_invariance() {
    Outcome o;
    const auto cfg = random_space(BallotKind::Weak, kEmptyBallotTrials);
    for (std::uint64_t i = 0; i < cfg.trials; ++i) {
        const auto p = random_profile(cfg, i);
        const auto plus = add_ballot(p, Ballot::indifferent(p.candidates()));
        o.require(split_cycle(margin_graph(plus)) == split_cycle(margin_graph(p)), "output changed at trial " + std::to_string(i));
    }
    const auto r = check(MethodId::SplitCycle, Level::Vccr, AxiomId::NeutralIndifference, cfg);
    o.require(r.verdict == Verdict::NoCounterexample && r.trials == kEmptyBallotTrials, "falsifier disagrees");
    return o;
}

Outcome mcgarvey() {
    Outcome o;
    for (std::size_t n = 1; n <= 4; ++n)
        for (int margin_value : {2, 4, 6}) {
            std::vector<Candidate> cycle{C("x"), C("y")};
            for (std::size_t i = 1; i <= n; ++i) cycle.emplace_back("z" + std::to_string(i));
            const CycleShape shape{cycle, margin_value};
            std::vector<WeightedEdge> edges;
            for (std::size_t k = 0; k < cycle.size(); ++k) edges.push_back({cycle[k], cycle[(k + 1) % cycle.size()], margin_value});
            const MarginGraph pure(make_candidate_set(cycle), edges);
            const auto sigma = cycle_rotation(shape);
            for (const auto& q : {cycle_profile(shape), cycle_profile_tied(shape)}) {
                const std::string label = "n=" + std::to_string(n) + " m=" + std::to_string(margin_value);
                o.require(margin_graph(q) == pure, label + " margin graph");
                o.require(permute_candidates(q, sigma).anonymized() == q.anonymized(), label + " rotation");
            }
        }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"C1  first figure defeats and cycles", figure_one},
        {"C2  48-voter example", example_48_voters},
        {"C3  four split cycle conditions agree", four_conditions},
        {"C4  parity and Debord round trip", parity_and_debord},
        {"C5  scwc / isc / oca necessity witnesses", necessity_suite},
        {"C6  right covering and minimax involvement", involvement_replays},
        {"C7  instant runoff tolerant involvement", instant_runoff},
        {"C8  cut-based ballots and reduction sequence", reduction_machinery},
        {"C9  split cycle axiom regression", axiom_regression},
        {"C10 scwc acyclic and composition", scwc_properties},
        {"C11 empty ballot invariance", empty_ballot_invariance},
        {"C12 McGarvey cycle profiles", mcgarvey},
    };
    int failures = 0;
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s %s (%lld ms)%s%s\n", o.pass ? "PASS" : "FAIL", c.name, static_cast<long long>(ms),
                    o.detail.empty() ? "" : ": ", o.detail.c_str());
        failures += !o.pass;
    }
    const auto total = std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d of %zu criteria failed; %lld s total\n", failures, std::size(criteria), static_cast<long long>(total));
    return failures == 0 ? 0 : 1;
}
