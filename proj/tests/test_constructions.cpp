#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "splitcycle/axioms.hpp"
#include "splitcycle/constructions.hpp"
#include "splitcycle/error.hpp"
#include "splitcycle/graph.hpp"
#include "splitcycle/text_format.hpp"

using namespace splitcycle;

namespace {

Candidate C(const char* name) { return Candidate(name); }

CycleShape spec_of(std::size_t n, int m) {
    std::vector<Candidate> cycle{C("x"), C("y")};
    for (std::size_t i = 1; i <= n; ++i) cycle.emplace_back("z" + std::to_string(i));
    return {cycle, m};
}

// Margin graph of the pure cycle x -> y -> z1 -> ... -> x with equal weights.
MarginGraph pure_cycle(const CycleShape& s) {
    std::vector<WeightedEdge> edges;
    for (std::size_t k = 0; k < s.cycle.size(); ++k) edges.push_back({s.cycle[k], s.cycle[(k + 1) % s.cycle.size()], s.margin});
    return MarginGraph(make_candidate_set(s.cycle), edges);
}

} // namespace

TEST_CASE("Debord realization: fixtures and edge cases") {
    const auto fig1 = fixture_graph(FixtureId::Fig1);
    const auto p = debord_realize(fig1);
    CHECK(margin_graph(p) == fig1);
    CHECK(p.is_linear());
    CHECK(p.num_voters() <= 48);
    const MarginGraph two(make_candidate_set({"x", "y"}), {{C("x"), C("y"), 2}});
    const auto q = debord_realize(two);
    CHECK(format_profile(q) == "candidates: x y\n2: x > y\n");
    const MarginGraph flat(make_candidate_set({"a", "b", "c"}), std::vector<WeightedEdge>{});
    const auto r = debord_realize(flat);
    CHECK(r.num_voters() == 2);
    CHECK(margin_graph(r) == flat);
    const MarginGraph mixed(make_candidate_set({"a", "b", "c"}), {{C("a"), C("b"), 1}, {C("b"), C("c"), 2}});
    CHECK_THROWS_AS(debord_realize(mixed), Error);
    const MarginGraph odd_gap(make_candidate_set({"a", "b", "c"}), {{C("a"), C("b"), 1}, {C("b"), C("c"), 1}});
    CHECK_THROWS_AS(debord_realize(odd_gap), Error);
}

TEST_CASE("property: Debord round trip on random admissible tournaments") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 300; ++t) {
        const bool odd = t % 2 == 1;
        const auto m = oracle::random_tournament(rng, 2 + t % 4, 8, odd);
        const auto p = debord_realize(m);
        CHECK(margin_graph(p) == m);
        CHECK(p.is_linear());
        CHECK(parity_class(p) == (odd ? Parity::Odd : Parity::Even));
    }
}

TEST_CASE("McGarvey cycle profiles") {
    const auto s = spec_of(1, 2);
    const auto q = cycle_profile(s);
    CHECK(q.num_voters() == 6);
    CHECK(margin_graph(q) == pure_cycle(s));
    CHECK(winners(split_cycle(margin_graph(q))).size() == 3);
    CHECK(margin_graph(cycle_profile_tied(s)) == pure_cycle(s));
    CHECK_THROWS_AS(cycle_profile(spec_of(1, 3)), Error);
    CHECK_THROWS_AS(cycle_profile(spec_of(0, 2)), Error);
    CHECK_THROWS_AS(cycle_profile_tied(CycleShape{{C("x"), C("y"), C("x")}, 2}), Error);
    for (std::size_t n = 1; n <= 4; ++n)
        for (int m : {2, 4, 6}) {
            const auto shape = spec_of(n, m);
            const auto linear = cycle_profile(shape);
            const auto tied = cycle_profile_tied(shape);
            CHECK(linear.is_linear());
            CHECK(linear.num_voters() == (n + 2) * static_cast<std::size_t>(m));
            CHECK(margin_graph(linear) == pure_cycle(shape));
            CHECK(margin_graph(tied) == pure_cycle(shape));
            const auto sigma = cycle_rotation(shape);
            CHECK(permute_candidates(linear, sigma).anonymized() == linear.anonymized());
            CHECK(permute_candidates(tied, sigma).anonymized() == tied.anonymized());
        }
}

TEST_CASE("each tied column pair moves only its own cycle edge") {
    const auto shape = spec_of(3, 2);
    const auto q = cycle_profile_tied(shape);
    const auto& voters = q.voters();
    REQUIRE(voters.size() == 2 * shape.cycle.size() * 2);
    for (std::size_t k = 0; k < shape.cycle.size(); ++k) {
        std::vector<Ballot> block;
        for (std::size_t v = 4 * k; v < 4 * k + 4; ++v) block.push_back(voters[v].second);
        const auto part = Profile::from_ballots(q.candidates(), block);
        const auto expected = MarginGraph(q.candidates(), {{shape.cycle[k], shape.cycle[(k + 1) % shape.cycle.size()], 2}});
        CHECK(margin_graph(part) == expected);
    }
    const auto tie = Profile::from_ballots(q.candidates(), {Ballot::indifferent(q.candidates())});
    CHECK(margin_graph(tie).edge_count() == 0);
}

TEST_CASE("cut-based ballot on the cut figure") {
    const auto p = fixture_profile(FixtureId::Fig3G);
    const auto L = lemma_ballot(p, C("x"), C("y"));
    CHECK(L.is_linear());
    for (auto [a, b] : {std::pair{"b", "y"}, {"x", "c"}, {"y", "x"}, {"y", "a"}}) CHECK(L.prefers(C(a), C(b)));
    CHECK(split_cycle(margin_graph(add_ballot(p, L))).contains(C("x"), C("y")));
    CHECK_THROWS_AS(lemma_ballot(p, C("y"), C("x")), Error);
    CHECK_THROWS_AS(lemma_ballot(fixture_profile(FixtureId::RcG), C("x"), C("y")), Error);
}

TEST_CASE("the two-step reduction figure") {
    const auto p = fixture_profile(FixtureId::Fig4G0);
    const auto first = lemma_ballot(p, C("x"), C("y"));
    CHECK(first.to_string() == "b > y > x > a");
    const auto p1 = add_ballot(p, first);
    CHECK(margin(p1, C("x"), C("y")) == 3);
    CHECK(split_cycle(margin_graph(p1)).contains(C("x"), C("y")));
    const auto seq = coherent_reduction_sequence(p, C("x"), C("y"));
    REQUIRE(seq.ballots.size() == 2);
    CHECK(seq.base == p);
    CHECK(seq.ballots[0].to_string() == "b > y > x > a");
    CHECK(seq.ballots[1].to_string() == "a > b > y > x");
    const auto last = margin_graph(add_ballots(seq.base, seq.ballots));
    CHECK(last == MarginGraph(p.candidates(), {{C("x"), C("y"), 2}, {C("b"), C("x"), 4}, {C("a"), C("x"), 4}}));
    const MarginGraph small(make_candidate_set({"x", "y"}), {{C("x"), C("y"), 2}});
    CHECK(coherent_reduction_sequence(debord_realize(small), C("x"), C("y")).ballots.empty());
}

TEST_CASE("property: cut-based ballots and reduction sequences on random instances") {
    std::mt19937_64 rng(404);
    int instances = 0;
    while (instances < 200) {
        const bool weak = instances % 4 == 3;
        const std::size_t k = 3 + rng() % 3;
        const std::size_t n = 5 + rng() % 12;
        const auto p = weak ? oracle::random_weak_profile(rng, k, n) : oracle::random_linear_profile(rng, k, n);
        const auto m = margin_graph(p);
        const auto sc = split_cycle(m);
        for (const auto& [x, y] : sc.pairs()) {
            if (m.margin(x, y) <= 2) continue;
            ++instances;
            const auto L = lemma_ballot(p, x, y);
            CHECK(L.is_linear());
            for (const auto& z : p.candidates())
                if (z != y && margin(p, y, z) <= 0) CHECK(L.prefers(y, z));
            const auto after = margin_graph(add_ballot(p, L));
            CHECK(split_cycle(after).contains(x, y));
            CHECK(after.margin(x, y) == m.margin(x, y) - 1);

            const auto seq = coherent_reduction_sequence(p, x, y);
            const auto base_margin = margin(seq.base, x, y);
            CHECK(seq.base == (p.is_linear() ? p : double_profile(p)));
            CHECK(seq.ballots.size() == static_cast<std::size_t>(base_margin - 2));
            auto running = seq.base;
            for (const auto& b : seq.ballots) {
                running = add_ballot(running, b);
                CHECK(split_cycle(margin_graph(running)).contains(x, y));
            }
            const auto final_graph = margin_graph(running);
            CHECK(final_graph.margin(x, y) == 2);
            CHECK_FALSE(reachable(final_graph, y, x));
            break;
        }
    }
}

TEST_CASE("fixture registry") {
    CHECK(all_fixtures().size() == 15);
    for (auto id : all_fixtures()) {
        CHECK(parse_fixture(to_string(id)) == id);
        CHECK(margin_graph(fixture_profile(id)) == fixture_graph(id));
    }
    CHECK_FALSE(parse_fixture("FIG9"));
    const auto ex = std::get<Profile>(paper_fixture(FixtureId::Ex210));
    CHECK(ex.num_voters() == 48);
    CHECK(ex.anonymized().size() == 11);
    CHECK(std::get<Profile>(paper_fixture(FixtureId::ScwcP)).num_voters() == 9);
    const auto irv = std::get<Profile>(paper_fixture(FixtureId::IrvP));
    CHECK(format_profile(irv) == "candidates: x y z\n3: x > y > z\n4: y > x > z\n2: z > x > y\n");
    CHECK(std::holds_alternative<MarginGraph>(paper_fixture(FixtureId::Fig1)));
}
