#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "splitcycle/constructions.hpp"
#include "splitcycle/error.hpp"
#include "splitcycle/graph.hpp"

using namespace splitcycle;

namespace {

Candidate C(const char* name) { return Candidate(name); }

Path P(std::initializer_list<const char*> names) {
    Path p;
    for (auto n : names) p.nodes.emplace_back(n);
    return p;
}

std::vector<MarginGraph> random_graphs(std::uint64_t seed, int count, std::size_t max_nodes, int max_weight) {
    std::mt19937_64 rng(seed);
    std::vector<MarginGraph> out;
    for (int i = 0; i < count; ++i)
        out.push_back(oracle::random_tournament(rng, 2 + i % (max_nodes - 1), max_weight, i % 3 == 0));
    return out;
}

} // namespace

TEST_CASE("threshold restriction of the first figure") {
    const auto m = fixture_graph(FixtureId::Fig1);
    const auto r = restrict_to_k(m, 10);
    CHECK(r.edges() == std::vector<WeightedEdge>{{C("a"), C("d"), 10}, {C("d"), C("c"), 12}});
    CHECK(restrict_to_k(m, 1) == m);
    CHECK(restrict_to_k(m, m.max_weight() + 1).edge_count() == 0);
    CHECK_THROWS_AS(restrict_to_k(m, 0), Error);
    CHECK(reachable(m, C("b"), C("a")));
    CHECK_FALSE(reachable(r, C("d"), C("a")));
    CHECK_THROWS_AS(reachable(m, C("a"), C("q")), Error);
}

TEST_CASE("simple cycles, splitting numbers, widest paths") {
    const auto m = fixture_graph(FixtureId::Fig1);
    const std::vector<Path> cycles{P({"a", "d", "b", "a"}), P({"a", "d", "b", "c", "a"}), P({"a", "d", "c", "a"})};
    CHECK(simple_cycles(m) == cycles);
    CHECK(path_strength(m, P({"a", "d", "b", "a"})) == 2);
    CHECK(path_strength(m, P({"a", "d", "b", "c", "a"})) == 4);
    CHECK(path_strength(m, P({"d", "c"})) == 12);
    CHECK_THROWS_AS(path_strength(m, P({"a", "b"})), Error);
    CHECK(widest_path_strength(m, C("d"), C("a")) == 8);
    CHECK(widest_path_strength(fixture_graph(FixtureId::RcG), C("z"), C("x")) == 0);
    CHECK(simple_cycles(fixture_graph(FixtureId::RcG)).empty());
}

TEST_CASE("the 48-voter example has three simple cycles") {
    const auto cycles = simple_cycles(fixture_graph(FixtureId::Ex210));
    CHECK(cycles == std::vector<Path>{P({"a", "b", "c", "a"}), P({"a", "b", "d", "a"}), P({"a", "b", "d", "c", "a"})});
}

TEST_CASE("ignore-source strength") {
    const auto m = fixture_graph(FixtureId::IscG);
    CHECK(ignore_source_strength(m, C("a"), C("b")) == ExtendedWeight::finite(5));
    CHECK(ignore_source_strength(m, C("c"), C("b")).is_infinite());
    const auto rc = fixture_graph(FixtureId::RcG);
    CHECK(ignore_source_strength(rc, C("z"), C("x")) == ExtendedWeight::finite(0));
    CHECK(ExtendedWeight::infinity() > ExtendedWeight::finite(1'000'000));
}

TEST_CASE("oracle equivalence: widest paths, ignore-source, reachability, cycles") {
    for (const auto& m : random_graphs(77, 300, 5, 6)) {
        const auto& X = m.nodes();
        std::set<oracle::NodePath> cycles;
        for (const auto& c : simple_cycles(m)) {
            oracle::NodePath path;
            for (std::size_t k = 0; k + 1 < c.nodes.size(); ++k) path.push_back(m.index_of(c.nodes[k]));
            cycles.insert(path);
        }
        CHECK(cycles == oracle::simple_cycles(m));
        for (std::size_t i = 0; i < X.size(); ++i)
            for (std::size_t j = 0; j < X.size(); ++j) {
                if (i == j) continue;
                const int w = widest_path_strength(m, X[i], X[j]);
                CHECK(w == oracle::widest(m, i, j));
                const auto is = ignore_source_strength(m, X[i], X[j]);
                CHECK(is == oracle::ignore_source(m, i, j));
                CHECK(is >= ExtendedWeight::finite(w));
                CHECK(is.is_infinite() == m.has_edge(i, j));
                CHECK((is == ExtendedWeight::finite(0)) == !reachable(m, X[i], X[j]));
                CHECK(reachable(m, X[i], X[j]) == oracle::reaches(m, i, j));
                if (!is.is_infinite() && is.value() > 0) {
                    // Dropping every non-source edge up to the strength disconnects.
                    EdgeSet dropped;
                    for (const auto& e : m.edges())
                        if (e.from != X[i] && e.weight <= is.value()) dropped.insert({e.from, e.to});
                    CHECK(oracle::is_cut(m, i, j, dropped));
                }
            }
        for (int k = 1; k <= m.max_weight(); ++k) {
            const auto upper = restrict_to_k(m, k + 1).edges();
            const auto lower = restrict_to_k(m, k).edges();
            CHECK(std::includes(lower.begin(), lower.end(), upper.begin(), upper.end()));
        }
    }
}

TEST_CASE("minimal cut of the cut figure") {
    const auto m = fixture_graph(FixtureId::Fig3G);
    const auto cut = minimal_cut(m, C("y"), C("x"), 3, false);
    CHECK(cut == EdgeSet{{C("c"), C("x")}, {C("y"), C("b")}});
    CHECK(oracle::is_minimal_cut(m, m.index_of(C("y")), m.index_of(C("x")), cut));
    const MarginGraph line(make_candidate_set({"p", "q"}), {{C("q"), C("p"), 1}});
    CHECK(minimal_cut(line, C("q"), C("p"), 1, false) == EdgeSet{{C("q"), C("p")}});
    CHECK_THROWS_AS(minimal_cut(m, C("y"), C("x"), 1, false), Error);
    CHECK_THROWS_AS(minimal_cut(line, C("q"), C("p"), 1, true), Error);
}

TEST_CASE("property: minimal cuts are cuts and subset-minimal") {
    int checked = 0;
    for (const auto& m : random_graphs(99, 300, 6, 6)) {
        const auto& X = m.nodes();
        for (std::size_t s = 0; s < X.size(); ++s)
            for (std::size_t t = 0; t < X.size(); ++t) {
                if (s == t) continue;
                for (int bound = 1; bound <= m.max_weight(); ++bound) {
                    for (bool exclude : {false, true}) {
                        EdgeSet cut;
                        try {
                            cut = minimal_cut(m, X[s], X[t], bound, exclude);
                        } catch (const Error& e) {
                            CHECK(e.kind() == ErrorKind::NoCut);
                            continue;
                        }
                        ++checked;
                        CHECK(oracle::is_minimal_cut(m, s, t, cut));
                        for (const auto& [u, v] : cut) {
                            CHECK(m.weight(m.index_of(u), m.index_of(v)) <= bound);
                            if (exclude) CHECK(u != X[s]);
                        }
                    }
                }
            }
        if (checked > 3000) break;
    }
    CHECK(checked > 500);
}

TEST_CASE("linear extensions") {
    const auto X = make_candidate_set({"a", "b", "c", "x", "y"});
    const EdgeSet r{{C("b"), C("y")}, {C("x"), C("c")}, {C("y"), C("x")}, {C("y"), C("a")}};
    const auto L = linear_extension(r, X);
    CHECK(L.is_linear());
    for (const auto& [u, v] : r) CHECK(L.prefers(u, v));
    CHECK(linear_extension({}, X).to_string() == "a > b > c > x > y");
    const EdgeSet chain{{C("c"), C("b")}, {C("b"), C("a")}, {C("c"), C("a")}};
    CHECK(linear_extension(chain, make_candidate_set({"a", "b", "c"})).to_string() == "c > b > a");
    const EdgeSet cyclic{{C("a"), C("b")}, {C("b"), C("a")}};
    try {
        linear_extension(cyclic, make_candidate_set({"a", "b"}));
        FAIL("expected a cycle error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Cyclic);
    }
}

TEST_CASE("property: linear extensions contain random acyclic relations") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const auto p = oracle::random_linear_profile(rng, 2 + t % 6, 1);
        EdgeSet r;
        for (const auto& e : oracle::ballot_relation(p.voters()[0].second))
            if (rng() % 2) r.insert(e);
        const auto L = linear_extension(r, p.candidates());
        CHECK(L == linear_extension(r, p.candidates()));
        for (const auto& [u, v] : r) CHECK(L.prefers(u, v));
    }
}
