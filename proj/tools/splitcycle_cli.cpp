// Batch front end over the C interface.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "splitcycle/splitcycle.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnrealizable = 3;

struct Failure {
    int code;
    std::string message;
};

struct ProfileDeleter {
    void operator()(sc_profile* p) const noexcept { sc_profile_free(p); }
};
struct TournamentDeleter {
    void operator()(sc_tournament* t) const noexcept { sc_tournament_free(t); }
};
struct StringDeleter {
    void operator()(char* s) const noexcept { sc_string_free(s); }
};
using ProfilePtr = std::unique_ptr<sc_profile, ProfileDeleter>;
using TournamentPtr = std::unique_ptr<sc_tournament, TournamentDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

void ok_or_throw(sc_status status, const std::string& context) {
    if (status == SC_OK) return;
    const int code = status == SC_ERR_PARSE || status == SC_ERR_INVALID_INPUT ? kExitUsage : kExitUnrealizable;
    throw Failure{code, context + ": " + sc_last_error()};
}

std::string read_file(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kExitUsage, "cannot read " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ProfilePtr load_profile(const std::string& path) {
    sc_profile* raw = nullptr;
    ok_or_throw(sc_profile_parse(read_file(path).c_str(), &raw), path);
    return ProfilePtr(raw);
}

TournamentPtr load_tournament(const std::string& path) {
    sc_tournament* raw = nullptr;
    ok_or_throw(sc_tournament_parse(read_file(path).c_str(), &raw), path);
    return TournamentPtr(raw);
}

void emit(char* raw) {
    OwnedString text(raw);
    std::fputs(text.get(), stdout);
}

struct TabulateArgs {
    std::string input;
    std::string methods = "all";
    std::string format = "text";
};

struct AxiomArgs {
    std::string method;
    std::string axiom;
    std::string level;
    std::string refines;
    std::size_t candidates = 3;
    std::size_t voters = 3;
    std::string ballots = "linear";
    std::string mode = "exhaustive";
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    std::uint64_t ceiling = 1000000;
    std::string seed_profile;
    std::string seed_other;
    std::string seed_ballot;
};

int run_tabulate(const TabulateArgs& args) {
    const auto profile = load_profile(args.input);
    const sc_format format = args.format == "json" ? SC_FORMAT_JSON : args.format == "dot" ? SC_FORMAT_DOT : SC_FORMAT_TEXT;
    char* out = nullptr;
    ok_or_throw(sc_tabulate(profile.get(), args.methods.c_str(), format, &out), "tabulate");
    emit(out);
    return kExitOk;
}

int run_realize(const std::string& path) {
    const auto tournament = load_tournament(path);
    sc_profile* raw = nullptr;
    ok_or_throw(sc_realize(tournament.get(), &raw), "realize");
    const ProfilePtr profile(raw);
    char* out = nullptr;
    ok_or_throw(sc_profile_to_text(profile.get(), &out), "realize");
    emit(out);
    return kExitOk;
}

int run_axioms(const AxiomArgs& args) {
    if (args.axiom.empty() == args.refines.empty())
        throw Failure{kExitUsage, "axioms: give exactly one of --axiom and --refines"};
    std::string seed_profile, seed_other;
    if (!args.seed_profile.empty()) seed_profile = read_file(args.seed_profile);
    if (!args.seed_other.empty()) seed_other = read_file(args.seed_other);

    sc_search_options opts;
    sc_search_options_init(&opts);
    opts.method = args.method.c_str();
    opts.axiom = args.axiom.empty() ? nullptr : args.axiom.c_str();
    opts.refines = args.refines.empty() ? nullptr : args.refines.c_str();
    opts.level = args.level.empty() ? nullptr : args.level.c_str();
    opts.candidates = args.candidates;
    opts.voters = args.voters;
    opts.weak = args.ballots == "weak";
    opts.exhaustive = args.mode == "exhaustive";
    opts.trials = args.trials;
    opts.seed = args.seed;
    opts.ceiling = args.ceiling;
    opts.seed_profile = args.seed_profile.empty() ? nullptr : seed_profile.c_str();
    opts.seed_other = args.seed_other.empty() ? nullptr : seed_other.c_str();
    opts.seed_ballot = args.seed_ballot.empty() ? nullptr : args.seed_ballot.c_str();

    int found = 0;
    char* report = nullptr;
    ok_or_throw(sc_check(&opts, &found, &report), "axioms");
    emit(report);
    return found ? kExitCounterexample : kExitOk;
}

int run_paper_examples(const std::string& id) {
    char* out = nullptr;
    if (id.empty())
        ok_or_throw(sc_fixture_ids(&out), "paper-examples");
    else
        ok_or_throw(sc_fixture_text(id.c_str(), &out), "paper-examples");
    emit(out);
    return kExitOk;
}

int run_dot(const std::string& input, const std::string& tournament_path, const std::string& method) {
    if (input.empty() == tournament_path.empty()) throw Failure{kExitUsage, "dot: give exactly one of --input and --tournament"};
    char* out = nullptr;
    if (!tournament_path.empty()) {
        if (!method.empty()) throw Failure{kExitUsage, "dot: --method needs a profile --input"};
        const auto tournament = load_tournament(tournament_path);
        ok_or_throw(sc_tournament_to_dot(tournament.get(), &out), "dot");
    } else if (method.empty()) {
        const auto profile = load_profile(input);
        sc_tournament* raw = nullptr;
        ok_or_throw(sc_tournament_from_profile(profile.get(), &raw), "dot");
        const TournamentPtr tournament(raw);
        ok_or_throw(sc_tournament_to_dot(tournament.get(), &out), "dot");
    } else {
        const auto profile = load_profile(input);
        ok_or_throw(sc_tabulate(profile.get(), method.c_str(), SC_FORMAT_DOT, &out), "dot");
    }
    emit(out);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split Cycle election toolkit"};
    app.require_subcommand(1, 1);

    TabulateArgs tab;
    auto* tabulate = app.add_subcommand("tabulate", "Evaluate methods on a profile file");
    tabulate->add_option("--input", tab.input, "Profile file, or - for stdin")->required();
    tabulate->add_option("--methods", tab.methods, "Comma-separated methods, or all");
    tabulate->add_option("--format", tab.format)->check(CLI::IsMember({"text", "json", "dot"}));

    std::string tournament_path;
    auto* realize = app.add_subcommand("realize", "Print a profile realizing a weighted tournament");
    realize->add_option("--tournament", tournament_path, "Tournament file, or - for stdin")->required();

    AxiomArgs ax;
    auto* axioms = app.add_subcommand("axioms", "Search for an axiom counterexample");
    axioms->add_option("--method", ax.method)->required();
    axioms->add_option("--axiom", ax.axiom);
    axioms->add_option("--refines", ax.refines, "Search for a defeat of this method missing from --method");
    axioms->add_option("--level", ax.level)->check(CLI::IsMember({"vccr", "vscc"}));
    axioms->add_option("--candidates", ax.candidates);
    axioms->add_option("--voters", ax.voters);
    axioms->add_option("--ballots", ax.ballots)->check(CLI::IsMember({"linear", "weak"}));
    axioms->add_option("--mode", ax.mode)->check(CLI::IsMember({"exhaustive", "random"}));
    axioms->add_option("--trials", ax.trials);
    axioms->add_option("--seed", ax.seed);
    axioms->add_option("--ceiling", ax.ceiling);
    axioms->add_option("--seed-profile", ax.seed_profile, "Profile file tried before the search");
    axioms->add_option("--seed-other", ax.seed_other, "Comparison profile file for the seed");
    axioms->add_option("--seed-ballot", ax.seed_ballot, "Ballot added to the seed, e.g. \"c > a > b\"");

    std::string fixture_id;
    auto* examples = app.add_subcommand("paper-examples", "List fixtures, or dump one");
    examples->add_option("--id", fixture_id);

    std::string dot_input, dot_tournament, dot_method;
    auto* dot = app.add_subcommand("dot", "Export a margin graph, or a method's defeat graph, as DOT");
    dot->add_option("--input", dot_input, "Profile file");
    dot->add_option("--tournament", dot_tournament, "Tournament file");
    dot->add_option("--method", dot_method);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*tabulate) return run_tabulate(tab);
        if (*realize) return run_realize(tournament_path);
        if (*axioms) return run_axioms(ax);
        if (*examples) return run_paper_examples(fixture_id);
        if (*dot) return run_dot(dot_input, dot_tournament, dot_method);
    } catch (const Failure& f) {
        std::fflush(stdout);
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
    return kExitUsage;
}
