#include "splitcycle/splitcycle.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <variant>

#include "splitcycle/axioms.hpp"
#include "splitcycle/constructions.hpp"
#include "splitcycle/error.hpp"
#include "splitcycle/report.hpp"
#include "splitcycle/text_format.hpp"

struct sc_profile {
    splitcycle::Profile value;
};

struct sc_tournament {
    splitcycle::MarginGraph value;
};

namespace {

using namespace splitcycle;

struct LastError {
    std::string message;
    std::size_t line = 0;
    std::size_t column = 0;
};

thread_local LastError last_error;

sc_status status_of(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidInput: return SC_ERR_INVALID_INPUT;
    case ErrorKind::Parse: return SC_ERR_PARSE;
    case ErrorKind::NotRealizable: return SC_ERR_NOT_REALIZABLE;
    case ErrorKind::OracleBound: return SC_ERR_ORACLE_BOUND;
    case ErrorKind::NoCut: return SC_ERR_NO_CUT;
    case ErrorKind::Cyclic: return SC_ERR_CYCLIC;
    case ErrorKind::InvariantViolation: return SC_ERR_INVARIANT;
    }
    return SC_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and the thread's last error.
template <typename Body>
sc_status guarded(Body&& body) noexcept {
    last_error = {};
    try {
        body();
        return SC_OK;
    } catch (const ParseError& e) {
        last_error = {e.what(), e.line(), e.column()};
        return SC_ERR_PARSE;
    } catch (const Error& e) {
        last_error.message = e.what();
        return status_of(e.kind());
    } catch (const std::bad_alloc&) {
        last_error.message = "out of memory";
        return SC_ERR_INTERNAL;
    } catch (const std::exception& e) {
        last_error.message = e.what();
        return SC_ERR_INTERNAL;
    }
}

void require(const void* ptr, const char* what) {
    if (!ptr) fail_input(std::string(what) + " must not be null");
}

char* copy_out(const std::string& s) {
    auto* buffer = static_cast<char*>(std::malloc(s.size() + 1));
    if (!buffer) throw std::bad_alloc();
    std::memcpy(buffer, s.data(), s.size() + 1);
    return buffer;
}

FixtureId fixture_or_fail(const char* token) {
    require(token, "fixture id");
    const auto id = parse_fixture(token);
    if (!id) fail_input(std::string("unknown fixture '") + token + "'");
    return *id;
}

} // namespace

extern "C" {

const char* sc_last_error(void) { return last_error.message.c_str(); }
size_t sc_last_error_line(void) { return last_error.line; }
size_t sc_last_error_column(void) { return last_error.column; }

void sc_string_free(char* s) { std::free(s); }

sc_status sc_profile_parse(const char* text, sc_profile** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new sc_profile{parse_profile(text)};
    });
}

sc_status sc_profile_from_fixture(const char* fixture_id, sc_profile** out) {
    return guarded([&] {
        require(out, "out");
        *out = new sc_profile{fixture_profile(fixture_or_fail(fixture_id))};
    });
}

sc_status sc_profile_to_text(const sc_profile* p, char** out) {
    return guarded([&] {
        require(p, "profile");
        require(out, "out");
        *out = copy_out(format_profile(p->value));
    });
}

size_t sc_profile_num_voters(const sc_profile* p) { return p ? p->value.num_voters() : 0; }
size_t sc_profile_num_candidates(const sc_profile* p) { return p ? p->value.num_candidates() : 0; }
void sc_profile_free(sc_profile* p) { delete p; }

sc_status sc_tournament_parse(const char* text, sc_tournament** out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = new sc_tournament{parse_tournament(text)};
    });
}

sc_status sc_tournament_from_profile(const sc_profile* p, sc_tournament** out) {
    return guarded([&] {
        require(p, "profile");
        require(out, "out");
        *out = new sc_tournament{margin_graph(p->value)};
    });
}

sc_status sc_tournament_to_text(const sc_tournament* t, char** out) {
    return guarded([&] {
        require(t, "tournament");
        require(out, "out");
        *out = copy_out(format_tournament(t->value));
    });
}

sc_status sc_tournament_to_dot(const sc_tournament* t, char** out) {
    return guarded([&] {
        require(t, "tournament");
        require(out, "out");
        *out = copy_out(margin_graph_dot(t->value));
    });
}

void sc_tournament_free(sc_tournament* t) { delete t; }

sc_status sc_realize(const sc_tournament* t, sc_profile** out) {
    return guarded([&] {
        require(t, "tournament");
        require(out, "out");
        *out = new sc_profile{debord_realize(t->value)};
    });
}

sc_status sc_tabulate(const sc_profile* p, const char* methods, sc_format format, char** out) {
    return guarded([&] {
        require(p, "profile");
        require(methods, "methods");
        require(out, "out");
        const auto ids = parse_method_list(methods);
        OutputFormat f = OutputFormat::Text;
        switch (format) {
        case SC_FORMAT_TEXT: f = OutputFormat::Text; break;
        case SC_FORMAT_JSON: f = OutputFormat::Json; break;
        case SC_FORMAT_DOT: f = OutputFormat::Dot; break;
        default: fail_input("unknown output format");
        }
        *out = copy_out(tabulate(p->value, ids, f));
    });
}

sc_status sc_fixture_text(const char* fixture_id, char** out) {
    return guarded([&] {
        require(out, "out");
        const auto fixture = paper_fixture(fixture_or_fail(fixture_id));
        if (const auto* p = std::get_if<Profile>(&fixture))
            *out = copy_out(format_profile(*p));
        else
            *out = copy_out(format_tournament(std::get<MarginGraph>(fixture)));
    });
}

sc_status sc_fixture_ids(char** out) {
    return guarded([&] {
        require(out, "out");
        std::string text;
        for (auto id : all_fixtures()) text += std::string(to_string(id)) + "\n";
        *out = copy_out(text);
    });
}

void sc_search_options_init(sc_search_options* opts) {
    if (!opts) return;
    *opts = sc_search_options{};
    const SearchConfig defaults;
    opts->candidates = defaults.candidates;
    opts->voters = defaults.voters;
    opts->weak = 0;
    opts->exhaustive = 1;
    opts->trials = defaults.trials;
    opts->seed = defaults.seed;
    opts->ceiling = defaults.ceiling;
}

sc_status sc_check(const sc_search_options* opts, int* found, char** report) {
    return guarded([&] {
        require(opts, "options");
        require(found, "found");
        require(report, "report");
        require(opts->method, "method");
        const auto method = parse_method(opts->method);
        if (!method) fail_input(std::string("unknown method '") + opts->method + "'");

        SearchConfig cfg;
        cfg.candidates = opts->candidates;
        cfg.voters = opts->voters;
        cfg.ballots = opts->weak ? BallotKind::Weak : BallotKind::Linear;
        cfg.mode = opts->exhaustive ? SearchMode::Exhaustive : SearchMode::Random;
        cfg.trials = opts->trials;
        cfg.seed = opts->seed;
        cfg.ceiling = opts->ceiling;
        if (opts->seed_profile) {
            SeedCase seed{parse_profile(opts->seed_profile), std::nullopt, std::nullopt};
            if (opts->seed_other) seed.other = parse_profile(opts->seed_other);
            if (opts->seed_ballot) seed.ballot = parse_ballot(opts->seed_ballot, seed.profile.candidates());
            cfg.seeds.push_back(std::move(seed));
        } else if (opts->seed_other || opts->seed_ballot) {
            fail_input("a seed comparison profile or ballot needs a seed profile");
        }

        AxiomReport result;
        if (opts->refines) {
            const auto g = parse_method(opts->refines);
            if (!g) fail_input(std::string("unknown method '") + opts->refines + "'");
            result = refines(*method, *g, cfg);
        } else {
            require(opts->axiom, "axiom");
            const auto axiom = parse_axiom(opts->axiom);
            if (!axiom) fail_input(std::string("unknown axiom '") + opts->axiom + "'");
            Level level = applies_at(*axiom, Level::Vccr) && has_defeat_relation(*method) ? Level::Vccr : Level::Vscc;
            if (opts->level) {
                const auto parsed = parse_level(opts->level);
                if (!parsed) fail_input(std::string("unknown level '") + opts->level + "'");
                level = *parsed;
            }
            result = check(*method, level, *axiom, cfg);
        }
        const std::string text = format_report(result);
        *report = copy_out(text);
        *found = result.verdict == Verdict::Counterexample ? 1 : 0;
    });
}

} // extern "C"
