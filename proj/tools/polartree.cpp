#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "polartree.h"

namespace {

struct PairArgs {
    std::optional<std::string> f, g, fixture, roots_f, roots_g;
    int e1 = 0;
    int e2 = 0;
};

void add_pair_options(CLI::App& app, PairArgs& a, const std::string& suffix, const std::string& what) {
    app.add_option("--f" + suffix, a.f, "f" + what + " as an expression in x, y");
    app.add_option("--g" + suffix, a.g, "g" + what + " as an expression in x, y");
    app.add_option("--fixture" + suffix, a.fixture, "named fixture" + what);
    app.add_option("--roots-f" + suffix, a.roots_f, "comma-separated roots of f" + what + " as polynomials in y");
    app.add_option("--roots-g" + suffix, a.roots_g, "comma-separated roots of g" + what + " as polynomials in y");
    app.add_option("--E1" + suffix, a.e1, "power of y dividing f" + what)->check(CLI::NonNegativeNumber);
    app.add_option("--E2" + suffix, a.e2, "power of y dividing g" + what)->check(CLI::NonNegativeNumber);
}

pt_status apply_pair(pt_session* s, int slot, const PairArgs& a) {
    const int kinds = (a.fixture ? 1 : 0) + ((a.f || a.g) ? 1 : 0) + ((a.roots_f || a.roots_g) ? 1 : 0);
    if (kinds != 1) {
        std::cerr << "error: give exactly one of --f/--g, --roots-f/--roots-g or --fixture"
                  << (slot == PT_SECOND ? " for the second pair" : "") << '\n';
        return PT_ERR_ARGUMENT;
    }
    if (a.fixture) return pt_set_fixture(s, slot, a.fixture->c_str());
    if (a.f || a.g) {
        if (!a.f || !a.g) {
            std::cerr << "error: both --f and --g are required\n";
            return PT_ERR_ARGUMENT;
        }
        return pt_set_pair(s, slot, a.f->c_str(), a.g->c_str());
    }
    return pt_set_roots(s, slot, a.roots_f ? a.roots_f->c_str() : "", a.roots_g ? a.roots_g->c_str() : "", a.e1, a.e2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tree model, polar roots and factor checks for pairs of plane curve germs"};
    app.set_version_flag("--version", std::string(pt_version()));

    std::string command;
    PairArgs first, second;
    int field = 0;
    std::optional<std::string> trunc, shift;
    std::optional<int> s;
    bool laurent = false;
    bool json = false;
    bool list = false;

    app.add_option("command", command, "roots, tree, analyze, verify, factor, compare, reduce or generic")
        ->check(CLI::IsMember({"roots", "tree", "analyze", "verify", "factor", "compare", "reduce", "generic"}));
    add_pair_options(app, first, "", "");
    add_pair_options(app, second, "2", " (second pair, compare only)");
    app.add_option("--field", field, "initial field conductor N of Q(zeta_N)")->check(CLI::NonNegativeNumber);
    app.add_option("--trunc", trunc, "initial truncation, a positive rational");
    app.add_flag("--laurent", laurent, "allow negative powers of y");
    app.add_option("--shift", shift, "shear y -> y + c x by a constant c, or 'auto'");
    app.add_option("--s", s, "meromorphic reduction exponent")->check(CLI::NonNegativeNumber);
    app.add_flag("--json", json, "print the report document instead of text");
    app.add_flag("--list-fixtures", list, "list the named fixtures and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (list) {
        for (size_t i = 0; i < pt_fixture_count(); ++i)
            std::cout << pt_fixture_name(i) << "  " << pt_fixture_description(i) << '\n';
        return 0;
    }
    if (command.empty()) {
        std::cerr << "error: a command is required\n" << app.help();
        return 2;
    }

    std::unique_ptr<pt_session, decltype(&pt_session_destroy)> session(pt_session_create(), pt_session_destroy);
    if (!session) {
        std::cerr << "error: out of memory\n";
        return 1;
    }
    pt_session* ss = session.get();

    auto check = [&](pt_status st) {
        if (st == PT_OK) return true;
        if (*pt_last_error(ss)) std::cerr << "error: " << pt_last_error_code(ss) << ": " << pt_last_error(ss) << '\n';
        return false;
    };
    pt_status st = apply_pair(ss, PT_FIRST, first);
    if (!check(st)) return pt_exit_code(st);
    const bool has_second = second.f || second.g || second.fixture || second.roots_f || second.roots_g;
    if (command == "compare") {
        st = apply_pair(ss, PT_SECOND, second);
        if (!check(st)) return pt_exit_code(st);
    } else if (has_second) {
        std::cerr << "error: second-pair options are only used by compare\n";
        return 2;
    }
    if (!check(st = pt_set_field(ss, field))) return pt_exit_code(st);
    if (trunc && !check(st = pt_set_trunc(ss, trunc->c_str()))) return pt_exit_code(st);
    if (!check(st = pt_set_laurent(ss, laurent ? 1 : 0))) return pt_exit_code(st);
    if (shift && !check(st = pt_set_shift(ss, shift->c_str()))) return pt_exit_code(st);
    if (s && !check(st = pt_set_s(ss, *s))) return pt_exit_code(st);

    char* json_out = nullptr;
    char* text_out = nullptr;
    st = pt_run(ss, command.c_str(), &json_out, &text_out);
    if (st == PT_OK || st == PT_VERIFICATION_FAILED) {
        std::fputs(json ? json_out : text_out, stdout);
        if (json) std::fputs("\n", stdout);
        pt_string_free(json_out);
        pt_string_free(text_out);
        if (st == PT_VERIFICATION_FAILED) std::cerr << "verification failed\n";
        return pt_exit_code(st);
    }
    check(st);
    return pt_exit_code(st);
}
