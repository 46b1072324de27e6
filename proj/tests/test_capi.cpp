#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "polartree.h"

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run cli(const std::string& args) {
    const std::string cmd = std::string(POLARTREE_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

struct Session {
    pt_session* s = pt_session_create();
    ~Session() { pt_session_destroy(s); }
};

}  // namespace

TEST_CASE("null handles and arguments") {
    CHECK(pt_set_pair(nullptr, PT_FIRST, "x", "y") == PT_ERR_NULL);
    CHECK(pt_run(nullptr, "verify", nullptr, nullptr) == PT_ERR_NULL);
    CHECK(std::strlen(pt_last_error(nullptr)) > 0);
    Session ss;
    REQUIRE(ss.s);
    CHECK(pt_set_pair(ss.s, 7, "x", "y") == PT_ERR_ARGUMENT);
    CHECK(pt_set_pair(ss.s, PT_FIRST, nullptr, "y") == PT_ERR_ARGUMENT);
    CHECK(pt_set_fixture(ss.s, PT_FIRST, "no-such-fixture") == PT_ERR_INPUT);
    CHECK(std::string(pt_last_error_code(ss.s)) == "InvalidArgument");
    CHECK(pt_set_trunc(ss.s, "-1") == PT_ERR_ARGUMENT);
    CHECK(pt_set_roots(ss.s, PT_FIRST, "y,,y^2", "0", 0, 0) == PT_ERR_SYNTAX);
    pt_string_free(nullptr);
}

TEST_CASE("running a fixture through the C API") {
    Session ss;
    REQUIRE(pt_set_fixture(ss.s, PT_FIRST, "line-conic") == PT_OK);
    char* json = nullptr;
    char* text = nullptr;
    REQUIRE(pt_run(ss.s, "verify", &json, &text) == PT_OK);
    REQUIRE(json);
    REQUIRE(text);
    auto doc = nlohmann::json::parse(json);
    CHECK(doc["version"] == 1);
    CHECK(doc["command"] == "verify");
    CHECK(doc["verification"]["pass"] == true);
    CHECK(doc["oracle"]["K"] == 0);
    CHECK(std::string(text).find("B*") != std::string::npos);
    CHECK(*pt_last_error(ss.s) == '\0');
    pt_string_free(json);
    pt_string_free(text);
}

TEST_CASE("error statuses map to exit codes") {
    Session ss;
    REQUIRE(pt_set_pair(ss.s, PT_FIRST, "x +", "y") == PT_OK);
    CHECK(pt_run(ss.s, "tree", nullptr, nullptr) == PT_ERR_SYNTAX);
    CHECK(std::string(pt_last_error_code(ss.s)) == "SyntaxError");
    REQUIRE(pt_set_pair(ss.s, PT_FIRST, "(x - y)*x", "(x - y)") == PT_OK);
    CHECK(pt_run(ss.s, "tree", nullptr, nullptr) == PT_ERR_INPUT);
    CHECK(pt_run(ss.s, "nonsense", nullptr, nullptr) != PT_OK);
    REQUIRE(pt_set_pair(ss.s, PT_FIRST, "x^3 - 2*y^3", "y") == PT_OK);
    CHECK(pt_run(ss.s, "tree", nullptr, nullptr) == PT_ERR_FIELD);
    CHECK(pt_exit_code(PT_OK) == 0);
    CHECK(pt_exit_code(PT_VERIFICATION_FAILED) == 1);
    CHECK(pt_exit_code(PT_ERR_INTERNAL) == 1);
    CHECK(pt_exit_code(PT_ERR_SYNTAX) == 2);
    CHECK(pt_exit_code(PT_ERR_INPUT) == 2);
    CHECK(pt_exit_code(PT_ERR_FIELD) == 3);
    CHECK(pt_exit_code(PT_ERR_TRUNCATION) == 3);
}

TEST_CASE("fixture listing") {
    REQUIRE(pt_fixture_count() > 10);
    for (size_t i = 0; i < pt_fixture_count(); ++i) {
        CHECK(pt_fixture_name(i));
        CHECK(pt_fixture_description(i));
    }
    CHECK(pt_fixture_name(pt_fixture_count()) == nullptr);
    CHECK(std::string(pt_version()) == "1.0.0");
}

TEST_CASE("command line exit codes") {
    CHECK(cli("verify --fixture three-pair").code == 0);
    CHECK(cli("tree --f 'x^2 - y^3' --g 'x'").code == 0);
    CHECK(cli("tree --f 'x +' --g 'x'").code == 2);
    CHECK(cli("tree --f 'x^2' --g 'x'").code == 2);
    CHECK(cli("frobnicate --fixture line-conic").code == 2);
    CHECK(cli("tree").code == 2);
    CHECK(cli("tree --fixture line-conic --f x --g y").code == 2);
    CHECK(cli("tree --f 'x^3 - 2*y^3' --g 'y'").code == 3);
    CHECK(cli("--list-fixtures").code == 0);
    CHECK(cli("--version").out.find("1.0.0") != std::string::npos);
    CHECK(cli("compare --fixture collinear-E8 --fixture2 collinear-E9").code == 0);
    CHECK(cli("reduce --fixture mero-s2").code == 0);
    CHECK(cli("generic --f 'y' --g 'y - x^2'").code == 0);
}

TEST_CASE("command line output is byte-identical across runs") {
    for (const char* args : {"verify --fixture collinear-tower --json", "factor --fixture branch-two-pair", "roots --fixture three-pair-minus"}) {
        Run a = cli(args);
        Run b = cli(args);
        CHECK(a.code == 0);
        CHECK_FALSE(a.out.empty());
        CHECK(a.out == b.out);
    }
    auto doc = nlohmann::json::parse(cli("analyze --fixture collinear-E8 --json").out);
    CHECK(doc["command"] == "analyze");
}
