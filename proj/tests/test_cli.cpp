#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "examples.hpp"
#include "semihilb/cli.hpp"
#include "semihilb/error.hpp"

#include <sstream>

using namespace semihilb;
using namespace semihilb::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string s6 = format_list(ex::s6);

std::string usage_message(const std::vector<std::string>& args) {
    try {
        parse(args);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UsageError);
        return e.what();
    }
    FAIL("parse accepted " << args.size() << " arguments");
    return "";
}

} // namespace

TEST_CASE("parse") {
    auto c = parse({"info", s6});
    CHECK(c.verb == "info");
    CHECK(*c.gens == ex::s6);
    CHECK(c.format == Format::Text);

    c = parse({"search", "--e-range", "10..12", "--v-offset", "3"});
    CHECK(c.verb == "search");
    CHECK(*c.e_range == std::pair<Int, Int>{10, 12});
    CHECK(*c.v_offset == 3);
    CHECK(c.workers == 1);
    CHECK(c.seed == default_seed);

    c = parse({"check", "thm-e3", "13,14,17", "--format", "json", "--max-level", "4"});
    CHECK(c.target == "thm-e3");
    CHECK(c.format == Format::Json);
    CHECK(*c.max_level == 4);
    CHECK(parse({"search", "--e-range", "13", "--v-offset", "4", "--workers", "8", "--gen-bound", "90"}).gen_bound == 90);
    CHECK(parse({"residue-table", "13"}).e == 13);
    CHECK(parse({"check", "corpus", "--seed", "5"}).seed == 5);

    c = parse({"info", "4,6"});
    CHECK(*c.gens == std::vector<Int>{4, 6});
}

TEST_CASE("usage errors name the offending flag or argument") {
    CHECK(usage_message({"info", s6, "--workers", "0"}).find("--workers") != std::string::npos);
    CHECK(usage_message({"info", s6, "--format", "xml"}).find("--format") != std::string::npos);
    CHECK(usage_message({"info", s6, "--bogus"}).find("--bogus") != std::string::npos);
    CHECK(usage_message({"info", s6, "--format", "csv"}).find("--format csv") != std::string::npos);
    CHECK(usage_message({"search", "--v-offset", "3"}).find("--e-range") != std::string::npos);
    CHECK(usage_message({"search", "--e-range", "13"}).find("--v-offset") != std::string::npos);
    CHECK(usage_message({"search", "--e-range", "a..b", "--v-offset", "3"}).find("--e-range") != std::string::npos);
    CHECK(usage_message({"frob", s6}).find("frob") != std::string::npos);
    CHECK(usage_message({"check", "thm-e9", s6}).find("thm-e9") != std::string::npos);
    CHECK(usage_message({"info"}).find("info") != std::string::npos);
    CHECK(usage_message({"info", s6, "7"}).find("'7'") != std::string::npos);
    CHECK(usage_message({"info", "3,x"}).find("'x'") != std::string::npos);
}

TEST_CASE("exit codes") {
    auto r = run_cli({"info", "4,6"});
    CHECK(r.code == exit_input);
    CHECK(r.err.find("GcdNotOne") != std::string::npos);
    CHECK(run_cli({"info", "3,5,6"}).code == exit_input); // not minimal
    CHECK(run_cli({"check", "thm-e4", s6}).code == exit_not_applicable);
    CHECK(run_cli({"check", "thm-e3", s6}).code == exit_ok);
    CHECK(run_cli({"check", "c3", format_list(ex::es5_2)}).code == exit_not_applicable);
    CHECK(run_cli({"check", "ap24", format_list(ex::es5_2)}).code == exit_ok);
    CHECK(run_cli({"check", "apj1", format_list(ex::esj1_1)}).code == exit_ok);
    CHECK(run_cli({"residue-table", "9"}).code == exit_input);
    CHECK(run_cli({"construct-sp", "1,1,5,2,2,3"}).code == exit_input);
    CHECK(run_cli({"search", "--e-range", "13", "--v-offset", "5"}).code == exit_input);
    CHECK(run_cli({"--help"}).code == exit_ok);
    CHECK(run_cli({}).code == exit_input);
}

TEST_CASE("info on the running example") {
    auto rep = execute(parse({"info", s6}));
    const auto& p = rep.payload;
    CHECK(p["hilbert"] == Json::array({1, 10, 9, 11, 12, 13}));
    CHECK(p["stable_at"] == 5);
    CHECK(p["d_sets"]["2"] == Json::array({44, 49, 54, 59}));
    CHECK(p["c_sets"]["3"] == Json::array({57, 62, 67, 72}));
    CHECK(p["k0"] == 2);
    CHECK(p["classification"]["symmetric"] == false);
    CHECK(p["apery"] == Json(ex::make(ex::s6).apery()));
    std::vector<std::string> keys;
    for (const auto& [k, v] : p.items()) keys.push_back(k);
    for (const char* k : {"generators", "e", "v", "frobenius", "apery", "ap_strata", "hilbert", "stable_at", "d_sets",
                          "c_sets", "k0", "decreasing_levels", "classification"})
        CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());

    auto r = run_cli({"info", s6});
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("hilbert: [1,10,9,11,12,13->]\n") != std::string::npos);
    CHECK(r.out.find("  2: 44,49,54,59\n") != std::string::npos);
}

TEST_CASE("golden bytes") {
    CHECK(run_cli({"hilbert", s6}).out ==
          "generators: 13,19,24,44,49,54,55,59,60,66\nhilbert: [1,10,9,11,12,13->]\nstable_at: 5\ndecreasing_levels: 2\n");
    CHECK(run_cli({"hilbert", s6, "--format", "json"}).out ==
          "{\n  \"generators\": [\n    13,\n    19,\n    24,\n    44,\n    49,\n    54,\n    55,\n    59,\n    60,\n    66\n  ],\n"
          "  \"hilbert\": [\n    1,\n    10,\n    9,\n    11,\n    12,\n    13\n  ],\n  \"stable_at\": 5,\n"
          "  \"decreasing_levels\": [\n    2\n  ]\n}\n");
    auto r = run_cli({"hilbert", s6, "--max-level", "3"});
    CHECK(r.out.find("hilbert: [1,10,9,11]\n") != std::string::npos);
    CHECK(r.err.find("warning:") != std::string::npos);
    CHECK(run_cli({"hilbert", s6, "--max-level", "7"}).out.find("hilbert: [1,10,9,11,12,13,13,13->]") != std::string::npos);
}

TEST_CASE("check verbs") {
    auto rep = execute(parse({"check", "thm-e3", format_list(ex::sp_rows[0])}));
    CHECK(rep.exit_code == exit_ok);
    CHECK(rep.payload["result"]["verdict"] == "Consistent");
    for (const auto& [k, v] : rep.payload["result"]["conditions"].items()) CHECK(v == true);

    rep = execute(parse({"check", "ap24", format_list(ex::es5_3)}));
    CHECK(rep.payload["result"][0]["tag"] == "d");

    rep = execute(parse({"check", "symmetric", "3,5"}));
    CHECK(rep.payload["result"]["symmetric"] == true);
    CHECK(rep.payload["result"]["symmetric_apery"] == true);

    rep = execute(parse({"check", "delta", s6}));
    CHECK(rep.payload["result"]["all_ok"] == true);

    rep = execute(parse({"check", "corpus", "--seed", "3"}));
    CHECK(rep.payload["delta_failures"] == 0);
    CHECK(rep.payload["gorenstein_guard_failures"] == 0);
    for (const auto& [k, v] : rep.payload["verdicts"].items()) CHECK(v["Violated"] == 0);
}

TEST_CASE("residue-table and construct-sp") {
    auto rep = execute(parse({"residue-table", "13"}));
    CHECK(rep.payload["admissible"] == Json::array({4, 10}));
    CHECK(execute(parse({"residue-table", "12"})).payload["admissible"].empty());

    rep = execute(parse({"construct-sp", "6,1,0,2,2,3"}));
    CHECK(rep.payload["generators"] == Json(ex::s6));
    CHECK(rep.payload["hilbert"] == Json::array({1, 10, 9, 11, 12, 13}));
    CHECK(rep.payload["symmetric"] == false);
}

TEST_CASE("json round trip") {
    const std::vector<std::vector<std::string>> cmds{
        {"info", s6},
        {"info", format_list(ex::es5_1)},
        {"info", format_list(ex::esj1_4)},
        {"apery", s6},
        {"hilbert", format_list(ex::es2_4)},
        {"strata", format_list(ex::es5_2)},
        {"check", "thm-e4", format_list(ex::es5_3)},
        {"check", "apj1", format_list(ex::esj1_1)},
        {"check", "lemma-r0", format_list(ex::esj1_4)},
        {"residue-table", "13"},
        {"construct-sp", "1,1,1,2,2,3"},
        {"search", "--e-range", "13", "--v-offset", "3", "--gen-bound", "45"},
    };
    for (auto args : cmds) {
        args.insert(args.end(), {"--format", "json"});
        const auto cmd = parse(args);
        const auto rep = execute(cmd);
        const auto text = render(rep, Format::Json);
        CHECK(Json::parse(text) == rep.payload);
        CHECK(render(execute(cmd), Format::Json) == text);
        CHECK(run_cli(args).out == text);
    }
}

TEST_CASE("search output independent of workers") {
    const std::vector<std::string> base{"search", "--e-range", "13", "--v-offset", "3", "--gen-bound", "78", "--format", "csv"};
    auto one = base, eight = base, three = base;
    one.insert(one.end(), {"--workers", "1"});
    eight.insert(eight.end(), {"--workers", "8"});
    three.insert(three.end(), {"--workers", "3"});
    const auto a = run_cli(one), b = run_cli(eight), c = run_cli(three);
    CHECK(a.code == exit_ok);
    CHECK(a.out.rfind("e,v,generators,hilbert,decreasing_levels\n", 0) == 0);
    CHECK(a.out.size() > 100);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}
