#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <sstream>

#include "strata/cli.hpp"

using strata::cli::run;
using json = nlohmann::ordered_json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spin subcommand reports three agreeing routes") {
    const Result r = invoke({"spin", "Q(-1,9)", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["pattern"] == "Q(9,-1)");
    CHECK(report["defined"] == true);
    CHECK(report["parity"] == "even");
    CHECK(report["n_plus"] == 1);
    CHECK(report["n_minus"] == 1);
    CHECK(report["route_closed"] == "even");
    CHECK(report["route_sum"] == "even");
    CHECK(report["route_arf"] == "even");
    CHECK(report["routes_agree"] == true);
}

TEST_CASE("spin subcommand on an undefined pattern still succeeds") {
    const Result r = invoke({"spin", "Q(2,2)", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["defined"] == false);
    CHECK(report["parity"] == "undefined");
    CHECK(report["route_sum"] == "undefined");
    REQUIRE(report["warnings"].size() == 1);
}

TEST_CASE("spin subcommand flags empty strata") {
    const Result r = invoke({"spin", "Q(4)", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["parity"] == "even");
    REQUIRE(report["warnings"].size() == 1);
    CHECK(report["warnings"][0].get<std::string>().find("empty") != std::string::npos);
}

TEST_CASE("stratum info reports facts") {
    const Result r = invoke({"stratum", "info", "Q(1,3)", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["genus"] == 2);
    CHECK(report["dimension"] == 4);
    CHECK(report["nonempty"] == false);
    CHECK(report["connectedness"] == "unknown");

    const Result abelian = invoke({"stratum", "info", "H(2,4)", "--json"});
    const json ab = json::parse(abelian.out);
    CHECK(ab["genus"] == 4);
    CHECK(ab["nonempty"].is_null());

    const Result multi = invoke({"stratum", "info", "Q(12)", "--json"});
    CHECK(json::parse(multi.out)["connectedness"] == "components=2");
}

TEST_CASE("cover subcommand uses the documented keys") {
    const Result r = invoke({"cover", "Q(-1,9)", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["base"] == "Q(9,-1)");
    CHECK(report["cover"] == "H(10)");
    CHECK(report["ramification_count"] == 2);
    CHECK(report["cover_genus"] == 6);
    CHECK(report["h1_dim"] == 12);
    CHECK(report["square_candidate"] == false);

    const Result kept = invoke({"cover", "Q(-1,9,0)", "--keep-marked", "--json"});
    CHECK(json::parse(kept.out)["cover"] == "H(10,0^2)");
}

TEST_CASE("arf chain prints the form, the basis and the invariant") {
    const Result r = invoke({"arf", "chain", "1,1,1,1", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["rank"] == 2);
    CHECK(report["values"] == "11");
    CHECK(report["arf"] == 1);
    CHECK(report["parity"] == "odd");
    CHECK(report["basis_alpha"].size() == 1);

    CHECK(invoke({"arf", "chain", "1,1"}).code == 2);
    CHECK(invoke({"arf", "chain", "1,2,3,4"}).code == 2);
    CHECK(invoke({"arf", "chain", "1,1,x,1"}).code == 2);
}

TEST_CASE("arf count matches the closed-form counts") {
    const Result r = invoke({"arf", "count", "--genus", "2", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["arf0"] == 10);
    CHECK(report["arf1"] == 6);
    CHECK(invoke({"arf", "count", "--genus", "0"}).code == 2);
    CHECK(invoke({"arf", "count", "--genus", "9"}).code == 2);
    CHECK(invoke({"arf", "count", "--genus", "7", "--max-genus", "7"}).code == 0);
}

TEST_CASE("billiard classify end to end") {
    const Result r = invoke({"billiard", "classify", "--angles", "11/14,1/7,1/14", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["N"] == 14);
    CHECK(report["genus"] == 6);
    CHECK(report["abelian_pattern"] == "H(10)");
    CHECK(report["fake_zero_count"] == 3);
    CHECK(report["quadratic_pattern"] == "Q(9,-1)");
    CHECK(report["Q"] == 7);
    CHECK(report["is_abelian_square"] == false);
    CHECK(report["spin"] == "even");
    CHECK(report["component_label"] == "H^even(10)");
    CHECK(report["hyperelliptic_parity"] == "odd");
    CHECK(report["hyperelliptic_verdict"] == "not hyperelliptic");
    CHECK(report["routes_agree"] == true);
    CHECK(report["cover_consistent"] == true);

    CHECK(invoke({"billiard", "classify", "--angles", "1/3,1/3"}).code == 2);
    CHECK(invoke({"billiard", "classify", "--angles", "1/3,1/3", "--relax"}).code == 0);
}

TEST_CASE("enumerate lists patterns with facts") {
    const Result r = invoke({"enumerate", "--flavor", "Q", "--max-sum", "8", "--json"});
    REQUIRE(r.code == 0);
    const json report = json::parse(r.out);
    CHECK(report["count"] == report["patterns"].size());
    int empty_count = 0;
    bool saw_q12 = false;
    for (const auto& row : report["patterns"]) {
        if (row["nonempty"] == false) ++empty_count;
        if (row["pattern"] == "Q(12)") saw_q12 = true;
    }
    CHECK(empty_count == 4);
    CHECK_FALSE(saw_q12);

    CHECK(invoke({"enumerate", "--flavor", "H", "--max-sum", "8"}).code == 2);
}

TEST_CASE("usage and validation failures exit with code 2 and a parsable line") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"spin", "Q(4,-1)"},                 // sum violation
             {"spin", "H(2,4)"},                  // flavor violation
             {"spin", "Q(1,"},                    // syntax
             {"cover", "H(2)"},                   // flavor violation
             {"nonsense"},                        // unknown subcommand
             {"stratum"},                         // missing leaf subcommand
             {"billiard", "classify"},            // missing required option
         }) {
        const Result r = invoke(args);
        CHECK(r.code == 2);
        CHECK(r.err.rfind("error: ", 0) == 0);
        CHECK(r.err.find('\n') == r.err.size() - 1);  // a single line
    }
}

TEST_CASE("help exits zero") {
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({}).code == 2);
}

TEST_CASE("output bytes are identical across runs and parallelism settings") {
    const std::vector<std::vector<std::string>> cases = {
        {"spin", "Q(-1,9)", "--json"},
        {"stratum", "info", "Q(12)", "--json"},
        {"cover", "Q(4,4)", "--json"},
        {"arf", "chain", "1,1,1,3,1,5", "--json"},
        {"billiard", "classify", "--angles", "11/14,1/7,1/14", "--json"},
        {"enumerate", "--flavor", "Q", "--max-sum", "12", "--max-poles", "6"},
    };
    for (const auto& args : cases) {
        const Result first = invoke(args);
        const Result second = invoke(args);
        CHECK(first.code == second.code);
        CHECK(first.out == second.out);
    }

    const Result serial = invoke({"enumerate", "--flavor", "Q", "--max-sum", "12", "--json"});
    setenv("STRATA_JOBS", "4", 1);
    const Result parallel = invoke({"enumerate", "--flavor", "Q", "--max-sum", "12", "--json"});
    unsetenv("STRATA_JOBS");
    CHECK(serial.out == parallel.out);
    CHECK(serial.code == parallel.code);
}
