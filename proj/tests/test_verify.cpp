#include <doctest.h>

#include <json.hpp>

#include "hicat/verify.hpp"

using namespace hicat;

namespace {

// Zero out the timing fields so two reports can be compared byte for byte.
nlohmann::ordered_json without_timings(const std::string& report) {
    auto doc = nlohmann::ordered_json::parse(report);
    for (auto& suite : doc["suites"]) suite["summary"]["elapsed_ms"] = 0;
    doc["summary"]["elapsed_ms"] = 0;
    return doc;
}

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("suite registry") {
    const auto& names = suite_names();
    CHECK(names == std::vector<std::string>{"catalan", "star", "eta", "log", "psg", "bijections",
                                            "maps", "zprime", "assembly"});
    CHECK(is_suite_name("star"));
    CHECK_FALSE(is_suite_name("all"));  // expands to every suite, not itself a suite
    CHECK_FALSE(is_suite_name("stars"));
    CHECK_THROWS_AS(run_suites({"stars"}), std::invalid_argument);
}

TEST_CASE("a clean run passes") {
    VerifyResult result = run_suites({"star", "log"});
    REQUIRE(result.suites.size() == 2);
    CHECK(result.suites[0].suite == "star");
    CHECK(result.suites[1].suite == "log");
    CHECK(result.all_passed());
    CHECK(result.total() == result.passed());
    CHECK(result.total() == 200 + 120);  // 5 nu x 40 j, then 4 nu x 30 j
}

TEST_CASE("every case records inputs and exact strings") {
    VerifyResult result = run_suites({"star"});
    const VerifyCase& first = result.suites[0].cases[0];
    CHECK(first.inputs ==
          std::vector<std::pair<std::string, std::string>>{{"nu", "2"}, {"j", "1"}});
    CHECK(first.expected == "1");
    CHECK(first.actual == "1");
    CHECK(first.pass);
}

TEST_CASE("mutation flips exactly one case and the overall verdict") {
    VerifyOptions options;
    options.mutate_index = 7;
    VerifyResult result = run_suites({"star"}, options);
    CHECK_FALSE(result.all_passed());
    CHECK(result.total() - result.passed() == 1);
    CHECK_FALSE(result.suites[0].cases[7].pass);

    // An index past the end of the run changes nothing.
    options.mutate_index = 1 << 20;
    CHECK(run_suites({"star"}, options).all_passed());
}

TEST_CASE("all expands to the full registry") {
    VerifyOptions options;
    options.mutate_index = -1;
    VerifyResult result = run_suites({"zprime"}, options);
    CHECK(result.suites.size() == 1);
    CHECK(result.all_passed());
}

TEST_CASE("json report is parseable, versioned, and deterministic") {
    VerifyResult result = run_suites({"log"});
    auto doc = nlohmann::ordered_json::parse(report_json(result));
    CHECK(doc["schema"] == "hicat-verify/1");
    CHECK(doc["summary"]["pass"] == true);
    CHECK(doc["summary"]["total"] == 120);
    CHECK(doc["suites"][0]["suite"] == "log");
    CHECK(doc["suites"][0]["cases"][0]["inputs"]["nu"] == "2");

    VerifyResult again = run_suites({"log"});
    CHECK(without_timings(report_json(result)) == without_timings(report_json(again)));
}

TEST_CASE("human table names every suite") {
    VerifyResult result = run_suites({"star"});
    std::string table = report_table(result);
    CHECK(table.find("star") != std::string::npos);
    CHECK(table.find("PASS") != std::string::npos);
}

}  // TEST_SUITE
