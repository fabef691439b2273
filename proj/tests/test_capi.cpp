#include <doctest.h>

#include <string>

#include <json.hpp>

#include "chessland/chessland.h"

namespace {

std::string take(char* doc) {
    REQUIRE(doc != nullptr);
    std::string s = doc;
    chessland_string_free(doc);
    return s;
}

}  // namespace

TEST_CASE("c api formulas") {
    long long days = 0;
    CHECK(chessland_survey_formula("knight", 14, "", &days) == CHESSLAND_OK);
    CHECK(days == 52);
    CHECK(chessland_survey_formula("king", 12, "", &days) == CHESSLAND_OK);
    CHECK(days == 40);
    CHECK(chessland_survey_formula("king", 12, "straight", &days) == CHESSLAND_OK);
    CHECK(days == 46);
    CHECK(chessland_survey_formula("rook", 6, "", &days) == CHESSLAND_OK);
    CHECK(days == 6);
    CHECK(chessland_survey_formula("dragon", 6, "", &days) == CHESSLAND_INVALID_ARGUMENT);
    CHECK(std::string(chessland_last_error()).find("piece") != std::string::npos);
}

TEST_CASE("c api plans and exact search") {
    char* doc = nullptr;
    CHECK(chessland_survey_plan("rook", 3, "", "json", &doc) == CHESSLAND_OK);
    CHECK(take(doc) == R"({"piece":"rook","n":3,"path":[[1,1],[2,1],[3,1]]})");

    doc = nullptr;
    CHECK(chessland_survey_plan("knight", 2, "", "json", &doc) == CHESSLAND_OK);
    auto j = nlohmann::json::parse(take(doc));
    CHECK(j["status"] == "infeasible");

    doc = nullptr;
    CHECK(chessland_survey_exact("knight", 2, "", nullptr, &doc) == CHESSLAND_OK);
    j = nlohmann::json::parse(take(doc));
    CHECK(j["status"] == "infeasible");

    doc = nullptr;
    CHECK(chessland_survey_exact("knight", 4, "", nullptr, &doc) == CHESSLAND_OK);
    j = nlohmann::json::parse(take(doc));
    CHECK(j["status"] == "proven");
    CHECK(j["days"] == 7);
    CHECK(j["proven_optimal"] == true);
}

TEST_CASE("c api trapping") {
    char* doc = nullptr;
    CHECK(chessland_trap_verdict("rook", 6, 3, 3, nullptr, &doc) == CHESSLAND_OK);
    auto j = nlohmann::json::parse(take(doc));
    CHECK(j["verdict"] == "trapped");
    CHECK(j["count"] == 5);
    CHECK(j["witness"].size() == 5);

    doc = nullptr;
    CHECK(chessland_trap_sheet("queen", 4, "csv", 1, 0, 2, nullptr, &doc) == CHESSLAND_OK);
    std::string csv = take(doc);
    CHECK(csv.find("2,2,2,2") != std::string::npos);
    CHECK(csv.find("2,0,0,2") != std::string::npos);

    doc = nullptr;
    CHECK(chessland_trap_verdict("rook", 6, 9, 9, nullptr, &doc) == CHESSLAND_INVALID_ARGUMENT);
}

TEST_CASE("c api sequences and queens") {
    char* doc = nullptr;
    CHECK(chessland_seq("diagdom", 10, 1, &doc) == CHESSLAND_OK);
    auto j = nlohmann::json::parse(take(doc));
    CHECK(j["values"] == nlohmann::json::array({0, 1, 1, 2, 3, 4, 4, 5, 5, 6}));

    doc = nullptr;
    CHECK(chessland_seq("diagdom", 1, 0, &doc) == CHESSLAND_OK);
    j = nlohmann::json::parse(take(doc));
    CHECK(j["values"][0] == 1);

    doc = nullptr;
    CHECK(chessland_nqueens(6, 0, 0, &doc) == CHESSLAND_OK);
    j = nlohmann::json::parse(take(doc));
    CHECK(j["count"] == 4);
    CHECK(j["solutions"].size() == 4);

    doc = nullptr;
    CHECK(chessland_seq("nope", 4, 0, &doc) == CHESSLAND_INVALID_ARGUMENT);
}

TEST_CASE("plan documents round-trip bit-exactly through the c api") {
    char* doc = nullptr;
    REQUIRE(chessland_survey_plan("knight", 7, "", "json", &doc) == CHESSLAND_OK);
    std::string original = take(doc);
    doc = nullptr;
    REQUIRE(chessland_render_plan_json(original.c_str(), "json", &doc) == CHESSLAND_OK);
    CHECK(take(doc) == original);
    doc = nullptr;
    CHECK(chessland_render_plan_json("{\"piece\":\"rook\"}", "ascii", &doc) ==
          CHESSLAND_INVALID_ARGUMENT);
    // An illegal path is refused with diagnostics, not rendered.
    doc = nullptr;
    CHECK(chessland_render_plan_json(R"({"piece":"knight","n":4,"path":[[1,1],[2,2]]})", "ascii",
                                     &doc) == CHESSLAND_INVALID_ARGUMENT);
    CHECK(std::string(chessland_last_error()).find("step") != std::string::npos);

    doc = nullptr;
    REQUIRE(chessland_trap_sheet("queen", 4, "json", 0, 0, 1, nullptr, &doc) == CHESSLAND_OK);
    std::string sheet = take(doc);
    doc = nullptr;
    REQUIRE(chessland_render_sheet_json(sheet.c_str(), "json", 0, 0, &doc) == CHESSLAND_OK);
    CHECK(take(doc) == sheet);
}

TEST_CASE("verify all is deterministic and idempotent") {
    char* first = nullptr;
    char* second = nullptr;
    int pass1 = 0, pass2 = 0;
    REQUIRE(chessland_verify_all(nullptr, 0, &first, &pass1) == CHESSLAND_OK);
    REQUIRE(chessland_verify_all(nullptr, 0, &second, &pass2) == CHESSLAND_OK);
    CHECK(take(first) == take(second));
    CHECK(pass1 == 1);
    CHECK(pass1 == pass2);
}

TEST_CASE("c api budget handle") {
    chessland_budget* b = chessland_budget_new();
    chessland_budget_set_seconds(b, 30.0);
    chessland_budget_set_max_states(b, 1000000);
    char* doc = nullptr;
    CHECK(chessland_dominate("knight", 5, "", b, &doc) == CHESSLAND_OK);
    auto j = nlohmann::json::parse(take(doc));
    CHECK(j["gamma"] == 5);
    chessland_budget_free(b);
}
