// Exercises the shared library through workbench.h only.
#include "workbench/workbench.h"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

std::string take(char* s) {
  std::string r = s ? s : "";
  wb_string_free(s);
  return r;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("version and null arguments [TRIVIAL]") {
    CHECK(std::string(wb_version()).size() > 0);
    CHECK(wb_verify_paper(nullptr, 1, nullptr) == WB_ERR_ARGUMENT);
    CHECK(std::string(wb_last_error()).size() > 0);
    CHECK(wb_report_claim_count(nullptr) == 0);
    wb_report_free(nullptr);
    wb_groups_free(nullptr);
    wb_b0_free(nullptr);
    wb_string_free(nullptr);
  }

  TEST_CASE("unknown section and script [TRIVIAL]") {
    wb_report* r = nullptr;
    CHECK(wb_verify_paper("9", 1, &r) == WB_ERR_ARGUMENT);
    CHECK(r == nullptr);
    CHECK(wb_replay("bogus", &r) == WB_ERR_ARGUMENT);
    CHECK(std::string(wb_last_error()).find("bogus") != std::string::npos);
  }

  TEST_CASE("replay through the C interface [PAPER]") {
    wb_report* r = nullptr;
    REQUIRE(wb_replay("S5.cor1", &r) == WB_OK);
    CHECK(wb_report_claim_count(r) > 0);
    CHECK(wb_report_failure_count(r) == 0);
    const char *id = nullptr, *ref = nullptr;
    int pass = -1;
    REQUIRE(wb_report_claim(r, 0, &id, &ref, &pass) == WB_OK);
    CHECK(std::string(id).rfind("S5.cor1", 0) == 0);
    CHECK(pass == 1);
    CHECK(wb_report_claim(r, 100000, &id, &ref, &pass) == WB_ERR_ARGUMENT);
    char* text = nullptr;
    REQUIRE(wb_report_format(r, WB_FORMAT_RECORDS, &text) == WB_OK);
    std::string s = take(text);
    CHECK(s.find("summary claims=") != std::string::npos);
    CHECK(s.find("failures=0") != std::string::npos);
    CHECK(wb_report_format(r, static_cast<wb_format>(7), &text) == WB_ERR_ARGUMENT);
    wb_report_free(r);
  }

  TEST_CASE("built-in groups and lookup [PAPER]") {
    wb_groups* g = nullptr;
    REQUIRE(wb_groups_builtin(&g) == WB_OK);
    CHECK(wb_groups_count(g) == 17);
    size_t idx = 0;
    CHECK(wb_groups_find(g, 243, 65, &idx) == WB_OK);
    CHECK(wb_groups_find(g, 243, 22, &idx) == WB_ERR_NOT_FOUND);
    wb_groups_free(g);
  }

  TEST_CASE("B0 of G(28) and G(3) [PAPER]") {
    wb_groups* g = nullptr;
    REQUIRE(wb_groups_builtin(&g) == WB_OK);
    size_t i28 = 0, i3 = 0;
    REQUIRE(wb_groups_find(g, 243, 28, &i28) == WB_OK);
    REQUIRE(wb_groups_find(g, 243, 3, &i3) == WB_OK);
    wb_b0_result* r = nullptr;
    REQUIRE(wb_b0(g, i28, 2, 0, &r) == WB_OK);
    CHECK(wb_b0_trivial(r) == 0);
    CHECK(wb_b0_oracle_agrees(r) == -1);
    char* s = nullptr;
    REQUIRE(wb_b0_invariants(r, WB_INV_B0, &s) == WB_OK);
    CHECK(take(s) != "[]");
    CHECK(wb_b0_invariants(r, WB_INV_ORACLE, &s) == WB_ERR_ARGUMENT);
    wb_b0_free(r);
    REQUIRE(wb_b0(g, i3, 2, 0, &r) == WB_OK);
    CHECK(wb_b0_trivial(r) == 1);
    wb_b0_free(r);
    CHECK(wb_b0(g, i3, 0, 0, &r) == WB_ERR_ARGUMENT);
    CHECK(wb_b0(g, 99, 2, 0, &r) == WB_ERR_ARGUMENT);
    wb_groups_free(g);
  }

  TEST_CASE("isoclinism through the C interface [PAPER]") {
    wb_groups* g = nullptr;
    REQUIRE(wb_groups_builtin(&g) == WB_OK);
    size_t a = 0, b = 0, c = 0;
    REQUIRE(wb_groups_find(g, 243, 56, &a) == WB_OK);
    REQUIRE(wb_groups_find(g, 243, 60, &b) == WB_OK);
    REQUIRE(wb_groups_find(g, 243, 65, &c) == WB_OK);
    int iso = -1;
    char* why = nullptr;
    REQUIRE(wb_isoclinic(g, a, g, b, &iso, &why) == WB_OK);
    CHECK(iso == 1);
    take(why);
    REQUIRE(wb_isoclinic(g, a, g, c, &iso, nullptr) == WB_OK);
    CHECK(iso == 0);
    wb_groups_free(g);
  }

  TEST_CASE("loading presentation files [TRIVIAL]") {
    wb_groups* g = nullptr;
    CHECK(wb_groups_load("does/not/exist.pcp", &g) == WB_ERR_NOT_FOUND);
    {
      std::ofstream out("capi_bad.pcp");
      out << "group 243 65\ngens 5\ncomm 2 1 = g9^1\n";
    }
    CHECK(wb_groups_load("capi_bad.pcp", &g) == WB_ERR_PARSE);
    CHECK(std::string(wb_last_error()).find("3") != std::string::npos);
    std::remove("capi_bad.pcp");
    {
      std::ofstream out("capi_c3c3.pcp");
      out << "group 9 2\ngens 2\n";
    }
    REQUIRE(wb_groups_load("capi_c3c3.pcp", &g) == WB_OK);
    size_t idx = 0;
    REQUIRE(wb_groups_find(g, 9, 2, &idx) == WB_OK);
    wb_b0_result* r = nullptr;
    REQUIRE(wb_b0(g, idx, 1, 1, &r) == WB_OK);
    CHECK(wb_b0_oracle_agrees(r) == 1);
    char* s = nullptr;
    REQUIRE(wb_b0_invariants(r, WB_INV_MULTIPLIER, &s) == WB_OK);
    CHECK(take(s) == "[3]");
    wb_b0_free(r);
    wb_groups_free(g);
    std::remove("capi_c3c3.pcp");
  }
}
