#include "support.hpp"

#include "workbench/replay.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace wb::paper;

TEST_SUITE("paperdata") {
  TEST_CASE("17 presented groups with their families [PAPER]") {
    const auto& gs = paper_groups();
    CHECK(gs.size() == 17);
    REQUIRE(record(243, 65));
    CHECK(record(243, 65)->family == 5);
    CHECK(record(243, 58)->family == 7);
    CHECK(record(243, 29)->family == 10);
    CHECK(record(243, 7)->family == 6);
    CHECK_FALSE(record(243, 22).has_value());
    CHECK(family_of(22) == 8);
  }

  TEST_CASE("family table covers all 67 groups [PAPER]") {
    std::size_t total = 0;
    for (int f = 1; f <= 10; ++f) total += family_members(f).size();
    CHECK(total == 67);
    CHECK(family_members(5) == std::vector<int>{65, 66});
    CHECK(family_members(10) == std::vector<int>{28, 29, 30});
  }

  TEST_CASE("serialize then parse gives identical presentations [TRIVIAL]") {
    auto back = parse_presentations(serialize(paper_groups()));
    REQUIRE(back.size() == paper_groups().size());
    for (std::size_t i = 0; i < back.size(); ++i) {
      CAPTURE(paper_groups()[i].id);
      CHECK(back[i].id == paper_groups()[i].id);
      CHECK(back[i].family == paper_groups()[i].family);
      CHECK(back[i].pres.n() == paper_groups()[i].pres.n());
      for (int g = 0; g < back[i].pres.n(); ++g) {
        CHECK(back[i].pres.power(g) == paper_groups()[i].pres.power(g));
        for (int h = 0; h < g; ++h) CHECK(back[i].pres.comm(g, h) == paper_groups()[i].pres.comm(g, h));
      }
    }
  }

  TEST_CASE("ingest from a file [TRIVIAL]") {
    const std::string path = "paperdata_roundtrip.pcp";
    {
      std::ofstream out(path);
      out << serialize(paper_groups());
    }
    CHECK(ingest(path).size() == 17);
    std::remove(path.c_str());
    CHECK_THROWS(ingest("does/not/exist.pcp"));
  }

  TEST_CASE("malformed relation line gives a positioned error [TRIVIAL]") {
    const std::string text = "group 243 65\ngens 5\ncomm 2 1 = g9^1\n";
    try {
      parse_presentations(text);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() > 0);
    }
    CHECK_THROWS_AS(parse_presentations("group 243 65\ngens 5\nfrobnicate 1\n"), ParseError);
  }

  TEST_CASE("inconsistent presentation is rejected [TRIVIAL]") {
    // G(3) with f1^3 = f3, which clashes with [f3,f1] = f4.
    std::string text = "group 243 3\ngens 5\npow 1 = g3^1\ncomm 2 1 = g3^1\ncomm 3 1 = g4^1\ncomm 3 2 = g5^1\n";
    CHECK_THROWS_AS(parse_presentations(text), ParseError);
  }

  TEST_CASE("replay scripts [PAPER]") {
    auto r4 = wb::replay::replay("S4.case1");
    CHECK(r4.claims.size() > 50);
    CHECK(r4.ok());
    auto r5 = wb::replay::replay("S5.case1");
    CHECK(r5.ok());
    bool saw_det = false, saw_cp = false;
    for (const auto& c : r5.claims) {
      saw_det |= c.id.find("det") != std::string::npos;
      saw_cp |= c.id.find("charpoly") != std::string::npos;
    }
    CHECK(saw_det);
    CHECK(saw_cp);
  }

  TEST_CASE("unknown replay id [TRIVIAL]") {
    CHECK_THROWS_AS(wb::replay::replay("bogus"), wb::replay::ReplayError);
  }
}
