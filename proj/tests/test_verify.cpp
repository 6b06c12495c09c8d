#include <doctest.h>

#include <set>

#include "verify.hpp"

using namespace arcspan;

TEST_CASE("registry is well formed") {
  const auto& reg = statement_registry();
  CHECK(reg.size() == 39);
  std::set<std::string> ids;
  for (const auto& s : reg) {
    CHECK(!s.summary.empty());
    CHECK(ids.insert(s.id).second);
  }
  CHECK(ids.count("Thm2.4a") == 1);
  CHECK(ids.count("5.2") == 1);
}

TEST_CASE("suite expansion") {
  CHECK(expand_suite("all").size() == statement_registry().size());
  CHECK(expand_suite("Thm2.4a") == std::vector<std::string>{"Thm2.4a"});
  CHECK(expand_suite("thm2.4A") == std::vector<std::string>{"Thm2.4a"});
  CHECK(expand_suite("2.4") ==
        std::vector<std::string>{"Thm2.4a", "Thm2.4b", "Thm2.4c"});
  CHECK(expand_suite("2.9") == std::vector<std::string>{"Thm2.9a", "Thm2.9b"});
  CHECK(expand_suite("4.1") ==
        std::vector<std::string>{"4.1a", "4.1b", "4.1c", "4.1d", "4.1e"});
  CHECK(expand_suite("5.1") ==
        std::vector<std::string>{"5.1.phi2", "5.1.filtration", "5.1.n5"});
  // registry order and deduplication regardless of input order
  CHECK(expand_suite("5.2,Thm2.4a,5.2") ==
        std::vector<std::string>{"Thm2.4a", "5.2"});
  CHECK_THROWS_AS(expand_suite("2.1"), usage_error);
  CHECK_THROWS_AS(expand_suite("nope"), usage_error);
  CHECK_THROWS_AS(expand_suite(""), usage_error);
  CHECK_THROWS_AS(expand_suite(" , "), usage_error);
}

TEST_CASE("single statements run and carry their ids") {
  Report r = run_statement("thm2.4a", 5);
  CHECK(r.id == "Thm2.4a");
  CHECK(r.status == "pass");
  CHECK(r.counts.at("family") == 16);

  Report s = run_statement("5.2", 3);
  CHECK(s.id == "5.2");
  CHECK(s.status == "reported");

  Report p = run_statement("5.1.n5", 3);  // pinned computation ignores the ambient
  CHECK(p.id == "5.1.n5");
  CHECK(p.status == "pass");

  CHECK_THROWS_AS(run_statement("Thm9.9", 5), usage_error);
  CHECK_THROWS_AS(run_statement("Thm2.4a", 4), usage_error);
}

TEST_CASE("embedding statements are vacuous at the smallest ambient") {
  for (const char* id : {"4.1a", "4.1b", "4.1c", "4.1d"}) {
    Report r = run_statement(id, 3);
    CHECK(r.status == "pass");
    CHECK(r.counts.at("checked") == 0);
  }
  Report r5 = run_statement("4.1a", 5);
  CHECK(r5.counts.at("checked") > 0);
}

TEST_CASE("full suite passes at small ambients") {
  for (int n : {3, 5}) {
    for (const Report& r : run_suite("all", n)) {
      INFO("n=" << n << " id=" << r.id);
      CHECK(r.passed());
    }
  }
}

TEST_CASE("spot values known by hand") {
  Report r = run_statement("Thm2.13", 3);
  CHECK(r.counts.at("pairs") == 4);
  // top-free side holds {} and {1,2}, both at level 0; the other side splits
  CHECK(r.counts.at("plus-strata") == 1);
  CHECK(r.counts.at("minus-strata") == 2);

  Report s = run_statement("3.5", 5);
  CHECK(s.counts.at("plus-orbits") == 4);
  CHECK(s.counts.at("minus-orbits") == 4);
}
