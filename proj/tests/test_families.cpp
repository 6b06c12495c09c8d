#include <doctest.h>

#include <set>

#include "families.hpp"

using namespace arcspan;

namespace {

Matching m(int n, std::vector<Arc> arcs) { return Matching(n, std::move(arcs)); }

}  // namespace

TEST_CASE("classification of the smallest cases") {
  // every subset-of-[1,3] matching is in the closed family
  auto lab = classify(m(3, {}));
  CHECK(lab.xn1_t == 0);
  CHECK(lab.plus_t == 0);  // no arcs, nothing touches the top point
  CHECK(!lab.minus_t);

  lab = classify(m(3, {{2, 3}}));
  CHECK(lab.xn1_t == 0);
  CHECK(!lab.plus_t);
  CHECK(lab.minus_t == 0);

  lab = classify(m(3, {{1, 3}}));
  CHECK(lab.xn1_t == -2);
  CHECK(!lab.plus_t);
  CHECK(lab.minus_t == -2);

  lab = classify(m(3, {{1, 2}}));
  CHECK(lab.xn1_t == 0);
  CHECK(lab.plus_t == 0);
  CHECK(!lab.minus_t);
}

TEST_CASE("open plus labels carry the marked singleton") {
  // one nested arc; the singleton sits to its right and is even
  auto lab = classify(m(5, {{1, 3}}));
  REQUIRE(lab.plus_t);
  CHECK(*lab.plus_t == -2);
  CHECK(lab.u_point == 4);

  // here the singleton is 1, odd, which flips the stratum sign
  lab = classify(m(5, {{2, 4}}));
  REQUIRE(lab.plus_t);
  CHECK(*lab.plus_t == 2);
  CHECK(lab.u_point == 1);

  // no nested arcs: closed and open plus at once, no singleton
  lab = classify(m(5, {{1, 4}, {2, 3}}));
  CHECK(lab.xn1_t == 0);
  CHECK(lab.plus_t == 0);
  CHECK(!lab.u_point);
  CHECK(!lab.minus_t);
}

TEST_CASE("family sizes split the vector count") {
  for (int n : {3, 5, 7}) {
    long long full = 1LL << (n - 1);
    CHECK(enumerate_family(n, Family::xn1).size() == size_t(full));
    CHECK(enumerate_family(n, Family::xn2).size() == size_t(full));
    CHECK(enumerate_family(n, Family::xn2_plus).size() == size_t(full / 2));
    CHECK(enumerate_family(n, Family::xn2_minus).size() == size_t(full / 2));
  }
}

TEST_CASE("stratum and refinement filters") {
  MatchFilter t0{0, {}};
  CHECK(enumerate_family(5, Family::xn2_plus, t0).size() == 6);

  MatchFilter prime{{}, Refinement::prime};
  MatchFilter dprime{{}, Refinement::doubleprime};
  for (int n : {3, 5, 7}) {
    auto p = enumerate_family(n, Family::xn2_plus, prime);
    auto d = enumerate_family(n, Family::xn2_plus, dprime);
    CHECK(p.size() + d.size() == size_t(1) << (n - 2));
    CHECK(p.size() == d.size());  // the bang involution swaps the halves
  }

  CHECK_THROWS_AS(enumerate_family(5, Family::xn1, prime), usage_error);
}

TEST_CASE("embedding opens a slot") {
  Matching b = m(3, {{1, 3}});
  CHECK(embed(1, b) == m(5, {{1, 2}, {3, 5}}));
  CHECK(embed(2, b) == m(5, {{1, 5}, {2, 3}}));
  CHECK(embed(4, b) == m(5, {{1, 3}, {4, 5}}));
  CHECK_THROWS_AS(embed(0, b), usage_error);
  CHECK_THROWS_AS(embed(5, b), usage_error);
}

TEST_CASE("ladder sets") {
  auto pp = pr_set(9, 1);
  std::set<Matching> want{m(9, {}), m(9, {{1, 7}}), m(9, {{1, 7}, {2, 6}, {3, 5}})};
  CHECK(std::set<Matching>(pp.begin(), pp.end()) == want);

  auto pm = pr_set(9, -1);
  std::set<Matching> wantm{m(9, {{8, 9}}), m(9, {{8, 9}, {1, 7}, {2, 6}})};
  CHECK(std::set<Matching>(pm.begin(), pm.end()) == wantm);
}

TEST_CASE("recursive characterization matches the primed refinement") {
  auto sp = sharp_family(5, 1);
  std::set<Matching> want{m(5, {}), m(5, {{1, 3}}), m(5, {{1, 2}}), m(5, {{2, 3}})};
  CHECK(std::set<Matching>(sp.begin(), sp.end()) == want);

  auto sm = sharp_family(5, -1);
  std::set<Matching> wantm{m(5, {{4, 5}}), m(5, {{1, 2}, {4, 5}}), m(5, {{2, 3}, {4, 5}}),
                           m(5, {{2, 5}, {3, 4}})};
  CHECK(std::set<Matching>(sm.begin(), sm.end()) == wantm);

  for (int n : {3, 5, 7, 9}) {
    Report r = verify_sharp(n);
    INFO(n);
    CHECK(r.passed());
    CHECK(r.counts["primed_plus"] == r.counts["sharp_plus"]);
    CHECK(r.counts["primed_minus"] == r.counts["sharp_minus"]);
  }
}
