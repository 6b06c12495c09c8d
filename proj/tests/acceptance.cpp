// Acceptance gate. Runs the ten release criteria end to end against the
// library, prints one PASS/FAIL line per criterion, and exits nonzero if any
// fails. Stated runtime budgets are enforced as part of the criterion.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "correspondences.hpp"
#include "families.hpp"
#include "parallel.hpp"
#include "serialize.hpp"
#include "verify.hpp"

using namespace arcspan;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string& why) {
    ok = false;
    if (!note.empty()) note += "; ";
    note += why;
  }
};

bool has_witness_prefix(const Report& r, const std::string& prefix) {
  for (const auto& w : r.witnesses)
    if (w.rfind(prefix, 0) == 0) return true;
  return false;
}

long long count_or(const Report& r, const std::string& key, long long dflt) {
  auto it = r.counts.find(key);
  return it == r.counts.end() ? dflt : it->second;
}

// 1: the pinned n=5 doubled block equals the recorded 4x4 integer matrix
// under the stored convention or its transpose, exactly.
Outcome crit_block_matrix() {
  Outcome o;
  Report r = five_block_certify();
  if (!r.passed()) o.fail("block certification failed: " + (r.witnesses.empty() ? std::string("no witness") : r.witnesses.front()));
  long long col = count_or(r, "convention-column", 0);
  long long tr = count_or(r, "convention-transpose", 0);
  if (col + tr == 0) o.fail("neither convention matched");
  if (o.ok) o.note = tr ? "matches as the transpose" : "matches column-wise";
  return o;
}

// 2: induced signs on the certified stable flag at n=5 are +1, -1, -1 from
// the top level down.
Outcome crit_flag_signs() {
  Outcome o;
  Report r = filtration_check(5);
  if (!r.passed()) o.fail("flag certification failed");
  if (count_or(r, "levels", 0) != 3) o.fail("expected three flag levels");
  long long s2 = count_or(r, "sign-2", 0);
  long long s1 = count_or(r, "sign-1", 0);
  long long s0 = count_or(r, "sign-0", 0);
  if (s2 != 1 || s1 != -1 || s0 != -1) o.fail("signs off");
  if (o.ok) o.note = "signs +1, -1, -1";
  return o;
}

// 3: the distinguished 4x4 block admits no triangular index order, certified
// by a directed 2-cycle.
Outcome crit_block_cycle() {
  Outcome o;
  Report r = five_block_certify();
  if (!r.passed()) o.fail("block certification failed");
  std::string cyc;
  for (const auto& w : r.witnesses)
    if (w.rfind("cycle:", 0) == 0) cyc = w;
  if (cyc.empty()) {
    o.fail("no cycle certificate");
    return o;
  }
  long long hops = std::count(cyc.begin(), cyc.end(), '{');
  if (hops != 2) o.fail("cycle is not a 2-cycle: " + cyc);
  if (o.ok) o.note = cyc;
  return o;
}

// 4: family sizes are 2^(n-1) and the three correspondence maps are
// bijections, through n=11.
Outcome crit_bijections() {
  Outcome o;
  for (int n : {3, 5, 7, 9, 11}) {
    Report r = verify_correspondences(n);
    long long want = 1LL << (n - 1);
    if (!r.passed()) o.fail("maps broke at n=" + std::to_string(n));
    if (count_or(r, "closed", 0) != want ||
        count_or(r, "open_plus", 0) + count_or(r, "open_minus", 0) != want)
      o.fail("family sizes off at n=" + std::to_string(n));
  }
  if (o.ok) o.note = "n in {3,5,7,9,11}, sizes 2^(n-1), maps bijective";
  return o;
}

// 5: the statement suite covering every certified claim outside the basis and
// orbit blocks passes with zero counterexamples at n in {3,5,7,9}.
Outcome crit_statement_suite() {
  Outcome o;
  const std::string suite =
      "2.4,2.5,2.8a,2.9,2.10,2.13,2.14a,3.1a,3.2a,3.3a,3.4a,3.6b,3.7b,3.8,3.9,"
      "4.1,4.3,4.5a,4.7";
  long long runs = 0;
  for (int n : {3, 5, 7, 9}) {
    for (const Report& r : run_suite(suite, n)) {
      ++runs;
      if (!r.passed())
        o.fail(r.id + " failed at n=" + std::to_string(n) + ": " +
               (r.witnesses.empty() ? std::string("no witness") : r.witnesses.front()));
    }
  }
  if (o.ok) o.note = std::to_string(runs) + " statement runs, zero counterexamples";
  return o;
}

// 6: transform squared is the identity, exactly, in every basis through n=7.
Outcome crit_involutions() {
  Outcome o;
  for (int n : {3, 5, 7}) {
    Report k = involution_check(n);
    if (!k.passed() || count_or(k, "exact-squared", 0) != 1)
      o.fail("kernel square off at n=" + std::to_string(n));
    for (auto b : {OperatorBasis::A_on_c, OperatorBasis::Aprime_on_cprime}) {
      Report r = operator_involution_check(n, b);
      if (!r.passed())
        o.fail(std::string(operator_basis_name(b)) + " square off at n=" +
               std::to_string(n));
    }
  }
  if (o.ok) o.note = "exact dyadic squares, n in {3,5,7}";
  return o;
}

// 7: all four transition matrices are unitriangular against their orders with
// all-ones diagonals, through n=9.
Outcome crit_unitriangular() {
  Outcome o;
  for (int n : {3, 5, 7, 9}) {
    for (auto k : {MatrixKind::c, MatrixKind::cprime, MatrixKind::cplus,
                   MatrixKind::cminus}) {
      F2Matrix mat = transition_matrix(n, k);
      OrderRelation ord = build_order(n, order_for(k));
      Report r = unitriangular_check(mat, ord, matrix_kind_name(k));
      if (!r.passed() || count_or(r, "determinant", 0) != 1)
        o.fail(std::string(matrix_kind_name(k)) + " not unitriangular at n=" +
               std::to_string(n));
    }
  }
  if (o.ok) o.note = "c, cprime, cplus, cminus; n in {3,5,7,9}";
  return o;
}

// 8: the four basis certifications hold with determinant certificates,
// through n=9.
Outcome crit_basis_reports() {
  Outcome o;
  for (int n : {3, 5, 7, 9}) {
    auto reports = basis_reports(n);
    if (reports.size() != 4) o.fail("expected four reports");
    for (const Report& r : reports) {
      if (!r.passed()) o.fail(r.id + " failed at n=" + std::to_string(n));
      bool det = false;
      for (const auto& [key, val] : r.counts)
        if (key.find("determinant") != std::string::npos && val == 1) det = true;
      if (!det) o.fail(r.id + " missing determinant at n=" + std::to_string(n));
    }
  }
  if (o.ok) o.note = "all four certifications, n in {3,5,7,9}";
  return o;
}

// 9: the quotient-transform report is produced at n in {3,5,7,9} with a
// verdict and an order-or-cycle certificate, and the document bytes do not
// depend on the worker count.
Outcome crit_conjecture_report() {
  Outcome o;
  for (int n : {3, 5, 7, 9}) {
    set_parallelism(2);
    std::string one = conjecture_json(n);
    set_parallelism(5);
    std::string two = conjecture_json(n);
    set_parallelism(0);
    if (one != two) o.fail("bytes differ across worker counts at n=" + std::to_string(n));
    if (one.find("\"triangular\"") == std::string::npos)
      o.fail("no verdict at n=" + std::to_string(n));
    if (one.find("order:") == std::string::npos &&
        one.find("cycle:") == std::string::npos)
      o.fail("no certificate at n=" + std::to_string(n));
  }
  if (o.ok) o.note = "verdict plus certificate, byte-stable across workers";
  return o;
}

// 10: the hand-derived micro fixtures hold against the live library. The unit
// suite pins the same values independently through the brute-force reference.
Outcome crit_micro_fixtures() {
  Outcome o;

  auto mk = [](int n, std::vector<Arc> arcs) { return Matching(n, std::move(arcs)); };

  std::vector<Matching> closed3 = enumerate_family(3, Family::xn1);
  std::vector<Matching> want3 = {mk(3, {}), mk(3, {{1, 2}}), mk(3, {{1, 3}}),
                                 mk(3, {{2, 3}})};
  std::sort(want3.begin(), want3.end());
  if (closed3 != want3) o.fail("closed family at n=3 is off");
  if (!(eps(mk(3, {})) == EvenSet::of(3, {})) ||
      !(eps(mk(3, {{1, 2}})) == EvenSet::of(3, {1, 2})) ||
      !(eps(mk(3, {{2, 3}})) == EvenSet::of(3, {2, 3})) ||
      !(eps(mk(3, {{1, 3}})) == EvenSet::of(3, {1, 3})))
    o.fail("closed vector table at n=3 is off");

  std::vector<Matching> plus5 = enumerate_family(5, Family::xn2_plus);
  std::vector<Matching> want5 = {
      mk(5, {}),           mk(5, {{1, 2}}),          mk(5, {{2, 3}}),
      mk(5, {{3, 4}}),     mk(5, {{1, 2}, {3, 4}}),  mk(5, {{1, 4}, {2, 3}}),
      mk(5, {{1, 3}}),     mk(5, {{2, 4}}),
  };
  std::sort(want5.begin(), want5.end());
  if (plus5 != want5) o.fail("open plus family at n=5 is off");
  if (!(eps_prime(mk(5, {{2, 4}})) == EvenSet::of(5, {2, 4})) ||
      !(eps_prime(mk(5, {{1, 3}})) == EvenSet::of(5, {1, 3})))
    o.fail("open vector values at n=5 are off");

  auto as_set = [](std::vector<Matching> v) {
    return std::set<Matching>(v.begin(), v.end());
  };
  std::set<Matching> sharp_plus_want = {mk(5, {}), mk(5, {{1, 3}}),
                                        mk(5, {{1, 2}}), mk(5, {{2, 3}})};
  std::set<Matching> sharp_minus_want = {
      mk(5, {{4, 5}}), mk(5, {{1, 2}, {4, 5}}), mk(5, {{2, 3}, {4, 5}}),
      mk(5, {{2, 5}, {3, 4}})};
  if (as_set(sharp_family(5, 1)) != sharp_plus_want) o.fail("sharp plus at n=5 is off");
  if (as_set(sharp_family(5, -1)) != sharp_minus_want) o.fail("sharp minus at n=5 is off");

  if (o.ok) o.note = "vector tables and sharp sets at n=3,5";
  return o;
}

struct Criterion {
  const char* what;
  Outcome (*run)();
  long long budget_ms;  // 0 means no stated budget
};

const Criterion kCriteria[] = {
    {"pinned n=5 block matrix, exact integer match", crit_block_matrix, 1000},
    {"stable flag signs at n=5", crit_flag_signs, 1000},
    {"block non-triangularizability by 2-cycle", crit_block_cycle, 1000},
    {"family sizes and bijections through n=11", crit_bijections, 600000},
    {"statement suite at n in {3,5,7,9}", crit_statement_suite, 120000},
    {"exact involutions through n=7", crit_involutions, 0},
    {"unitriangular transition matrices through n=9", crit_unitriangular, 0},
    {"basis certifications through n=9", crit_basis_reports, 0},
    {"quotient-transform report, stable bytes", crit_conjecture_report, 0},
    {"hand-derived micro fixtures", crit_micro_fixtures, 0},
};

}  // namespace

int main() {
  int failures = 0;
  int idx = 0;
  for (const Criterion& c : kCriteria) {
    ++idx;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    if (c.budget_ms && ms >= c.budget_ms)
      o.fail("over budget: " + std::to_string(ms) + " ms");
    if (!o.ok) ++failures;
    std::printf("%s  %2d  %s  [%lld ms]%s%s\n", o.ok ? "PASS" : "FAIL", idx,
                c.what, ms, o.note.empty() ? "" : "  -- ", o.note.c_str());
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  else std::printf("all %d criteria passed\n", idx);
  return failures ? 1 : 0;
}
