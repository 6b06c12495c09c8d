#include "orders.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

namespace arcspan {

void BitRel::close() {
  for (int i = 0; i < m_; ++i) set(i, i);
  // Warshall, row-or formulation
  for (int k = 0; k < m_; ++k) {
    const uint64_t* rk = &rows_[size_t(k) * words_];
    for (int i = 0; i < m_; ++i) {
      if (!get(i, k) || i == k) continue;
      uint64_t* ri = &rows_[size_t(i) * words_];
      for (int w = 0; w < words_; ++w) ri[w] |= rk[w];
    }
  }
}

namespace {

void certify(OrderRelation& r) {
  r.reach = r.gen;
  r.reach.close();
  int m = r.reach.size();
  r.antisymmetric = true;
  for (int i = 0; i < m && r.antisymmetric; ++i)
    for (int j = i + 1; j < m; ++j)
      if (r.reach.get(i, j) && r.reach.get(j, i)) {
        r.antisymmetric = false;
        r.cycle = {i, j};
        break;
      }
  if (!r.antisymmetric) return;

  // Kahn with min-index tie break; deterministic and always completes here
  std::vector<int> pred(size_t(m), 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && r.reach.get(j, i)) ++pred[size_t(i)];
  std::vector<char> placed(size_t(m), 0);
  r.extension.reserve(size_t(m));
  for (int step = 0; step < m; ++step) {
    int pick = -1;
    for (int i = 0; i < m; ++i)
      if (!placed[size_t(i)] && pred[size_t(i)] == 0) {
        pick = i;
        break;
      }
    if (pick < 0) throw internal_error("linear extension blocked despite antisymmetry");
    placed[size_t(pick)] = 1;
    r.extension.push_back(pick);
    for (int j = 0; j < m; ++j)
      if (j != pick && !placed[size_t(j)] && r.reach.get(pick, j)) --pred[size_t(j)];
  }
}

}  // namespace

OrderRelation build_order(int n, OrderFlavor f) {
  check_ambient(n);
  OrderRelation r;
  r.flavor = f;
  r.n = n;
  if (f == OrderFlavor::leq_xn1 || f == OrderFlavor::preceq_xn2) {
    r.table = f == OrderFlavor::leq_xn1 ? eps_table(n) : eps_prime_table(n);
    int m = int(r.table.domain.size());
    r.gen = BitRel(m);
    for (int j = 0; j < m; ++j) {
      Subspace sp = arc_span(r.table.domain[size_t(j)]);
      for (int i = 0; i < m; ++i)
        if (sp.member(r.table.image[size_t(i)])) r.gen.set(i, j);
    }
  } else {
    int sign = f == OrderFlavor::bar_plus ? 1 : -1;
    r.orbit_carrier = orbits(n, sign);
    OrderRelation pre = build_order(n, OrderFlavor::preceq_xn2);
    int m = int(r.orbit_carrier.size());
    std::vector<int> mi(size_t(m), 0);
    std::vector<int> gap(size_t(m), 0);
    for (int i = 0; i < m; ++i) {
      const EvenSet& rep = r.orbit_carrier[size_t(i)].rep;
      mi[size_t(i)] = pre.table.index(rep);
      gap[size_t(i)] = std::abs(rep.gamma() + (sign == 1 ? 0 : 1));
    }
    r.gen = BitRel(m);
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i)
        if (pre.reach.get(mi[size_t(i)], mi[size_t(j)]) || gap[size_t(i)] < gap[size_t(j)])
          r.gen.set(i, j);
  }
  certify(r);
  return r;
}

namespace {

std::string carrier_label(const OrderRelation& r, int i) {
  if (r.orbit_carrier.empty()) return r.table.domain[size_t(i)].str();
  return r.orbit_carrier[size_t(i)].rep.str();
}

Report pair_scan(const OrderRelation& ord, const std::string& id,
                 const std::function<bool(int, int)>& admissible,
                 const std::function<bool(int, int)>& holds,
                 const std::string& what) {
  Report r;
  r.id = id;
  r.status = "pass";
  int m = ord.size();
  long long checked = 0;
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < m; ++i) {
      if (!ord.reach.get(i, j) || !admissible(i, j)) continue;
      ++checked;
      if (!holds(i, j))
        r.note_failure(what + " broke below " + carrier_label(ord, j) + " at " +
                       carrier_label(ord, i));
    }
  r.counts["pairs"] = checked;
  return r;
}

}  // namespace

Report verify_partial_order(int n, OrderFlavor f) {
  OrderRelation ord = build_order(n, f);
  Report r;
  r.id = "partial-order";
  r.status = ord.antisymmetric ? "pass" : "fail";
  r.counts["carrier"] = ord.size();
  if (!ord.antisymmetric)
    r.witnesses.push_back("mutually reachable pair " + carrier_label(ord, ord.cycle[0]) +
                          " and " + carrier_label(ord, ord.cycle[1]));
  // closing the closed relation must be a no-op
  BitRel again = ord.reach;
  again.close();
  if (!(again == ord.reach)) r.note_failure("closure is not idempotent");
  return r;
}

Report verify_even_arc_monotone(int n) {
  OrderRelation ord = build_order(n, OrderFlavor::leq_xn1);
  auto evens = [&](int i) {
    return int(ord.table.domain[size_t(i)].even_arcs().size());
  };
  return pair_scan(
      ord, "even-arc-monotone", [](int, int) { return true; },
      [&](int i, int j) { return evens(i) <= evens(j); }, "nested-arc count");
}

Report verify_phi_monotone(int n) {
  OrderRelation pre = build_order(n, OrderFlavor::preceq_xn2);
  OrderRelation leq = build_order(n, OrderFlavor::leq_xn1);
  std::vector<int> fwd(pre.table.domain.size());
  for (size_t i = 0; i < pre.table.domain.size(); ++i)
    fwd[i] = leq.table.index(eps(phi(pre.table.domain[i])));
  return pair_scan(
      pre, "phi-monotone", [](int, int) { return true; },
      [&](int i, int j) { return leq.reach.get(fwd[size_t(i)], fwd[size_t(j)]); },
      "order transport");
}

Report verify_plus_downward(int n) {
  OrderRelation pre = build_order(n, OrderFlavor::preceq_xn2);
  std::vector<char> plus(pre.table.domain.size());
  for (size_t i = 0; i < pre.table.domain.size(); ++i)
    plus[i] = classify(pre.table.domain[i]).plus_t.has_value();
  return pair_scan(
      pre, "plus-downward", [&](int, int j) { return bool(plus[size_t(j)]); },
      [&](int i, int) { return bool(plus[size_t(i)]); }, "plus membership");
}

namespace {

Report stratum_drop(int n, const std::string& id, bool plus_side) {
  OrderRelation pre = build_order(n, OrderFlavor::preceq_xn2);
  size_t m = pre.table.domain.size();
  std::vector<std::optional<int>> t(m);
  for (size_t i = 0; i < m; ++i) {
    auto lab = classify(pre.table.domain[i]);
    t[i] = plus_side ? lab.plus_t : lab.minus_t;
  }
  int shift = plus_side ? 0 : 1;
  auto admissible = [&](int i, int j) {
    if (!t[size_t(i)] || !t[size_t(j)]) return false;
    return plus_side ? *t[size_t(j)] < 0 : *t[size_t(j)] >= 0;
  };
  auto holds = [&](int i, int j) {
    int ti = *t[size_t(i)], tj = *t[size_t(j)];
    return ti == tj || std::abs(ti + shift) < std::abs(tj + shift);
  };
  return pair_scan(pre, id, admissible, holds, "stratum gap");
}

}  // namespace

Report verify_plus_stratum_drop(int n) { return stratum_drop(n, "plus-stratum-drop", true); }

Report verify_minus_stratum_drop(int n) {
  return stratum_drop(n, "minus-stratum-drop", false);
}

Report verify_zero_plus_prime_downward(int n) {
  OrderRelation pre = build_order(n, OrderFlavor::preceq_xn2);
  size_t m = pre.table.domain.size();
  std::vector<char> plus(m), zp(m);
  for (size_t i = 0; i < m; ++i) {
    const Matching& b = pre.table.domain[i];
    auto lab = classify(b);
    plus[i] = lab.plus_t.has_value();
    zp[i] = lab.plus_t && *lab.plus_t == 0 && !b.in_supp(n - 1);
  }
  return pair_scan(
      pre, "zero-plus-prime-downward",
      [&](int i, int j) { return bool(zp[size_t(j)]) && bool(plus[size_t(i)]); },
      [&](int i, int) { return bool(zp[size_t(i)]); }, "primed zero stratum");
}

Report verify_bar_gamma_monotone(int n, int sign) {
  OrderRelation ord = build_order(n, sign == 1 ? OrderFlavor::bar_plus : OrderFlavor::bar_minus);
  int shift = sign == 1 ? 0 : 1;
  auto gap = [&](int i) {
    return std::abs(ord.orbit_carrier[size_t(i)].rep.gamma() + shift);
  };
  return pair_scan(
      ord, "bar-gamma-monotone", [](int, int) { return true; },
      [&](int i, int j) { return gap(i) <= gap(j); }, "orbit gamma gap");
}

}  // namespace arcspan
