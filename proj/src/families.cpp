#include "families.hpp"

#include <algorithm>
#include <set>

namespace arcspan {

FamilyLabel classify(const Matching& b) {
  FamilyLabel lab;
  auto st = star_sequence(b);
  if (!st) return lab;
  lab.star = true;
  int n = b.n(), s = st->s;
  auto odd = b.odd_arcs();
  uint32_t left = s ? interval_bits(1, st->seq.front() - 1, n) : 0;
  uint32_t tail = s ? interval_bits(st->seq.back() + 1, n, n) : 0;
  bool left0 = s == 0 || zero_covered(left, odd, n);
  bool closed = s == 0 || (left0 && zero_covered(tail, odd, n));
  if (closed) lab.xn1_t = (s % 2 == 0) ? s : -s - 1;

  if (!b.in_supp(n)) {
    if (s == 0) {
      lab.plus_t = 0;
    } else if (s % 2 == 1) {
      uint32_t right = interval_bits(st->seq.back() + 1, n - 1, n);
      std::vector<int> us;
      if (zero_covered(right, odd, n))
        for (int u : one_covered_points(left, odd, n)) us.push_back(u);
      if (left0)
        for (int u : one_covered_points(right, odd, n)) us.push_back(u);
      if (us.size() > 1)
        throw internal_error("open-plus matching with several marked singletons: " + b.str());
      if (us.size() == 1) {
        lab.u_point = us[0];
        lab.plus_t = (us[0] % 2 == 1) ? s + 1 : -s - 1;
      }
    }
  } else if (closed) {
    if (auto a = b.arc_at(n); a && a->hi == n) {
      if ((a->lo % 2) == (s % 2)) lab.minus_t = (s % 2 == 0) ? s : -s - 1;
    }
  }
  lab.star_data = std::move(st);
  return lab;
}

namespace {

bool side_ok(const Matching& b, Family side, std::optional<int> tv, const MatchFilter& flt) {
  if (!tv) return false;
  if (flt.t && *flt.t != *tv) return false;
  if (flt.refinement) {
    bool prime;
    if (side == Family::xn2_plus)
      prime = *tv < 0 || (*tv == 0 && !b.in_supp(b.n() - 1));
    else
      prime = *tv >= 0;
    if ((*flt.refinement == Refinement::prime) != prime) return false;
  }
  return true;
}

}  // namespace

bool in_family(const Matching& b, const FamilyLabel& lab, Family f, const MatchFilter& flt) {
  switch (f) {
    case Family::xn1:
      if (flt.refinement) throw usage_error("refinement applies to the open families only");
      return lab.xn1_t && (!flt.t || *flt.t == *lab.xn1_t);
    case Family::xn2_plus:
      return side_ok(b, Family::xn2_plus, lab.plus_t, flt);
    case Family::xn2_minus:
      return side_ok(b, Family::xn2_minus, lab.minus_t, flt);
    case Family::xn2:
      return side_ok(b, Family::xn2_plus, lab.plus_t, flt) ||
             side_ok(b, Family::xn2_minus, lab.minus_t, flt);
  }
  throw usage_error("unknown family");
}

std::vector<Matching> enumerate_family(int n, Family f, const MatchFilter& flt) {
  std::vector<Matching> out;
  for (auto& b : enumerate_matchings(n))
    if (in_family(b, classify(b), f, flt)) out.push_back(b);
  return out;
}

Matching embed(int k, const Matching& b) {
  int n2 = b.n() + 2;
  if (n2 > max_ambient) throw usage_error("embedding exceeds the ambient cap");
  if (k < 1 || k > n2 - 1) throw usage_error("embedding slot out of range");
  auto io = [&](int i) { return i < k ? i : i + 2; };
  std::vector<Arc> arcs;
  arcs.reserve(b.arcs().size() + 1);
  for (auto& a : b.arcs()) arcs.push_back({io(a.lo), io(a.hi)});
  arcs.push_back({k, k + 1});
  return Matching(n2, std::move(arcs));
}

std::vector<Matching> pr_set(int n, int sign) {
  check_ambient(n);
  if (sign != 1 && sign != -1) throw usage_error("sign must be +1 or -1");
  std::vector<Matching> out;
  if (sign == 1) {
    out.emplace_back(n, std::vector<Arc>{});
    for (int tau = 2; tau <= (n - 1) / 2; tau += 2) {
      std::vector<Arc> arcs;
      for (int r = 1; r <= tau - 1; ++r) arcs.push_back({r, n - 1 - r});
      out.emplace_back(n, std::move(arcs));
    }
  } else {
    out.emplace_back(n, std::vector<Arc>{{n - 1, n}});
    for (int tau = 2; tau <= (n - 3) / 2; tau += 2) {
      std::vector<Arc> arcs{{n - 1, n}};
      for (int r = 1; r <= tau; ++r) arcs.push_back({r, n - 1 - r});
      out.emplace_back(n, std::move(arcs));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> sharp_family(int n, int sign) {
  check_ambient(n);
  if (sign != 1 && sign != -1) throw usage_error("sign must be +1 or -1");
  if (n == 3) {
    if (sign == 1) return {Matching(3, {})};
    return {Matching(3, {{2, 3}})};
  }
  std::set<Matching> acc;
  for (auto& m : pr_set(n, sign)) acc.insert(m);
  for (auto& bp : sharp_family(n - 2, sign)) {
    int kmax = (sign == 1 && bp.even_arcs().empty()) ? n - 3 : n - 2;
    for (int k = 1; k <= kmax; ++k) acc.insert(embed(k, bp));
  }
  return {acc.begin(), acc.end()};
}

Report verify_sharp(int n) {
  Report r;
  r.id = "sharp";
  r.status = "pass";
  for (int sign : {1, -1}) {
    MatchFilter prime{{}, Refinement::prime};
    Family side = sign == 1 ? Family::xn2_plus : Family::xn2_minus;
    auto direct = enumerate_family(n, side, prime);
    auto sharp = sharp_family(n, sign);
    std::string tag = sign == 1 ? "plus" : "minus";
    r.counts["primed_" + tag] = (long long)direct.size();
    r.counts["sharp_" + tag] = (long long)sharp.size();
    std::set<Matching> d(direct.begin(), direct.end());
    std::set<Matching> s(sharp.begin(), sharp.end());
    if (d != s) {
      for (auto& m : d)
        if (!s.count(m)) r.note_failure("primed-only " + tag + ": " + m.str());
      for (auto& m : s)
        if (!d.count(m)) r.note_failure("sharp-only " + tag + ": " + m.str());
    }
  }
  return r;
}

}  // namespace arcspan
