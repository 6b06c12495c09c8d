#include "correspondences.hpp"

namespace arcspan {

EvenSet arc_closure(const Arc& a, int n) {
  if (a.odd_gap()) return EvenSet(n, interval_bits(a.lo, a.hi, n));
  return EvenSet(n, interval_bits(a.hi, n, n) | interval_bits(1, a.lo, n));
}

Subspace arc_span(const Matching& b) {
  std::vector<EvenSet> gens;
  gens.reserve(b.arcs().size());
  for (auto& a : b.arcs()) gens.push_back(EvenSet::of(b.n(), {a.lo, a.hi}));
  return Subspace::span(b.n(), gens);
}

namespace {

EvenSet closure_sum(const Matching& b) {
  EvenSet r = EvenSet::empty(b.n());
  for (auto& a : b.arcs()) r = r + arc_closure(a, b.n());
  return r;
}

EvenSet eps_prime_labeled(const Matching& b, const FamilyLabel& lab) {
  int n = b.n();
  EvenSet r = closure_sum(b);
  if (lab.plus_t && lab.u_point) {
    int u = *lab.u_point;
    // the correction arcs the singleton to the top point; written backwards
    // (wrap-around) when that arc has an even gap, i.e. when u is odd
    if (u % 2 == 1)
      r = r + EvenSet(n, interval_bits(n, n, n) | interval_bits(1, u, n));
    else
      r = r + EvenSet(n, interval_bits(u, n, n));
  }
  return r;
}

}  // namespace

EvenSet eps(const Matching& b) {
  auto lab = classify(b);
  if (!lab.xn1_t) throw usage_error("matching outside the closed family: " + b.str());
  return closure_sum(b);
}

EvenSet eps_prime(const Matching& b) {
  auto lab = classify(b);
  if (!lab.plus_t && !lab.minus_t)
    throw usage_error("matching outside the open families: " + b.str());
  return eps_prime_labeled(b, lab);
}

Matching phi(const Matching& b) {
  auto lab = classify(b);
  if (!lab.plus_t && !lab.minus_t)
    throw usage_error("matching outside the open families: " + b.str());
  if (lab.plus_t && lab.u_point) return b.with_arc({*lab.u_point, b.n()});
  return b;
}

Matching phi_inv(const Matching& b) {
  auto lab = classify(b);
  if (!lab.xn1_t) throw usage_error("matching outside the closed family: " + b.str());
  int s = int(b.even_arcs().size());
  if (s == 0) return b;
  if (auto a = b.arc_at(b.n())) {
    // removable exactly when the lower endpoint parity is opposite to the
    // even-arc count parity
    if ((a->lo % 2) == ((s + 1) % 2)) return b.without_arc(*a);
  }
  return b;
}

const Matching& CorrespondenceTable::preimage(const EvenSet& x) const {
  return domain[size_t(index(x))];
}

int CorrespondenceTable::index(const EvenSet& x) const {
  auto it = index_of.find(x.bits());
  if (it == index_of.end()) throw usage_error("vector outside the table image: " + x.str());
  return it->second;
}

namespace {

CorrespondenceTable build_table(int n, Family f) {
  CorrespondenceTable t;
  t.n = n;
  for (auto& b : enumerate_matchings(n)) {
    auto lab = classify(b);
    bool take = f == Family::xn1 ? lab.xn1_t.has_value()
                                 : lab.plus_t.has_value() || lab.minus_t.has_value();
    if (!take) continue;
    EvenSet x = f == Family::xn1 ? closure_sum(b) : eps_prime_labeled(b, lab);
    int idx = int(t.domain.size());
    t.domain.push_back(b);
    t.image.push_back(x);
    auto [it, fresh] = t.index_of.emplace(x.bits(), idx);
    if (!fresh)
      throw internal_error("map collision on " + x.str() + ": " + b.str() + " and " +
                           t.domain[size_t(it->second)].str());
  }
  if (t.domain.size() != size_t(1) << (n - 1))
    throw internal_error("family size is not the full vector count at n=" +
                         std::to_string(n));
  return t;
}

}  // namespace

CorrespondenceTable eps_table(int n) {
  check_ambient(n);
  return build_table(n, Family::xn1);
}

CorrespondenceTable eps_prime_table(int n) {
  check_ambient(n);
  return build_table(n, Family::xn2);
}

Report verify_correspondences(int n) {
  Report r;
  r.id = "correspondences";
  r.status = "pass";
  size_t want = size_t(1) << (n - 1);
  std::unordered_map<uint32_t, const Matching*> seen, seenp;
  size_t closed = 0, plus = 0, minus = 0;
  std::vector<Matching> closed_list;
  for (auto& b : enumerate_matchings(n)) {
    auto lab = classify(b);
    if (lab.xn1_t) {
      ++closed;
      closed_list.push_back(b);
      auto x = closure_sum(b);
      if (!seen.emplace(x.bits(), &b).second)
        r.note_failure("closed-map collision at " + x.str());
    }
    if (lab.plus_t || lab.minus_t) {
      (lab.plus_t ? plus : minus)++;
      auto x = eps_prime_labeled(b, lab);
      if (!seenp.emplace(x.bits(), &b).second)
        r.note_failure("open-map collision at " + x.str());
      Matching f = phi(b);
      if (!classify(f).xn1_t) r.note_failure("phi left the closed family: " + b.str());
      if (!(phi_inv(f) == b)) r.note_failure("phi roundtrip broke at " + b.str());
      if (!(eps_prime_labeled(b, lab) == closure_sum(f)))
        r.note_failure("open map disagrees with phi composition at " + b.str());
    }
  }
  for (auto& b : closed_list) {
    Matching back = phi_inv(b);
    if (!(phi(back) == b)) r.note_failure("inverse roundtrip broke at " + b.str());
  }
  r.counts["closed"] = (long long)closed;
  r.counts["open_plus"] = (long long)plus;
  r.counts["open_minus"] = (long long)minus;
  r.counts["vectors"] = (long long)want;
  if (closed != want || plus + minus != want)
    r.note_failure("family sizes off at n=" + std::to_string(n));
  if (seen.size() != want || seenp.size() != want)
    r.note_failure("maps are not onto at n=" + std::to_string(n));
  return r;
}

}  // namespace arcspan
