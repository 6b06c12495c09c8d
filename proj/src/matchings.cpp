#include "matchings.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace arcspan {

Matching::Matching(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  check_ambient(n);
  uint32_t seen = 0;
  for (auto& a : arcs_) {
    if (a.lo < 1 || a.hi > n || a.lo >= a.hi) throw usage_error("bad arc endpoints");
    uint32_t m = (uint32_t(1) << (a.lo - 1)) | (uint32_t(1) << (a.hi - 1));
    if (seen & m) throw usage_error("arcs must be pairwise disjoint");
    seen |= m;
  }
  std::sort(arcs_.begin(), arcs_.end());
}

std::vector<Arc> Matching::odd_arcs() const {
  std::vector<Arc> r;
  for (auto& a : arcs_)
    if (a.odd_gap()) r.push_back(a);
  return r;
}

std::vector<Arc> Matching::even_arcs() const {
  std::vector<Arc> r;
  for (auto& a : arcs_)
    if (!a.odd_gap()) r.push_back(a);
  return r;
}

uint32_t Matching::supp_bits() const {
  uint32_t s = 0;
  for (auto& a : arcs_) s |= (uint32_t(1) << (a.lo - 1)) | (uint32_t(1) << (a.hi - 1));
  return s;
}

bool Matching::in_supp(int p) const { return p >= 1 && p <= n_ && (supp_bits() >> (p - 1) & 1); }

std::optional<Arc> Matching::arc_at(int p) const {
  for (auto& a : arcs_)
    if (a.lo == p || a.hi == p) return a;
  return std::nullopt;
}

Matching Matching::with_arc(Arc a) const {
  auto v = arcs_;
  v.push_back(a);
  return Matching(n_, std::move(v));
}

Matching Matching::without_arc(Arc a) const {
  auto v = arcs_;
  auto it = std::find(v.begin(), v.end(), a);
  if (it == v.end()) throw usage_error("arc not present");
  v.erase(it);
  return Matching(n_, std::move(v));
}

std::string Matching::str() const {
  std::string s = "{";
  for (size_t i = 0; i < arcs_.size(); ++i) {
    if (i) s += ",";
    s += "{" + std::to_string(arcs_[i].lo) + "," + std::to_string(arcs_[i].hi) + "}";
  }
  return s + "}";
}

std::vector<Matching> enumerate_matchings(int n) {
  check_ambient(n);
  std::vector<Matching> out;
  std::vector<Arc> cur;
  auto rec = [&](auto&& self, uint32_t free) -> void {
    if (!free) {
      out.emplace_back(n, cur);
      return;
    }
    int p = std::countr_zero(free) + 1;
    uint32_t rest = free & (free - 1);
    self(self, rest);  // p stays unmatched
    for (uint32_t qs = rest; qs; qs &= qs - 1) {
      int q = std::countr_zero(qs) + 1;
      cur.push_back({p, q});
      self(self, rest & ~(uint32_t(1) << (q - 1)));
      cur.pop_back();
    }
  };
  rec(rec, (uint32_t(1) << n) - 1);
  std::sort(out.begin(), out.end());
  return out;
}

bool zero_covered(uint32_t x, const std::vector<Arc>& odd, int n) {
  if (!x) return true;
  // the interval containing the lowest point of x must start exactly there
  int p = std::countr_zero(x) + 1;
  for (auto& a : odd) {
    if (a.lo != p) continue;
    uint32_t iv = interval_bits(a.lo, a.hi, n);
    if ((x & iv) != iv) continue;
    if (zero_covered(x & ~iv, odd, n)) return true;
  }
  return false;
}

std::vector<int> one_covered_points(uint32_t x, const std::vector<Arc>& odd, int n) {
  std::vector<int> us;
  for (uint32_t b = x; b; b &= b - 1) {
    int u = std::countr_zero(b) + 1;
    if (zero_covered(x & ~(b & -b), odd, n)) us.push_back(u);
  }
  return us;
}

std::optional<StarData> star_sequence(const Matching& b) {
  int n = b.n();
  auto odd = b.odd_arcs();
  for (auto& a : odd)
    if (!zero_covered(interval_bits(a.lo + 1, a.hi - 1, n), odd, n)) return std::nullopt;
  auto even = b.even_arcs();
  int s = int(even.size());
  std::vector<int> seq;
  seq.reserve(size_t(2 * s));
  for (auto& a : even) {
    seq.push_back(a.lo);
    seq.push_back(a.hi);
  }
  std::sort(seq.begin(), seq.end());
  for (int k = 1; k <= s; ++k) {
    Arc want{seq[k - 1], seq[2 * s - k]};
    if (!std::binary_search(even.begin(), even.end(), want)) return std::nullopt;
  }
  for (int a = 1; a <= 2 * s - 1; ++a) {
    if (a == s) continue;
    if (!zero_covered(interval_bits(seq[a - 1] + 1, seq[a] - 1, n), odd, n))
      return std::nullopt;
  }
  return StarData{std::move(seq), s};
}

int star_assignment_count(const Matching& b) {
  int n = b.n();
  auto odd = b.odd_arcs();
  for (auto& a : odd)
    if (!zero_covered(interval_bits(a.lo + 1, a.hi - 1, n), odd, n)) return 0;
  auto even = b.even_arcs();
  int s = int(even.size());
  if (s == 0) return 1;
  std::vector<int> perm(size_t(s), 0);
  std::iota(perm.begin(), perm.end(), 0);
  int count = 0;
  do {
    std::vector<int> seq(size_t(2 * s));
    for (int k = 1; k <= s; ++k) {
      seq[size_t(k - 1)] = even[size_t(perm[size_t(k - 1)])].lo;
      seq[size_t(2 * s - k)] = even[size_t(perm[size_t(k - 1)])].hi;
    }
    bool ok = true;
    for (int a = 1; ok && a <= 2 * s - 1; ++a) {
      if (a == s) continue;
      if (seq[size_t(a - 1)] >= seq[size_t(a)]) {
        ok = false;
        continue;
      }
      if (!zero_covered(interval_bits(seq[size_t(a - 1)] + 1, seq[size_t(a)] - 1, n), odd, n))
        ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace arcspan
