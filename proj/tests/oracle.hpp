// Reference implementations used only by tests. Everything here is a literal,
// set-based transcription of the defining conditions, kept independent of the
// library's bit-vector code so the two sides can check each other.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Set = std::set<int>;
using Arc = std::pair<int, int>;  // always stored (min, max)
using Match = std::set<Arc>;

inline bool is_odd(int v) { return ((v % 2) + 2) % 2 == 1; }

inline Set interval(int a, int b) {
  Set r;
  for (int h = a; h <= b; ++h) r.insert(h);
  return r;
}

inline Set sym_diff(const Set& x, const Set& y) {
  Set r;
  std::set_symmetric_difference(x.begin(), x.end(), y.begin(), y.end(),
                                std::inserter(r, r.begin()));
  return r;
}

inline std::vector<Match> all_matchings(int n) {
  std::vector<Match> out;
  Match cur;
  std::function<void(Set)> rec = [&](Set free) {
    if (free.empty()) {
      out.push_back(cur);
      return;
    }
    int p = *free.begin();
    Set rest = free;
    rest.erase(p);
    rec(rest);  // p stays unmatched
    for (int q : rest) {
      cur.insert({p, q});
      Set rest2 = rest;
      rest2.erase(q);
      rec(rest2);
      cur.erase({p, q});
    }
  };
  rec(interval(1, n));
  std::sort(out.begin(), out.end());
  return out;
}

inline Set supp(const Match& b) {
  Set r;
  for (auto& [i, j] : b) {
    r.insert(i);
    r.insert(j);
  }
  return r;
}

inline std::vector<Arc> odd_arcs(const Match& b) {
  std::vector<Arc> r;
  for (auto& a : b)
    if (is_odd(a.second - a.first)) r.push_back(a);
  return r;
}

inline std::vector<Arc> even_arcs(const Match& b) {
  std::vector<Arc> r;
  for (auto& a : b)
    if (!is_odd(a.second - a.first)) r.push_back(a);
  return r;
}

// x is a disjoint union of intervals [a,b], one per chosen odd-gap arc {a,b}
inline bool zero_covered(const Set& x, const std::vector<Arc>& arcs) {
  size_t k = arcs.size();
  for (size_t pick = 0; pick < (size_t(1) << k); ++pick) {
    Set u;
    bool disjoint = true;
    for (size_t i = 0; i < k && disjoint; ++i) {
      if (!(pick >> i & 1)) continue;
      for (int h = arcs[i].first; h <= arcs[i].second; ++h)
        if (!u.insert(h).second) {
          disjoint = false;
          break;
        }
    }
    if (disjoint && u == x) return true;
  }
  return false;
}

// all u with x minus {u} zero-covered (x is 1-covered iff this is nonempty)
inline std::vector<int> one_covered_points(const Set& x, const std::vector<Arc>& arcs) {
  std::vector<int> us;
  for (int u : x) {
    Set y = x;
    y.erase(u);
    if (zero_covered(y, arcs)) us.push_back(u);
  }
  return us;
}

struct Star {
  std::vector<int> ends;  // sorted even-arc endpoints, length 2s
  int s = 0;
};

// the *-condition: odd-gap arcs close up internally; even-gap arcs form a
// nested chain whose sorted endpoint sequence has zero-covered gaps within
// each half (the middle gap carries no condition)
inline std::optional<Star> star_check(const Match& b) {
  auto b1 = odd_arcs(b);
  auto b0 = even_arcs(b);
  for (auto& [i, j] : b1)
    if (!zero_covered(interval(i + 1, j - 1), b1)) return std::nullopt;
  std::vector<int> e;
  for (auto& [i, j] : b0) {
    e.push_back(i);
    e.push_back(j);
  }
  std::sort(e.begin(), e.end());
  int s = int(b0.size());
  for (int k = 1; k <= s; ++k) {
    Arc want{e[k - 1], e[2 * s - k]};
    if (!b.count(want)) return std::nullopt;
  }
  for (int a = 1; a <= 2 * s - 1; ++a) {
    if (a == s) continue;
    if (!zero_covered(interval(e[a - 1] + 1, e[a] - 1), b1)) return std::nullopt;
  }
  return Star{e, s};
}

// same membership decided by brute force over every arc-to-slot assignment,
// mirroring the existence quantifier in the definition; validates star_check
inline bool star_exists_brute(const Match& b) {
  auto b1 = odd_arcs(b);
  auto b0 = even_arcs(b);
  for (auto& [i, j] : b1)
    if (!zero_covered(interval(i + 1, j - 1), b1)) return false;
  int s = int(b0.size());
  if (s == 0) return true;
  std::vector<int> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // slot k holds arc perm[k-1]; the smaller endpoint must sit in the first
    // half (the written form of an even-gap arc puts the larger index first)
    std::vector<int> seq(2 * s);
    for (int k = 1; k <= s; ++k) {
      seq[k - 1] = b0[size_t(perm[k - 1])].first;
      seq[2 * s - k] = b0[size_t(perm[k - 1])].second;
    }
    bool ok = true;
    for (int a = 1; ok && a <= 2 * s - 1; ++a) {
      if (a == s) continue;
      if (seq[a - 1] >= seq[a]) {
        ok = false;  // the gap [i_a+1, i_{a+1}-1] must be a genuine interval
        continue;
      }
      if (!zero_covered(interval(seq[a - 1] + 1, seq[a] - 1), b1)) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// condition (I): boundary intervals close on both sides
inline bool cond_closed(const Match& b, const Star& st, int n) {
  if (st.s == 0) return true;
  auto b1 = odd_arcs(b);
  return zero_covered(interval(1, st.ends.front() - 1), b1) &&
         zero_covered(interval(st.ends.back() + 1, n), b1);
}

// condition (II): top point free; one boundary side carries a lone singleton
inline bool cond_open_plus(const Match& b, const Star& st, int n) {
  if (supp(b).count(n)) return false;
  if (st.s == 0) return true;
  if (!is_odd(st.s)) return false;
  auto b1 = odd_arcs(b);
  Set left = interval(1, st.ends.front() - 1);
  Set right = interval(st.ends.back() + 1, n - 1);
  bool wayA = !one_covered_points(left, b1).empty() && zero_covered(right, b1);
  bool wayB = zero_covered(left, b1) && !one_covered_points(right, b1).empty();
  return wayA || wayB;
}

// condition (III): condition (I) plus an arc at the top point whose lower
// endpoint parity matches the parity of the even-arc count
inline bool cond_open_minus(const Match& b, const Star& st, int n) {
  if (!cond_closed(b, st, n)) return false;
  for (auto& [i, j] : b)
    if (j == n) return is_odd(i) == is_odd(st.s);
  return false;
}

inline int singleton_point(const Match& b, const Star& st, int n) {
  auto b1 = odd_arcs(b);
  Set left = interval(1, st.ends.front() - 1);
  Set right = interval(st.ends.back() + 1, n - 1);
  std::vector<int> us;
  if (zero_covered(right, b1))
    for (int u : one_covered_points(left, b1)) us.push_back(u);
  if (zero_covered(left, b1))
    for (int u : one_covered_points(right, b1)) us.push_back(u);
  if (us.size() != 1) throw std::logic_error("reference singleton not unique");
  return us.front();
}

inline int xn1_t(const Star& st) { return is_odd(st.s) ? -st.s - 1 : st.s; }

inline int xn2_plus_t(const Match& b, const Star& st, int n) {
  if (st.s == 0) return 0;
  int u = singleton_point(b, st, n);
  return is_odd(u) ? st.s + 1 : -st.s - 1;
}

inline int xn2_minus_t(const Star& st) { return is_odd(st.s) ? -st.s - 1 : st.s; }

// [[ij]]: an interval for odd-gap arcs, a wrap-around pair of intervals
// for even-gap arcs
inline Set arc_box(const Arc& a, int n) {
  auto [lo, hi] = a;
  if (is_odd(hi - lo)) return interval(lo, hi);
  Set r = interval(hi, n);
  for (int h = 1; h <= lo; ++h) r.insert(h);
  return r;
}

inline Set eps(const Match& b, int n) {
  Set r;
  for (auto& a : b) r = sym_diff(r, arc_box(a, n));
  return r;
}

inline Set eps_prime(const Match& b, int n) {
  auto st = star_check(b);
  if (!st) throw std::logic_error("eps_prime outside the star set");
  Set r = eps(b, n);
  if (cond_open_plus(b, *st, n) && st->s > 0) {
    int u = singleton_point(b, *st, n);
    Set extra;
    if (is_odd(u)) {
      extra.insert(n);
      for (int h = 1; h <= u; ++h) extra.insert(h);
    } else {
      extra = interval(u, n);
    }
    r = sym_diff(r, extra);
  }
  return r;
}

inline Match phi(const Match& b, int n) {
  auto st = star_check(b);
  if (!st) throw std::logic_error("phi outside the star set");
  if (cond_open_plus(b, *st, n) && st->s > 0) {
    Match r = b;
    r.insert({singleton_point(b, *st, n), n});
    return r;
  }
  return b;
}

inline int gamma(const Set& x) {
  int ev = 0, od = 0;
  for (int h : x) (is_odd(h) ? od : ev)++;
  return ev - od;
}

// index-shift embedding: open a gap at {k,k+1}, add that arc
inline Match embed(int k, const Match& b) {
  auto io = [&](int i) { return i < k ? i : i + 2; };
  Match r;
  for (auto& [i, j] : b) r.insert({io(i), io(j)});
  r.insert({k, k + 1});
  return r;
}

inline std::vector<Match> pr_plus(int n) {
  std::vector<Match> out{Match{}};
  for (int tau = 2; tau <= (n - 1) / 2; tau += 2) {
    Match m;
    for (int r = 1; r <= tau - 1; ++r) m.insert({r, n - 1 - r});
    out.push_back(m);
  }
  return out;
}

inline std::vector<Match> pr_minus(int n) {
  std::vector<Match> out;
  Match base{{n - 1, n}};
  out.push_back(base);
  for (int tau = 2; tau <= (n - 3) / 2; tau += 2) {
    Match m = base;
    for (int r = 1; r <= tau; ++r) m.insert({r, n - 1 - r});
    out.push_back(m);
  }
  return out;
}

inline std::set<Match> sharp(int n, bool plus) {
  if (n == 3) {
    if (plus) return {Match{}};
    return {Match{{2, 3}}};
  }
  std::set<Match> out;
  for (auto& m : plus ? pr_plus(n) : pr_minus(n)) out.insert(m);
  for (auto& bp : sharp(n - 2, plus)) {
    int kmax = (plus && even_arcs(bp).empty()) ? n - 3 : n - 2;
    for (int k = 1; k <= kmax; ++k) out.insert(embed(k, bp));
  }
  return out;
}

}  // namespace oracle
