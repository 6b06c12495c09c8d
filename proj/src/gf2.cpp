#include "gf2.hpp"

#include <algorithm>
#include <bit>

namespace arcspan {

void check_ambient(int n) {
  if (n < 3 || n > max_ambient || n % 2 == 0)
    throw usage_error("ambient size must be odd and within [3," +
                      std::to_string(max_ambient) + "], got " + std::to_string(n));
}

uint32_t interval_bits(int a, int b, int n) {
  a = std::max(a, 1);
  b = std::min(b, n);
  if (a > b) return 0;
  return (b == 32 ? ~uint32_t(0) : (uint32_t(1) << b) - 1) & ~((uint32_t(1) << (a - 1)) - 1);
}

EvenSet::EvenSet(int n, uint32_t bits) : n_(n), bits_(bits) {
  check_ambient(n);
  if (bits >> n) throw usage_error("set bits beyond position n");
  if (std::popcount(bits) % 2 != 0) throw usage_error("even-cardinality subset required");
}

EvenSet EvenSet::of(int n, std::initializer_list<int> pts) {
  uint32_t b = 0;
  for (int p : pts) {
    if (p < 1 || p > n) throw usage_error("point outside [1,n]");
    b |= uint32_t(1) << (p - 1);
  }
  return EvenSet(n, b);
}

int EvenSet::size() const { return std::popcount(bits_); }

EvenSet EvenSet::operator+(const EvenSet& o) const {
  if (n_ != o.n_) throw usage_error("ambient mismatch in sum");
  EvenSet r;
  r.n_ = n_;
  r.bits_ = bits_ ^ o.bits_;
  return r;
}

int EvenSet::pairing(const EvenSet& o) const {
  if (n_ != o.n_) throw usage_error("ambient mismatch in pairing");
  return std::popcount(bits_ & o.bits_) & 1;
}

int EvenSet::gamma() const {
  int ev = 0, od = 0;
  for (int p = 1; p <= n_; ++p)
    if (bits_ >> (p - 1) & 1) (p % 2 == 0 ? ev : od)++;
  return ev - od;
}

EvenSet EvenSet::bang() const {
  EvenSet r = *this;
  r.bits_ ^= interval_bits(1, n_ - 1, n_);
  return r;
}

std::vector<int> EvenSet::points() const {
  std::vector<int> r;
  for (int p = 1; p <= n_; ++p)
    if (bits_ >> (p - 1) & 1) r.push_back(p);
  return r;
}

std::string EvenSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int p : points()) {
    if (!first) s += ",";
    s += std::to_string(p);
    first = false;
  }
  return s + "}";
}

void Subspace::insert(uint32_t v) {
  for (uint32_t row : rows_)
    if (v & (row & -row)) v ^= row;
  if (!v) return;
  uint32_t pivot = v & -v;
  for (uint32_t& row : rows_)
    if (row & pivot) row ^= v;
  rows_.push_back(v);
  std::sort(rows_.begin(), rows_.end(),
            [](uint32_t a, uint32_t b) { return (a & -a) < (b & -b); });
}

Subspace Subspace::span(int n, const std::vector<EvenSet>& gens) {
  check_ambient(n);
  Subspace s(n);
  for (auto& g : gens) {
    if (g.n() != n) throw usage_error("ambient mismatch in span");
    s.insert(g.bits());
  }
  return s;
}

bool Subspace::member(const EvenSet& x) const {
  if (x.n() != n_) throw usage_error("ambient mismatch in membership");
  uint32_t v = x.bits();
  for (uint32_t row : rows_)
    if (v & (row & -row)) v ^= row;
  return v == 0;
}

std::vector<EvenSet> Subspace::elements() const {
  std::vector<uint32_t> out{0};
  for (uint32_t row : rows_) {
    size_t m = out.size();
    for (size_t i = 0; i < m; ++i) out.push_back(out[i] ^ row);
  }
  std::sort(out.begin(), out.end());
  std::vector<EvenSet> r;
  r.reserve(out.size());
  for (uint32_t b : out) r.emplace_back(n_, b);
  return r;
}

namespace {

// primed side of the sign split: nonpositive strata for plus (with the
// top-adjacent point absent at stratum zero), nonnegative strata for minus
bool primed(const EvenSet& x) {
  int g = x.gamma();
  if (!x.has_top()) return g < 0 || (g == 0 && !x.contains(x.n() - 1));
  return g >= 0;
}

}  // namespace

bool filter_admits(const VectorFilter& f, const EvenSet& x) {
  if (f.refinement && !f.sign) throw usage_error("refinement filter requires a sign");
  if (f.sign && *f.sign != 1 && *f.sign != -1) throw usage_error("sign must be +1 or -1");
  if (f.t && *f.t != x.gamma()) return false;
  if (f.sign && (*f.sign == 1) != !x.has_top()) return false;
  if (f.refinement && (*f.refinement == 0) != primed(x)) return false;
  return true;
}

std::vector<EvenSet> enumerate_vectors(int n, const VectorFilter& f) {
  check_ambient(n);
  std::vector<EvenSet> out;
  for (uint32_t b = 0; b < (uint32_t(1) << n); ++b) {
    if (std::popcount(b) % 2) continue;
    EvenSet x(n, b);
    if (filter_admits(f, x)) out.push_back(x);
  }
  return out;
}

std::vector<Orbit> orbits(int n, int sign) {
  if (sign != 1 && sign != -1) throw usage_error("sign must be +1 or -1");
  VectorFilter f;
  f.sign = sign;
  std::vector<Orbit> out;
  for (auto& x : enumerate_vectors(n, f)) {
    EvenSet y = x.bang();
    if (y.bits() < x.bits()) continue;  // count each pair once
    bool px = primed(x), py = primed(y);
    if (px == py) throw internal_error("orbit without a unique primed member");
    Orbit o;
    o.sign = sign;
    o.rep = px ? x : y;
    o.other = px ? y : x;
    out.push_back(o);
  }
  std::sort(out.begin(), out.end(),
            [](const Orbit& a, const Orbit& b) { return a.rep.bits() < b.rep.bits(); });
  return out;
}

}  // namespace arcspan
