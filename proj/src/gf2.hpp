// F2 linear algebra on even-cardinality subsets of [1,n], n odd.
#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arcspan {

struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// an invariant the rest of the code relies on failed; seeing one means a
// computation contradicted the expected combinatorics and must not be masked
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline constexpr int max_ambient = 25;

void check_ambient(int n);

// bit p-1 encodes membership of position p; {a..b} clamped to [1,n], empty when a > b
uint32_t interval_bits(int a, int b, int n);

class EvenSet {
 public:
  EvenSet() = default;
  EvenSet(int n, uint32_t bits);
  static EvenSet empty(int n) { return EvenSet(n, 0); }
  static EvenSet of(int n, std::initializer_list<int> pts);

  int n() const { return n_; }
  uint32_t bits() const { return bits_; }
  bool contains(int p) const { return p >= 1 && p <= n_ && (bits_ >> (p - 1) & 1); }
  int size() const;
  bool is_empty() const { return bits_ == 0; }

  EvenSet operator+(const EvenSet& o) const;  // symmetric difference
  int pairing(const EvenSet& o) const;        // overlap size mod 2
  int gamma() const;                          // even positions minus odd positions
  bool has_top() const { return contains(n_); }
  EvenSet bang() const;                       // add the full interval [1,n-1]

  std::vector<int> points() const;
  std::string str() const;

  bool operator==(const EvenSet&) const = default;
  auto operator<=>(const EvenSet&) const = default;

 private:
  int n_ = 0;
  uint32_t bits_ = 0;
};

class Subspace {
 public:
  explicit Subspace(int n) : n_(n) {}
  static Subspace span(int n, const std::vector<EvenSet>& gens);

  int n() const { return n_; }
  int dim() const { return int(rows_.size()); }
  const std::vector<uint32_t>& rows() const { return rows_; }
  bool member(const EvenSet& x) const;
  std::vector<EvenSet> elements() const;  // all members, ascending bit order

  bool operator==(const Subspace&) const = default;

 private:
  int n_ = 0;
  std::vector<uint32_t> rows_;  // reduced echelon, sorted by pivot (lowest set bit)
  void insert(uint32_t v);
};

struct VectorFilter {
  std::optional<int> t;
  std::optional<int> sign;        // +1: top point absent, -1: present
  std::optional<int> refinement;  // 0 = prime, 1 = doubleprime; needs sign
};

bool filter_admits(const VectorFilter& f, const EvenSet& x);
std::vector<EvenSet> enumerate_vectors(int n, const VectorFilter& f = {});

struct Orbit {
  int sign = 0;
  EvenSet rep;    // the member on the primed side
  EvenSet other;  // rep plus [1,n-1]
};

// orbits of the bang involution on one sign half, sorted by representative
std::vector<Orbit> orbits(int n, int sign);

}  // namespace arcspan
