// Partial matchings by disjoint arcs, the covering tests, and the star set.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gf2.hpp"

namespace arcspan {

struct Arc {
  int lo = 0, hi = 0;
  bool odd_gap() const { return (hi - lo) % 2 == 1; }
  auto operator<=>(const Arc&) const = default;
};

class Matching {
 public:
  Matching() = default;
  Matching(int n, std::vector<Arc> arcs);

  int n() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int size() const { return int(arcs_.size()); }
  std::vector<Arc> odd_arcs() const;   // interval-closing arcs
  std::vector<Arc> even_arcs() const;  // nested-chain arcs
  uint32_t supp_bits() const;
  bool in_supp(int p) const;
  std::optional<Arc> arc_at(int p) const;
  Matching with_arc(Arc a) const;
  Matching without_arc(Arc a) const;
  std::string str() const;

  bool operator==(const Matching&) const = default;
  auto operator<=>(const Matching&) const = default;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;  // sorted by (lo, hi)
};

std::vector<Matching> enumerate_matchings(int n);

// x is a disjoint union of intervals [lo,hi] over chosen odd-gap arcs
bool zero_covered(uint32_t x, const std::vector<Arc>& odd, int n);
// all u with x minus {u} zero-covered
std::vector<int> one_covered_points(uint32_t x, const std::vector<Arc>& odd, int n);

struct StarData {
  std::vector<int> seq;  // sorted even-arc endpoints, length 2s
  int s = 0;
};

// nullopt when the matching fails the star conditions
std::optional<StarData> star_sequence(const Matching& b);

// number of admissible slot assignments realizing the nested-chain sequence;
// the definition promises exactly one for members of the star set
int star_assignment_count(const Matching& b);

}  // namespace arcspan
