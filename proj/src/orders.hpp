// The three comparison relations on the families and their orbit quotients,
// materialized as closed boolean matrices with antisymmetry certificates.
#pragma once

#include "correspondences.hpp"

namespace arcspan {

enum class OrderFlavor { leq_xn1, preceq_xn2, bar_plus, bar_minus };

// dense relation on [0,m); get(a,b) reads "a is below b"
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(int m)
      : m_(m), words_((m + 63) / 64), rows_(size_t(m) * size_t(words_), 0) {}

  int size() const { return m_; }
  bool get(int a, int b) const {
    return rows_[size_t(a) * words_ + size_t(b) / 64] >> (b % 64) & 1;
  }
  void set(int a, int b) {
    rows_[size_t(a) * words_ + size_t(b) / 64] |= uint64_t(1) << (b % 64);
  }
  void close();  // reflexive-transitive closure in place

  bool operator==(const BitRel&) const = default;

 private:
  int m_ = 0, words_ = 0;
  std::vector<uint64_t> rows_;
};

struct OrderRelation {
  OrderFlavor flavor = OrderFlavor::leq_xn1;
  int n = 0;
  // matching flavors carry the two-way map table; bar flavors carry orbits
  CorrespondenceTable table;
  std::vector<Orbit> orbit_carrier;
  BitRel gen;
  BitRel reach;
  bool antisymmetric = false;
  std::vector<int> cycle;      // two mutually reachable indices when not antisymmetric
  std::vector<int> extension;  // below-first listing compatible with reach

  int size() const { return reach.size(); }
};

OrderRelation build_order(int n, OrderFlavor f);

// statement-level checks; each quantifies over all reach-related pairs
Report verify_partial_order(int n, OrderFlavor f);
Report verify_even_arc_monotone(int n);          // below never gains nested arcs
Report verify_phi_monotone(int n);               // open-to-closed map preserves order
Report verify_plus_downward(int n);              // plus side is downward closed
Report verify_plus_stratum_drop(int n);          // negative strata shrink in absolute value
Report verify_zero_plus_prime_downward(int n);   // primed zero stratum is downward closed
Report verify_minus_stratum_drop(int n);         // minus strata shrink around -1
Report verify_bar_gamma_monotone(int n, int sign);

}  // namespace arcspan
