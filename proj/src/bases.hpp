// Indicator transition matrices between the delta and span-sum bases, their
// orbit-quotient analogues, and the unitriangularity/basis certifications.
#pragma once

#include "orders.hpp"

namespace arcspan {

enum class MatrixKind { c, cprime, cplus, cminus };

const char* matrix_kind_name(MatrixKind k);
OrderFlavor order_for(MatrixKind k);

struct F2Matrix {
  MatrixKind kind = MatrixKind::c;
  int n = 0;
  int m = 0;
  std::vector<uint8_t> ent;  // row-major; at(r,c) = coefficient of carrier r
                             // in the expansion of the basis vector at c
  std::vector<EvenSet> vec_carrier;  // kinds c, cprime
  std::vector<Orbit> orbit_carrier;  // kinds cplus, cminus

  // orbit kinds: how often the two-term lift sums to 2 before reduction,
  // with a few sample positions; harmless but worth surfacing
  long long presum_two = 0;
  std::vector<std::string> presum_notes;

  uint8_t at(int r, int c) const { return ent[size_t(r) * size_t(m) + size_t(c)]; }
};

F2Matrix transition_matrix(int n, MatrixKind kind);

// diag all ones and every nonzero entry ordered upward; ord must carry the
// flavor matching the matrix kind
Report unitriangular_check(const F2Matrix& mat, const OrderRelation& ord,
                           const std::string& id);

// the four basis certifications: full space, open-map variant, the two
// sign-restricted families, and the orbit quotients
std::vector<Report> basis_reports(int n);

}  // namespace arcspan
