// The two vector maps on the families, the case bijection between them, and
// the precomputed two-way tables.
#pragma once

#include <unordered_map>

#include "families.hpp"

namespace arcspan {

EvenSet arc_closure(const Arc& a, int n);  // the [[..]] subset of an arc
Subspace arc_span(const Matching& b);      // span of the arcs as vectors

EvenSet eps(const Matching& b);        // closed family only
EvenSet eps_prime(const Matching& b);  // open families only
Matching phi(const Matching& b);       // open families into the closed family
Matching phi_inv(const Matching& b);   // closed family back

struct CorrespondenceTable {
  int n = 0;
  std::vector<Matching> domain;  // canonical enumeration order
  std::vector<EvenSet> image;    // image[i] corresponds to domain[i]
  std::unordered_map<uint32_t, int> index_of;  // vector bits -> domain index

  const Matching& preimage(const EvenSet& x) const;
  int index(const EvenSet& x) const;
};

CorrespondenceTable eps_table(int n);
CorrespondenceTable eps_prime_table(int n);

Report verify_correspondences(int n);

}  // namespace arcspan
