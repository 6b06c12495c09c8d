// Membership, strata, and refinements for the three distinguished families,
// the index-shift embedding, and the recursive sharp characterization.
#pragma once

#include "matchings.hpp"
#include "report.hpp"

namespace arcspan {

enum class Family { xn1, xn2_plus, xn2_minus, xn2 };
enum class Refinement { prime, doubleprime };

struct FamilyLabel {
  bool star = false;
  std::optional<StarData> star_data;
  std::optional<int> xn1_t;
  std::optional<int> plus_t;
  std::optional<int> u_point;  // marked singleton, open plus with even arcs
  std::optional<int> minus_t;
};

FamilyLabel classify(const Matching& b);

struct MatchFilter {
  std::optional<int> t;
  std::optional<Refinement> refinement;
};

bool in_family(const Matching& b, const FamilyLabel& lab, Family f,
               const MatchFilter& flt = {});
std::vector<Matching> enumerate_family(int n, Family f, const MatchFilter& flt = {});

// ambient grows by two; the gap opens at {k,k+1}, valid for k in [1, n+1]
Matching embed(int k, const Matching& b);

std::vector<Matching> pr_set(int n, int sign);
std::vector<Matching> sharp_family(int n, int sign);

// sharp versus the primed refinement, both signs
Report verify_sharp(int n);

}  // namespace arcspan
