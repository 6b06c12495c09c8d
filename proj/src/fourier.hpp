// The sign-character transform on the even-subset space, its matrix in the
// span-sum bases, the dimension-flag stability check, the pinned five-point
// block analysis, and the orbit-quotient transform report.
#pragma once

#include "bases.hpp"
#include "dyadic.hpp"

namespace arcspan {

enum class OperatorBasis { A_on_c, Aprime_on_cprime, bar_plus_on_tilde };

const char* operator_basis_name(OperatorBasis b);

struct DyadicMatrix {
  int n = 0;
  int m = 0;
  std::vector<Dyadic> ent;  // row-major; at(r,c) = coefficient of carrier r in
                            // the image of basis vector c
  std::vector<EvenSet> vec_carrier;
  std::vector<Orbit> orbit_carrier;

  const Dyadic& at(int r, int c) const { return ent[size_t(r) * size_t(m) + size_t(c)]; }
  Dyadic& at(int r, int c) { return ent[size_t(r) * size_t(m) + size_t(c)]; }
  DyadicMatrix mul(const DyadicMatrix& o) const;
  bool is_identity() const;
};

// kernel of the transform on the full space (ascending carrier) and on the
// plus-side orbit quotient, both exactly normalized
DyadicMatrix fourier_kernel(int n);
DyadicMatrix quotient_kernel(int n);

std::vector<Dyadic> fourier_apply(const std::vector<Dyadic>& f, int n);

// conjugate the kernel into the requested basis by an exact triangular solve
DyadicMatrix operator_matrix(int n, OperatorBasis basis);

Report involution_check(int n);  // kernel squared is the identity
Report operator_involution_check(int n, OperatorBasis basis);
Report filtration_check(int n);  // span-dimension flag is stable, quotients are signs
Report five_block_certify();     // the pinned n=5 block computation

struct TriVerdict {
  bool triangular = false;
  std::vector<int> order;  // carrier positions, upper-triangularizing
  std::vector<int> cycle;  // directed cycle of carrier positions otherwise
};

TriVerdict triangularizable(const DyadicMatrix& m);

Report conjecture_report(int n);  // quotient transform: verdict only, never a failure

}  // namespace arcspan
