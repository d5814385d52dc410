#pragma once

#include <optional>

#include "dcmv/snf.hpp"

namespace dcmv {

// --- integer linear algebra (via Smith form) ---

struct IntSolution {
  std::vector<Int> x;  // one solution of M x = b
  IntMat kernel;       // columns form a basis of ker(M) over Z
};

std::optional<IntSolution> solve_integer_full(const IntMat& m, const std::vector<Int>& b);
std::optional<std::vector<Int>> solve_integer(const IntMat& m, const std::vector<Int>& b);

// columns form a basis of ker(M) over Z
IntMat integer_kernel_basis(const IntMat& m);

// basis of the column span of M over Z (no zero columns); deterministic
IntMat lattice_basis(const IntMat& gens);

bool lattice_contains(const IntMat& basis, const std::vector<Int>& v);

// basis of { x-part : [A | B] (x;w) = 0 } as a lattice in Z^{A.cols}
IntMat stacked_kernel_x(const IntMat& a, const IntMat& b);

// --- rational linear algebra ---

struct Rref {
  RatMat r;
  std::vector<long> pivot_cols;
  long rank = 0;
};

Rref rref(const RatMat& m);

long rank_rat(const RatMat& m);

std::optional<std::vector<Rat>> solve_rational(const RatMat& a, const std::vector<Rat>& b);

// columns form a basis of ker(A) over Q
RatMat rational_kernel_basis(const RatMat& a);

// columns of A at rref pivot positions: a basis of im(A)
RatMat column_space_basis(const RatMat& a);

// rows y with y A = 0, spanning the left null space
RatMat left_nullspace(const RatMat& a);

// |det| for square integer matrices (rational elimination)
Int abs_det(const IntMat& m);

// --- mixed systems:  A x + B y = c  with  x integer, y rational ---

struct MixedSolution {
  std::vector<Int> x;
  std::vector<Rat> y;
  IntMat x_kernel;  // integer directions d: A d lies in im_Q(B); any x + x_kernel z extends to a solution
};

std::optional<MixedSolution> solve_mixed(const RatMat& a, const RatMat& b, const std::vector<Rat>& c);

// recompute the rational part for a shifted integer part
std::vector<Rat> mixed_rational_part(const RatMat& a, const RatMat& b, const std::vector<Rat>& c,
                                     const std::vector<Int>& x);

}  // namespace dcmv
