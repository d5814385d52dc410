#pragma once

#include "dcmv/mat.hpp"

namespace dcmv {

// S = U * M * V with U, V unimodular; S diagonal, nonnegative,
// S(0,0) | S(1,1) | ... ; rank = number of nonzero diagonal entries.
struct SnfResult {
  IntMat S, U, Uinv, V, Vinv;
  long rank = 0;

  Int diag(long i) const {
    if (i < S.rows && i < S.cols) return S(i, i);
    return Int(0);
  }
};

SnfResult smith_normal_form(const IntMat& m);

// sanity check used by tests: S == U*M*V and U*Uinv == I, V*Vinv == I
bool snf_consistent(const IntMat& m, const SnfResult& r);

}  // namespace dcmv
