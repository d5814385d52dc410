#pragma once

#include <map>
#include <utility>

#include "dcmv/qz.hpp"

namespace dcmv {

// The four pieces of a decomposition X = A ∪ B, D = A ∩ B.
enum class Part { X, A, B, D };

const char* part_name(Part p);

// Caches every per-(part, degree) structure so repeated map constructions
// share the underlying reductions.
struct Workspace {
  Decomposition dec;
  GradedCoeffs coeffs;

  Workspace(Decomposition d, GradedCoeffs g)
      : dec(std::move(d)), coeffs(std::move(g)) {}

  const Subcomplex& sub(Part p) const;
  SpaceRef space(Part p, int k);
  const ZCohomology& z(Part p, int k);
  const QCohomology& q(Part p, int k);
  const LatticeData& lattice(Part p, int k);
  const QzCohomology& qz(Part p, int j);

 private:
  std::map<std::pair<int, int>, SpaceRef> spaces_;
  std::map<std::pair<int, int>, ZCohomology> zs_;
  std::map<std::pair<int, int>, QCohomology> qs_;
  std::map<std::pair<int, int>, LatticeData> lats_;
  std::map<std::pair<int, int>, QzCohomology> qzs_;
};

// Class-level restriction: coordinates in the source group to coordinates in
// the target group (`to` must be a subcomplex of `from`).
std::vector<Int> z_class_restrict(Workspace& ws, Part from, Part to, int k,
                                  const std::vector<Int>& x);

}  // namespace dcmv
