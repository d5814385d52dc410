#include "dcmv/workspace.hpp"

#include <cassert>

namespace dcmv {

const char* part_name(Part p) {
  switch (p) {
    case Part::X: return "X";
    case Part::A: return "A";
    case Part::B: return "B";
    case Part::D: return "D";
  }
  return "?";
}

namespace {

std::pair<int, int> cache_key(Part p, int k) { return {static_cast<int>(p), k}; }

}  // namespace

const Subcomplex& Workspace::sub(Part p) const {
  switch (p) {
    case Part::A: return dec.a;
    case Part::B: return dec.b;
    case Part::D: return dec.d;
    default: return dec.x;
  }
}

SpaceRef Workspace::space(Part p, int k) {
  auto it = spaces_.find(cache_key(p, k));
  if (it == spaces_.end())
    it = spaces_.emplace(cache_key(p, k), make_space(sub(p), k, coeffs)).first;
  return it->second;
}

const ZCohomology& Workspace::z(Part p, int k) {
  auto it = zs_.find(cache_key(p, k));
  if (it == zs_.end())
    it = zs_.emplace(cache_key(p, k),
                     z_cohomology(space(p, k - 1), space(p, k), space(p, k + 1)))
             .first;
  return it->second;
}

const QCohomology& Workspace::q(Part p, int k) {
  auto it = qs_.find(cache_key(p, k));
  if (it == qs_.end())
    it = qs_.emplace(cache_key(p, k),
                     q_cohomology(space(p, k - 1), space(p, k), space(p, k + 1)))
             .first;
  return it->second;
}

const LatticeData& Workspace::lattice(Part p, int k) {
  auto it = lats_.find(cache_key(p, k));
  if (it == lats_.end()) it = lats_.emplace(cache_key(p, k), make_lattice(z(p, k), q(p, k))).first;
  return it->second;
}

const QzCohomology& Workspace::qz(Part p, int j) {
  auto it = qzs_.find(cache_key(p, j));
  if (it == qzs_.end())
    it = qzs_.emplace(cache_key(p, j), qz_cohomology(space(p, j - 1), space(p, j),
                                                     space(p, j + 1), space(p, j + 2)))
             .first;
  return it->second;
}

std::vector<Int> z_class_restrict(Workspace& ws, Part from, Part to, int k,
                                  const std::vector<Int>& x) {
  ZCochain rep = ws.z(from, k).lift(x);
  return ws.z(to, k).project(z_restrict(rep, ws.space(to, k)));
}

}  // namespace dcmv
