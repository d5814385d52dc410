#pragma once

// Random inputs for property tests: small exact values, fixed-seed
// reproducibility, and the coherent-pair construction used to exercise the
// gluing theorem.

#include <random>
#include <utility>
#include <vector>

#include "dcmv/gluing.hpp"

namespace sampling {

using namespace dcmv;

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(unsigned long long s) : rng(s) {}
  long small(long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
  }
  Int small_int() { return Int(small(-9, 9)); }
  Rat small_rat() { return Rat(small(-9, 9)) / small(1, 6); }
  std::vector<Int> int_vec(long n) {
    std::vector<Int> v(n);
    for (auto& x : v) x = small_int();
    return v;
  }
  std::vector<Rat> rat_vec(long n) {
    std::vector<Rat> v(n);
    for (auto& x : v) x = small_rat();
    return v;
  }
};

inline QCochain random_q(Workspace& ws, Part p, int d, Sampler& s) {
  return QCochain{ws.space(p, d), s.rat_vec(ws.space(p, d)->dim_free)};
}

inline DiffClass random_class(Workspace& ws, Part p, int k, Sampler& s) {
  const ZCohomology& z = ws.z(p, k);
  ZCochain c = z.lift(z.group.reduce(s.int_vec(z.group.ngens())));
  ZCochain b{ws.space(p, k - 1), s.int_vec(ws.space(p, k - 1)->dim_full)};
  c = z_normalize(z_add(c, z_delta(b, c.sp)));
  return diff_make(ws, p, k, c, random_q(ws, p, k - 1, s));
}

// an element of 𝚲^{k-1}_J on the given part
inline QCochain lattice_elt(Workspace& ws, Part p, int k, Sampler& s) {
  const LatticeData& lat = ws.lattice(p, k - 1);
  QCochain out = q_delta(random_q(ws, p, k - 2, s), ws.space(p, k - 1));
  for (long j = 0; j < lat.hdim; ++j)
    out = q_add(out, q_scale(lat.witnesses[j], Rat(s.small_int())));
  return out;
}

// a coherent pair: restrictions of a global class, shifted by flat pieces
// whose overlap difference has lattice class
inline std::pair<DiffClass, DiffClass> coherent_pair(Workspace& ws, int k, Sampler& s) {
  DiffClass g = random_class(ws, Part::X, k, s);
  SpaceRef ak1 = ws.space(Part::A, k - 1);
  SpaceRef dk1 = ws.space(Part::D, k - 1);
  QCochain rho_b = random_q(ws, Part::B, k - 1, s);
  QCochain r = random_q(ws, Part::A, k - 1, s);
  QCochain on_d = q_add(q_restrict(rho_b, dk1), lattice_elt(ws, Part::D, k, s));
  QCochain rho_a =
      q_add(q_sub(r, q_extend_zero(q_restrict(r, dk1), ak1)), q_extend_zero(on_d, ak1));
  DiffClass fa = diff_add(restrict_class(ws, Part::A, k, g), i2(ws, Part::A, k, rho_a));
  DiffClass fb = diff_add(restrict_class(ws, Part::B, k, g), i2(ws, Part::B, k, rho_b));
  return {fa, fb};
}

}  // namespace sampling
