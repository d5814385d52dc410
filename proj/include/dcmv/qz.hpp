#pragma once

#include "dcmv/cohomology.hpp"

namespace dcmv {

// J^j(S; G⊗Q/Z) via the mapping cone of ρ: integral cochains → rational
// cochains.  A degree-j element is a pair (m, q) with m integral of degree
// j+1 and q rational of degree j satisfying δm = 0 and ρ(m) + δq = 0; the
// cone coboundary of (m', q') is (−δm', ρ(m') + δq').
struct ConePair {
  ZCochain m;
  QCochain q;
};

ConePair cone_zero(SpaceRef spj1, SpaceRef spj);
ConePair cone_add(const ConePair& a, const ConePair& b);
ConePair cone_sub(const ConePair& a, const ConePair& b);
ConePair cone_neg(const ConePair& a);
ConePair cone_scale(const ConePair& a, const Int& f);
// δm = 0 and ρ(m) + δq = 0; spj2 receives δm
bool cone_valid(const ConePair& p, SpaceRef spj2);

// canonical coordinates: divisible part as fractions in [0,1) against the
// ch-lattice basis of H^j(S;Q), finite part over the torsion generators of
// J^{j+1}(S;Z)
struct QzCoords {
  std::vector<Rat> fracs;
  std::vector<Int> fin;

  bool operator==(const QzCoords& o) const = default;
};

// The group J^j(S;G⊗Q/Z) ≅ (Q/Z)^{div_rank} ⊕ Tor J^{j+1}(S;Z).  sections[i]
// is a cone cocycle of order tor.orders[i] hitting torsion generator i under
// the connecting map; the divisible part is hit by (0, lattice witness).
struct QzCohomology {
  SpaceRef spjm1, spj, spj1, spj2;
  ZCohomology zplus;  // J^{j+1}(S;Z)
  QCohomology qc;     // H^j(S;Q)
  LatticeData lat;
  std::vector<long> tor_idx;  // indices of finite-order generators in zplus.group
  FgAbGroup tor;
  std::vector<ConePair> sections;

  long div_rank() const { return lat.hdim; }
  QzCoords zero() const;
  ConePair divisible_witness(long i) const { return ConePair{z_zero(spj1), lat.witnesses[i]}; }
};

QzCohomology qz_cohomology(SpaceRef jm1, SpaceRef j, SpaceRef j1, SpaceRef j2);

// faithful: zero coordinates ⇔ the pair is a cone coboundary
QzCoords qz_canonicalize(const QzCohomology& g, const ConePair& p);
ConePair qz_rep(const QzCohomology& g, const QzCoords& c);

QzCoords qz_reduce(const QzCohomology& g, QzCoords c);
QzCoords qz_coords_add(const QzCohomology& g, const QzCoords& a, const QzCoords& b);
QzCoords qz_coords_sub(const QzCohomology& g, const QzCoords& a, const QzCoords& b);
QzCoords qz_coords_scale(const QzCohomology& g, const QzCoords& a, const Int& f);
bool qz_is_zero(const QzCoords& c);
bool qz_equal(const QzCohomology& g, const ConePair& a, const ConePair& b);

// p: H^j(S;Q) → J^j(S;Q/Z), on a closed representative
ConePair qz_p(const QzCohomology& g, const QCochain& s);
// connecting map to J^{j+1}(S;Z): the class of the integral component
std::vector<Int> qz_b(const QzCohomology& g, const ConePair& p);

// "(Q/Z)^2 + Z/4", "(Q/Z)", "0", ...
std::string qz_pretty(const QzCohomology& g);

}  // namespace dcmv
