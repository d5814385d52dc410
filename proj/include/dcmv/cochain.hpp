#pragma once

#include <map>

#include "dcmv/simplicial.hpp"

namespace dcmv {

// one graded coefficient level: Z^rank + sum of Z/t
struct CoeffGroup {
  long rank = 0;
  std::vector<Int> torsion;  // each >= 2

  long ngens() const { return rank + static_cast<long>(torsion.size()); }
  Int order_of(long g) const { return g < rank ? Int(0) : torsion[g - rank]; }
  bool trivial() const { return ngens() == 0; }
};

struct GradedCoeffs {
  std::map<int, CoeffGroup> level;  // degree -> group (finite support)

  CoeffGroup at(int d) const {
    auto it = level.find(d);
    return it == level.end() ? CoeffGroup{} : it->second;
  }
};

// Coordinate layout for graded cochains of total degree k on a subcomplex:
// one block per simplex dimension j carrying the coefficient level k - j.
// "full" coords enumerate every generator; "free" coords only infinite-order
// generators (the rational model: torsion ⊗ Q = 0).
struct CochainSpace {
  Subcomplex s;
  int k = 0;
  GradedCoeffs coeffs;

  struct Block {
    int j;         // simplex dimension
    long nsimp;    // simplices of that dimension in s
    CoeffGroup g;  // coefficient level k - j
    long off_full;
    long off_free;
  };
  std::vector<Block> blocks;
  long dim_full = 0, dim_free = 0;
  std::vector<Int> orders;         // per full coord; 0 on free coords
  std::vector<long> free_of_full;  // -1 on torsion coords
  std::vector<long> full_of_free;

  long coord(const Block& bl, long simp_local, long gen) const {
    return bl.off_full + simp_local * bl.g.ngens() + gen;
  }
  std::string coord_name(long full_idx) const;
};

using SpaceRef = std::shared_ptr<const CochainSpace>;

SpaceRef make_space(const Subcomplex& s, int k, const GradedCoeffs& coeffs);

// integer graded cochain: element of the presentation Z^{dim_full} / (torsion
// order relations); canonical rep has torsion coords in [0, order)
struct ZCochain {
  SpaceRef sp;
  std::vector<Int> v;  // size dim_full
};

// rational graded cochain: free coords only
struct QCochain {
  SpaceRef sp;
  std::vector<Rat> v;  // size dim_free
};

ZCochain z_zero(SpaceRef sp);
QCochain q_zero(SpaceRef sp);

ZCochain z_normalize(ZCochain c);
bool z_is_zero(const ZCochain& c);
bool z_equal(const ZCochain& a, const ZCochain& b);
ZCochain z_add(const ZCochain& a, const ZCochain& b);
ZCochain z_sub(const ZCochain& a, const ZCochain& b);
ZCochain z_neg(const ZCochain& a);
ZCochain z_scale(const ZCochain& a, const Int& f);

bool q_is_zero(const QCochain& c);
QCochain q_add(const QCochain& a, const QCochain& b);
QCochain q_sub(const QCochain& a, const QCochain& b);
QCochain q_neg(const QCochain& a);
QCochain q_scale(const QCochain& a, const Rat& f);

// coefficient map G -> G⊗Q: drop torsion coords
QCochain rho(const ZCochain& c);

// graded coboundary matrices; to must be the degree-(k+1) space on the same
// subcomplex with the same coefficients
IntMat delta_full(const CochainSpace& from, const CochainSpace& to);
RatMat delta_free(const CochainSpace& from, const CochainSpace& to);
// diagonal columns order(i)·e_i for each torsion coord
IntMat relation_cols(const CochainSpace& sp);

ZCochain z_delta(const ZCochain& c, SpaceRef to);
QCochain q_delta(const QCochain& c, SpaceRef to);

// 0/1 matrix mapping full coords of src to full coords of dst, dst.s ⊆ src.s
IntMat restriction_full(const CochainSpace& src, const CochainSpace& dst);

ZCochain z_restrict(const ZCochain& c, SpaceRef dst);
QCochain q_restrict(const QCochain& c, SpaceRef dst);
// extension by zero along dst.s ⊇ c.sp->s
ZCochain z_extend_zero(const ZCochain& c, SpaceRef dst);
QCochain q_extend_zero(const QCochain& c, SpaceRef dst);

// unique cochain on X restricting to a on A and b on B; requires exact
// agreement on D (throws DecompositionError naming the first bad coordinate)
ZCochain z_glue(const ZCochain& a, const ZCochain& b, SpaceRef sx, SpaceRef sd);
QCochain q_glue(const QCochain& a, const QCochain& b, SpaceRef sx, SpaceRef sd);

std::vector<Rat> q_to_full(const QCochain& c);           // pad torsion coords with 0
QCochain q_from_full(SpaceRef sp, std::vector<Rat> full);  // asserts torsion coords are 0

}  // namespace dcmv
