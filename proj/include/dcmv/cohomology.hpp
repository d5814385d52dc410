#pragma once

#include "dcmv/cochain.hpp"
#include "dcmv/fgab.hpp"

namespace dcmv {

// J^k(S; Z-graded coefficients): cocycles-mod-relations quotient coboundaries,
// computed from the degree k-1, k, k+1 cochain spaces
struct ZCohomology {
  SpaceRef spkm1, spk, spk1;
  IntMat zbasis;           // dim_full x z: lattice basis of {x : δx ∈ im(relations)}
  PresentedQuotient pq;    // Z^z / boundary coords
  FgAbGroup group;
  std::vector<ZCochain> reps;  // canonical generator representatives (cocycles)

  bool is_cocycle(const ZCochain& c) const { return z_is_zero(z_delta(c, spk1)); }
  std::vector<Int> project(const ZCochain& c) const;  // class coordinates
  ZCochain lift(const std::vector<Int>& coords) const;
};

ZCohomology z_cohomology(SpaceRef km1, SpaceRef k, SpaceRef k1);

// H^k(S; G⊗Q) on free coordinates
struct QCohomology {
  SpaceRef spkm1, spk, spk1;
  RatMat bbasis;  // basis of im(δ_{k-1})
  RatMat hbasis;  // chosen cocycle reps completing bbasis to the cocycle space
  long hdim = 0;

  bool is_cocycle(const QCochain& c) const { return q_is_zero(q_delta(c, spk1)); }
  std::vector<Rat> project(const QCochain& c) const;
  QCochain lift(const std::vector<Rat>& coords) const;
  // s with δs = c, if c is exact
  std::optional<QCochain> primitive(const QCochain& c) const;
};

QCohomology q_cohomology(SpaceRef km1, SpaceRef k, SpaceRef k1);

// Im(ch) ⊆ H^k(S;Q): full-rank lattice with deterministic basis
struct LatticeData {
  long hdim = 0;
  RatMat basis;                    // hdim x hdim columns
  std::vector<QCochain> witnesses;  // closed cochains representing the basis classes

  // solve basis * x = hcoords (always solvable: full rank)
  std::vector<Rat> lattice_coords(const std::vector<Rat>& hcoords) const;
  bool contains(const std::vector<Rat>& hcoords) const;
};

LatticeData make_lattice(const ZCohomology& zc, const QCohomology& qc);

// ch on class coordinates: columns are images of the integral generators
RatMat ch_matrix(const ZCohomology& zc, const QCohomology& qc);
std::vector<Rat> ch_coords(const ZCohomology& zc, const QCohomology& qc, const std::vector<Int>& x);

// membership of a rational cochain in 𝚲_J: closed with class in Im(ch)
bool in_lambda_j(const QCohomology& qc, const LatticeData& lat, const QCochain& c);

IntMat clear_denominators(const RatMat& m, Int* scale);

}  // namespace dcmv
