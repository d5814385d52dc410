#include "dcmv/cohomology.hpp"

namespace dcmv {

std::vector<Int> ZCohomology::project(const ZCochain& c) const {
  auto s = solve_integer(zbasis, c.v);
  assert(s.has_value());  // c must be a cocycle
  return pq.coords(*s);
}

ZCochain ZCohomology::lift(const std::vector<Int>& coords) const {
  return z_normalize(ZCochain{spk, mul(zbasis, pq.rep(coords))});
}

ZCohomology z_cohomology(SpaceRef km1, SpaceRef k, SpaceRef k1) {
  ZCohomology zc;
  zc.spkm1 = km1;
  zc.spk = k;
  zc.spk1 = k1;
  // cocycles: δx lands in the torsion relation lattice of degree k+1
  zc.zbasis = stacked_kernel_x(delta_full(*k, *k1), relation_cols(*k1));
  // boundaries: coboundaries plus the degree-k relations, in cocycle coords
  IntMat bgens = hstack(delta_full(*km1, *k), relation_cols(*k));
  IntMat q(zc.zbasis.cols, bgens.cols);
  for (long j = 0; j < bgens.cols; ++j) {
    auto coords = solve_integer(zc.zbasis, bgens.col(j));
    assert(coords.has_value());  // boundaries are cocycles
    q.set_col(j, *coords);
  }
  zc.pq = quotient_presentation(zc.zbasis.cols, q);
  zc.group = zc.pq.group;
  for (long i = 0; i < zc.group.ngens(); ++i) {
    std::vector<Int> e(zc.group.ngens(), Int(0));
    e[i] = 1;
    zc.reps.push_back(zc.lift(e));
  }
  return zc;
}

std::vector<Rat> QCohomology::project(const QCochain& c) const {
  auto s = solve_rational(hstack(bbasis, hbasis), c.v);
  assert(s.has_value());  // c must be a cocycle
  return std::vector<Rat>(s->begin() + bbasis.cols, s->end());
}

QCochain QCohomology::lift(const std::vector<Rat>& coords) const {
  return QCochain{spk, mul(hbasis, coords)};
}

std::optional<QCochain> QCohomology::primitive(const QCochain& c) const {
  auto s = solve_rational(delta_free(*spkm1, *spk), c.v);
  if (!s) return std::nullopt;
  return QCochain{spkm1, *s};
}

QCohomology q_cohomology(SpaceRef km1, SpaceRef k, SpaceRef k1) {
  QCohomology qc;
  qc.spkm1 = km1;
  qc.spk = k;
  qc.spk1 = k1;
  qc.bbasis = column_space_basis(delta_free(*km1, *k));
  RatMat zq = rational_kernel_basis(delta_free(*k, *k1));
  // complete the boundary basis to the cocycle space, first independent first
  RatMat acc = qc.bbasis;
  qc.hbasis = RatMat(k->dim_free, 0);
  long r = rank_rat(acc);
  for (long j = 0; j < zq.cols; ++j) {
    RatMat cand = hstack(acc, from_col(zq.col(j)));
    if (rank_rat(cand) > r) {
      acc = cand;
      qc.hbasis = hstack(qc.hbasis, from_col(zq.col(j)));
      ++r;
    }
  }
  qc.hdim = qc.hbasis.cols;
  return qc;
}

IntMat clear_denominators(const RatMat& m, Int* scale) {
  Int l(1);
  for (const auto& e : m.a) l = lcm_int(l, den(e));
  if (l == 0) l = 1;
  IntMat z(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) z.a[i] = num(m.a[i] * Rat(l));
  *scale = l;
  return z;
}

std::vector<Rat> LatticeData::lattice_coords(const std::vector<Rat>& hcoords) const {
  auto x = solve_rational(basis, hcoords);
  assert(x.has_value());  // basis is full rank
  return *x;
}

bool LatticeData::contains(const std::vector<Rat>& hcoords) const {
  for (const auto& e : lattice_coords(hcoords))
    if (!is_integer(e)) return false;
  return true;
}

LatticeData make_lattice(const ZCohomology& zc, const QCohomology& qc) {
  LatticeData lat;
  lat.hdim = qc.hdim;
  RatMat gens = ch_matrix(zc, qc);
  Int denom(1);
  IntMat scaled = clear_denominators(gens, &denom);
  IntMat b = lattice_basis(scaled);
  // Im(ch) is a spanning lattice: full rank in H^k(·;Q)
  assert(b.cols == qc.hdim);
  lat.basis = scale(to_rat(b), Rat(1) / Rat(denom));
  for (long j = 0; j < lat.basis.cols; ++j) lat.witnesses.push_back(qc.lift(lat.basis.col(j)));
  return lat;
}

RatMat ch_matrix(const ZCohomology& zc, const QCohomology& qc) {
  RatMat m(qc.hdim, zc.group.ngens());
  for (long j = 0; j < zc.group.ngens(); ++j) m.set_col(j, qc.project(rho(zc.reps[j])));
  return m;
}

std::vector<Rat> ch_coords(const ZCohomology& zc, const QCohomology& qc, const std::vector<Int>& x) {
  return qc.project(rho(zc.lift(x)));
}

bool in_lambda_j(const QCohomology& qc, const LatticeData& lat, const QCochain& c) {
  if (!qc.is_cocycle(c)) return false;
  return lat.contains(qc.project(c));
}

}  // namespace dcmv
