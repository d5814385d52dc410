#include "dcmv/mv.hpp"

#include <cassert>
#include <map>
#include <utility>

namespace dcmv {

// ---- integral row -----------------------------------------------------

FgAbGroup mv_ab_group_z(Workspace& ws, int j) {
  return direct_sum(ws.z(Part::A, j).group, ws.z(Part::B, j).group);
}

AbHom mv_sigma_z(Workspace& ws, int j) {
  const ZCohomology& zx = ws.z(Part::X, j);
  const ZCohomology& za = ws.z(Part::A, j);
  const ZCohomology& zb = ws.z(Part::B, j);
  IntMat m(za.group.ngens() + zb.group.ngens(), zx.group.ngens());
  for (long i = 0; i < zx.group.ngens(); ++i) {
    auto ca = za.project(z_restrict(zx.reps[i], ws.space(Part::A, j)));
    auto cb = zb.project(z_restrict(zx.reps[i], ws.space(Part::B, j)));
    m.set_col(i, vec_concat(ca, cb));
  }
  return make_hom(zx.group, mv_ab_group_z(ws, j), std::move(m));
}

AbHom mv_delta_z(Workspace& ws, int j) {
  const ZCohomology& za = ws.z(Part::A, j);
  const ZCohomology& zb = ws.z(Part::B, j);
  const ZCohomology& zd = ws.z(Part::D, j);
  SpaceRef sd = ws.space(Part::D, j);
  IntMat m(zd.group.ngens(), za.group.ngens() + zb.group.ngens());
  for (long i = 0; i < za.group.ngens(); ++i)
    m.set_col(i, zd.project(z_restrict(za.reps[i], sd)));
  for (long i = 0; i < zb.group.ngens(); ++i)
    m.set_col(za.group.ngens() + i, vec_neg(zd.project(z_restrict(zb.reps[i], sd))));
  return make_hom(mv_ab_group_z(ws, j), zd.group, std::move(m));
}

ZCochain mv_d2_cochain(Workspace& ws, int j, const ZCochain& y) {
  assert(y.sp == ws.space(Part::D, j));
  ZCochain ya = z_extend_zero(y, ws.space(Part::A, j));
  ZCochain dya = z_delta(ya, ws.space(Part::A, j + 1));
  // δy vanishes on D modulo the order relations, so the glue is defined
  return z_glue(dya, z_zero(ws.space(Part::B, j + 1)), ws.space(Part::X, j + 1),
                ws.space(Part::D, j + 1));
}

AbHom mv_dstar_z(Workspace& ws, int j) {
  const ZCohomology& zd = ws.z(Part::D, j);
  const ZCohomology& zx1 = ws.z(Part::X, j + 1);
  IntMat m(zx1.group.ngens(), zd.group.ngens());
  for (long i = 0; i < zd.group.ngens(); ++i)
    m.set_col(i, zx1.project(mv_d2_cochain(ws, j, zd.reps[i])));
  return make_hom(zd.group, zx1.group, std::move(m));
}

// ---- rational row -------------------------------------------------------

RatMat mv_sigma_q(Workspace& ws, int j) {
  const QCohomology& qx = ws.q(Part::X, j);
  const QCohomology& qa = ws.q(Part::A, j);
  const QCohomology& qb = ws.q(Part::B, j);
  RatMat m(qa.hdim + qb.hdim, qx.hdim);
  for (long i = 0; i < qx.hdim; ++i) {
    QCochain rep{qx.spk, qx.hbasis.col(i)};
    auto ca = qa.project(q_restrict(rep, ws.space(Part::A, j)));
    auto cb = qb.project(q_restrict(rep, ws.space(Part::B, j)));
    m.set_col(i, vec_concat(ca, cb));
  }
  return m;
}

RatMat mv_delta_q(Workspace& ws, int j) {
  const QCohomology& qa = ws.q(Part::A, j);
  const QCohomology& qb = ws.q(Part::B, j);
  const QCohomology& qd = ws.q(Part::D, j);
  SpaceRef sd = ws.space(Part::D, j);
  RatMat m(qd.hdim, qa.hdim + qb.hdim);
  for (long i = 0; i < qa.hdim; ++i)
    m.set_col(i, qd.project(q_restrict(QCochain{qa.spk, qa.hbasis.col(i)}, sd)));
  for (long i = 0; i < qb.hdim; ++i)
    m.set_col(qa.hdim + i,
              vec_neg(qd.project(q_restrict(QCochain{qb.spk, qb.hbasis.col(i)}, sd))));
  return m;
}

QCochain mv_d3_cochain(Workspace& ws, int j, const QCochain& y) {
  assert(y.sp == ws.space(Part::D, j));
  assert(q_is_zero(q_delta(y, ws.space(Part::D, j + 1))));
  QCochain ya = q_extend_zero(y, ws.space(Part::A, j));
  QCochain dya = q_delta(ya, ws.space(Part::A, j + 1));
  return q_glue(dya, q_zero(ws.space(Part::B, j + 1)), ws.space(Part::X, j + 1),
                ws.space(Part::D, j + 1));
}

RatMat mv_dstar_q(Workspace& ws, int j) {
  const QCohomology& qd = ws.q(Part::D, j);
  const QCohomology& qx1 = ws.q(Part::X, j + 1);
  RatMat m(qx1.hdim, qd.hdim);
  for (long i = 0; i < qd.hdim; ++i)
    m.set_col(i, qx1.project(mv_d3_cochain(ws, j, QCochain{qd.spk, qd.hbasis.col(i)})));
  return m;
}

// ---- rational-mod-integral row ------------------------------------------

ConePair mv_d1_pair(Workspace& ws, int j, const ConePair& p) {
  assert(p.m.sp == ws.space(Part::D, j + 1));
  assert(cone_valid(p, ws.space(Part::D, j + 2)));
  ZCochain ma = z_extend_zero(p.m, ws.space(Part::A, j + 1));
  QCochain qa = q_extend_zero(p.q, ws.space(Part::A, j));
  ZCochain mx = z_glue(z_neg(z_delta(ma, ws.space(Part::A, j + 2))),
                       z_zero(ws.space(Part::B, j + 2)), ws.space(Part::X, j + 2),
                       ws.space(Part::D, j + 2));
  QCochain qx = q_glue(q_add(rho(ma), q_delta(qa, ws.space(Part::A, j + 1))),
                       q_zero(ws.space(Part::B, j + 1)), ws.space(Part::X, j + 1),
                       ws.space(Part::D, j + 1));
  return ConePair{std::move(mx), std::move(qx)};
}

QzCoords QzHomData::apply(const QzCoords& x) const {
  assert(static_cast<long>(x.fracs.size()) == sdom);
  assert(static_cast<long>(x.fin.size()) == tdom.ngens());
  QzCoords out;
  out.fracs.assign(scod, Rat(0));
  for (long i = 0; i < scod; ++i) {
    Rat acc(0);
    for (long l = 0; l < sdom; ++l)
      if (tlat(i, l) != 0) acc += Rat(tlat(i, l)) * x.fracs[l];
    for (long t = 0; t < tdom.ngens(); ++t)
      if (fin_fracs(i, t) != 0 && x.fin[t] != 0) acc += fin_fracs(i, t) * Rat(x.fin[t]);
    out.fracs[i] = frac(acc);
  }
  std::vector<Int> f(tcod.ngens(), Int(0));
  for (long i = 0; i < tcod.ngens(); ++i)
    for (long t = 0; t < tdom.ngens(); ++t) f[i] += fin_fin(i, t) * x.fin[t];
  out.fin = tcod.reduce(f);
  return out;
}

namespace {

ConePair restrict_pair(Workspace& ws, const ConePair& p, Part to, int j) {
  return ConePair{z_restrict(p.m, ws.space(to, j + 1)), q_restrict(p.q, ws.space(to, j))};
}

// Image class of a pair whose integral component vanishes: integer
// coordinates against the codomain ch-lattice (restriction and connecting
// maps carry lattice classes to lattice classes).
std::vector<Int> divisible_image_coords(const QzCohomology& cod, const ConePair& img) {
  assert(z_is_zero(img.m));
  auto lc = cod.lat.lattice_coords(cod.qc.project(img.q));
  std::vector<Int> out(lc.size());
  for (size_t i = 0; i < lc.size(); ++i) {
    assert(is_integer(lc[i]));
    out[i] = num(lc[i]);
  }
  return out;
}

QzCoords qz_concat(const QzCoords& a, const QzCoords& b) {
  return QzCoords{vec_concat(a.fracs, b.fracs), vec_concat(a.fin, b.fin)};
}

void set_fin_col(QzHomData& h, long t, const QzCoords& c) {
  assert(static_cast<long>(c.fracs.size()) == h.scod);
  assert(static_cast<long>(c.fin.size()) == h.tcod.ngens());
  for (long i = 0; i < h.scod; ++i) h.fin_fracs(i, t) = c.fracs[i];
  for (long i = 0; i < h.tcod.ngens(); ++i) h.fin_fin(i, t) = c.fin[i];
}

QzHomData qz_hom_shell(const QzCohomology& dom, const FgAbGroup& tcod, long scod) {
  QzHomData h;
  h.sdom = dom.div_rank();
  h.scod = scod;
  h.tdom = dom.tor;
  h.tcod = tcod;
  h.tlat = IntMat(h.scod, h.sdom);
  h.fin_fracs = RatMat(h.scod, h.tdom.ngens());
  h.fin_fin = IntMat(h.tcod.ngens(), h.tdom.ngens());
  return h;
}

// every finite generator image must be killed by the generator order
bool qz_hom_well_formed(const QzHomData& h) {
  for (long t = 0; t < h.tdom.ngens(); ++t) {
    const Int& e = h.tdom.orders[t];
    if (e == 0) return false;
    for (long i = 0; i < h.scod; ++i)
      if (!is_integer(h.fin_fracs(i, t) * Rat(e))) return false;
    std::vector<Int> fi(h.tcod.ngens());
    for (long i = 0; i < h.tcod.ngens(); ++i) fi[i] = h.fin_fin(i, t) * e;
    if (!h.tcod.is_zero(fi)) return false;
  }
  return true;
}

}  // namespace

QzHomData mv_sigma_qz(Workspace& ws, int j) {
  const QzCohomology& gx = ws.qz(Part::X, j);
  const QzCohomology& ga = ws.qz(Part::A, j);
  const QzCohomology& gb = ws.qz(Part::B, j);
  QzHomData h = qz_hom_shell(gx, direct_sum(ga.tor, gb.tor), ga.div_rank() + gb.div_rank());
  for (long i = 0; i < h.sdom; ++i) {
    ConePair w = gx.divisible_witness(i);
    h.tlat.set_col(i, vec_concat(divisible_image_coords(ga, restrict_pair(ws, w, Part::A, j)),
                                 divisible_image_coords(gb, restrict_pair(ws, w, Part::B, j))));
  }
  for (long t = 0; t < h.tdom.ngens(); ++t) {
    QzCoords ca = qz_canonicalize(ga, restrict_pair(ws, gx.sections[t], Part::A, j));
    QzCoords cb = qz_canonicalize(gb, restrict_pair(ws, gx.sections[t], Part::B, j));
    set_fin_col(h, t, qz_concat(ca, cb));
  }
  assert(qz_hom_well_formed(h));
  return h;
}

QzHomData mv_delta_qz(Workspace& ws, int j) {
  const QzCohomology& ga = ws.qz(Part::A, j);
  const QzCohomology& gb = ws.qz(Part::B, j);
  const QzCohomology& gd = ws.qz(Part::D, j);
  QzHomData h;
  h.sdom = ga.div_rank() + gb.div_rank();
  h.scod = gd.div_rank();
  h.tdom = direct_sum(ga.tor, gb.tor);
  h.tcod = gd.tor;
  h.tlat = IntMat(h.scod, h.sdom);
  h.fin_fracs = RatMat(h.scod, h.tdom.ngens());
  h.fin_fin = IntMat(h.tcod.ngens(), h.tdom.ngens());
  for (long i = 0; i < ga.div_rank(); ++i)
    h.tlat.set_col(
        i, divisible_image_coords(gd, restrict_pair(ws, ga.divisible_witness(i), Part::D, j)));
  for (long i = 0; i < gb.div_rank(); ++i)
    h.tlat.set_col(ga.div_rank() + i,
                   vec_neg(divisible_image_coords(
                       gd, restrict_pair(ws, gb.divisible_witness(i), Part::D, j))));
  for (long t = 0; t < ga.tor.ngens(); ++t)
    set_fin_col(h, t, qz_canonicalize(gd, restrict_pair(ws, ga.sections[t], Part::D, j)));
  for (long t = 0; t < gb.tor.ngens(); ++t)
    set_fin_col(h, ga.tor.ngens() + t,
                qz_canonicalize(gd, cone_neg(restrict_pair(ws, gb.sections[t], Part::D, j))));
  assert(qz_hom_well_formed(h));
  return h;
}

QzHomData mv_dstar_qz(Workspace& ws, int j) {
  const QzCohomology& gd = ws.qz(Part::D, j);
  const QzCohomology& gx1 = ws.qz(Part::X, j + 1);
  QzHomData h = qz_hom_shell(gd, gx1.tor, gx1.div_rank());
  for (long i = 0; i < h.sdom; ++i)
    h.tlat.set_col(i, divisible_image_coords(gx1, mv_d1_pair(ws, j, gd.divisible_witness(i))));
  for (long t = 0; t < h.tdom.ngens(); ++t)
    set_fin_col(h, t, qz_canonicalize(gx1, mv_d1_pair(ws, j, gd.sections[t])));
  assert(qz_hom_well_formed(h));
  return h;
}

bool qz_exact_at(const QzHomData& f, const QzHomData& g, std::string* note) {
  assert(f.scod == g.sdom);
  assert(f.tcod == g.tdom);
  const long s2 = f.scod, s3 = g.scod;
  const long t1 = f.tdom.ngens(), t2 = f.tcod.ngens(), t3 = g.tcod.ngens();

  if (!mul(g.tlat, f.tlat).is_zero()) {
    *note = "composite nonzero on the divisible part";
    return false;
  }
  for (long t = 0; t < t1; ++t) {
    QzCoords im{f.fin_fracs.col(t), f.fin_fin.col(t)};
    if (!qz_is_zero(g.apply(im))) {
      *note = "composite nonzero on finite generator " + std::to_string(t);
      return false;
    }
  }

  // The maximal divisible subgroups of Im(f) and Ker(g) are full (Q/Z)-powers
  // of rank rk(tlat_f) and s2 - rk(tlat_g); contained and of equal rank means
  // equal, because an (m-torsion subgroup) count matches for every m.
  if (rank_rat(to_rat(f.tlat)) != s2 - rank_rat(to_rat(g.tlat))) {
    *note = "divisible parts of image and kernel differ in rank";
    return false;
  }

  // Ker(g) modulo its divisible part is finite.  Writing x = V y against the
  // Smith form U tlat_g V = diag(d), the fractional directions V.col(i)/d_i
  // together with solutions over the finite generators span it.
  SnfResult sn = smith_normal_form(g.tlat);
  const long r = sn.rank;

  struct Gen {
    std::vector<Rat> fracs;
    std::vector<Int> fin;
  };
  std::vector<Gen> gens;

  for (long i = 0; i < r; ++i) {
    if (sn.diag(i) == 1) continue;
    std::vector<Rat> x(s2, Rat(0));
    for (long l = 0; l < s2; ++l) x[l] = frac(Rat(sn.V(l, i)) / Rat(sn.diag(i)));
    gens.push_back({std::move(x), std::vector<Int>(t2, Int(0))});
  }

  if (t2 > 0) {
    RatMat fprime = mul(to_rat(sn.U), g.fin_fracs);
    // integral conditions on a finite-part vector t: rows of the transformed
    // divisible block beyond the rank need fprime_i t ∈ Z, and the finite
    // block needs fin_fin t ≡ 0 against the codomain orders
    IntMat acond(s3 - r + t3, t2);
    IntMat bdiag(s3 - r + t3, s3 - r + t3);
    for (long i = r; i < s3; ++i) {
      Int qi(1);
      for (long c = 0; c < t2; ++c) qi = lcm_int(qi, den(fprime(i, c)));
      for (long c = 0; c < t2; ++c) acond(i - r, c) = num(fprime(i, c) * Rat(qi));
      bdiag(i - r, i - r) = qi;
    }
    for (long i = 0; i < t3; ++i) {
      for (long c = 0; c < t2; ++c) acond(s3 - r + i, c) = g.fin_fin(i, c);
      bdiag(s3 - r + i, s3 - r + i) = g.tcod.orders[i];
    }
    IntMat lam = stacked_kernel_x(acond, bdiag);
    for (long b = 0; b < lam.cols; ++b) {
      std::vector<Int> tb = lam.col(b);
      std::vector<Rat> x(s2, Rat(0));
      for (long l = 0; l < s2; ++l) {
        Rat acc(0);
        for (long i = 0; i < r; ++i) {
          Rat dot(0);
          for (long c = 0; c < t2; ++c) dot += fprime(i, c) * Rat(tb[c]);
          acc -= Rat(sn.V(l, i)) * dot / Rat(sn.diag(i));
        }
        x[l] = frac(acc);
      }
      std::vector<Int> fin = f.tcod.reduce(tb);
      if (vec_is_zero(x) && vec_is_zero(fin)) continue;
      gens.push_back({std::move(x), std::move(fin)});
    }
  }

  if (gens.empty()) return true;

  // Membership in Im(f): T_f y + F_f u + k = x over Q with k integral, and
  // H_f u ≡ fin against the middle orders, solved as one mixed system.
  RatMat top = hstack(hstack(f.fin_fracs, to_rat(IntMat::identity(s2))), RatMat(s2, t2));
  RatMat bot = hstack(hstack(to_rat(f.fin_fin), RatMat(t2, s2)), to_rat(order_relations(f.tcod)));
  RatMat a = vstack(top, bot);
  RatMat bmat = vstack(to_rat(f.tlat), RatMat(t2, f.sdom));
  for (const auto& gen : gens) {
    std::vector<Rat> c = vec_concat(gen.fracs, to_rat(gen.fin));
    if (!solve_mixed(a, bmat, c)) {
      *note = "kernel generator outside the image";
      return false;
    }
  }
  return true;
}

namespace {

struct SignMatch {
  bool ok = false;
  int sign = 0;
};

SignMatch match_sign_z(const FgAbGroup& g, const std::vector<std::vector<Int>>& lhs,
                       const std::vector<std::vector<Int>>& rhs) {
  bool plus = true, minus = true;
  for (size_t i = 0; i < lhs.size(); ++i) {
    if (!g.is_zero(vec_sub(lhs[i], rhs[i]))) plus = false;
    if (!g.is_zero(vec_add(lhs[i], rhs[i]))) minus = false;
  }
  if (plus) return {true, 1};
  if (minus) return {true, -1};
  return {false, 0};
}

SignMatch match_sign_q(const RatMat& lhs, const RatMat& rhs) {
  if (sub(lhs, rhs).is_zero()) return {true, 1};
  if (add(lhs, rhs).is_zero()) return {true, -1};
  return {false, 0};
}

std::string sign_note(int sign) { return sign >= 0 ? "sign +1" : "sign -1"; }

RatMat rat_block_diag(const RatMat& a, const RatMat& b) {
  RatMat z(a.rows + b.rows, a.cols + b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) z(i, j) = a(i, j);
  for (long i = 0; i < b.rows; ++i)
    for (long j = 0; j < b.cols; ++j) z(a.rows + i, a.cols + j) = b(i, j);
  return z;
}

std::vector<ConePair> qz_generator_pairs(const QzCohomology& g) {
  std::vector<ConePair> gens;
  for (long i = 0; i < g.div_rank(); ++i) gens.push_back(g.divisible_witness(i));
  for (const auto& s : g.sections) gens.push_back(s);
  return gens;
}

}  // namespace

std::vector<CheckResult> verify_diagram2(Workspace& ws, int k, Diagram2Fault fault) {
  std::vector<CheckResult> out;
  auto add = [&out](std::string name, bool pass, std::string note = "") {
    out.push_back({std::move(name), pass, std::move(note)});
  };
  auto deg = [](int j) { return std::to_string(j); };

  // ratmod row lives one degree down; int and rat rows run k-1 → k
  QzHomData sig1_lo = mv_sigma_qz(ws, k - 2);
  QzHomData del1_lo = mv_delta_qz(ws, k - 2);
  QzHomData ds1 = mv_dstar_qz(ws, k - 2);
  QzHomData sig1_hi = mv_sigma_qz(ws, k - 1);
  QzHomData del1_hi = mv_delta_qz(ws, k - 1);

  AbHom sig2_lo = mv_sigma_z(ws, k - 1);
  AbHom del2_lo = mv_delta_z(ws, k - 1);
  AbHom ds2 = mv_dstar_z(ws, k - 1);
  AbHom sig2_hi = mv_sigma_z(ws, k);
  AbHom del2_hi = mv_delta_z(ws, k);

  if (fault == Diagram2Fault::flip_delta_entry) {
    bool flipped = false;
    for (long i = 0; i < del2_lo.m.rows && !flipped; ++i)
      for (long j = 0; j < del2_lo.m.cols && !flipped; ++j)
        if (del2_lo.m(i, j) != 0) {
          del2_lo.m(i, j) = -del2_lo.m(i, j);
          flipped = true;
        }
    add("fault: flipped one difference-map entry", true,
        flipped ? "" : "difference map is zero in this degree; fault has no effect");
  }

  RatMat sig3_lo = mv_sigma_q(ws, k - 1);
  RatMat del3_lo = mv_delta_q(ws, k - 1);
  RatMat ds3 = mv_dstar_q(ws, k - 1);
  RatMat sig3_hi = mv_sigma_q(ws, k);
  RatMat del3_hi = mv_delta_q(ws, k);

  auto qz_spot = [&](const std::string& name, const QzHomData& f, const QzHomData& g) {
    std::string note;
    bool ok = qz_exact_at(f, g, &note);
    add(name, ok, note);
  };
  qz_spot("ratmod row exact at AB^" + deg(k - 2), sig1_lo, del1_lo);
  qz_spot("ratmod row exact at D^" + deg(k - 2), del1_lo, ds1);
  qz_spot("ratmod row exact at X^" + deg(k - 1), ds1, sig1_hi);
  qz_spot("ratmod row exact at AB^" + deg(k - 1), sig1_hi, del1_hi);

  auto z_exact = [](const AbHom& f, const AbHom& g) {
    assert(f.cod == g.dom);
    return subgroup_equal(g.dom, hom_image(f).gens, hom_kernel(g).gens);
  };
  add("int row exact at AB^" + deg(k - 1), z_exact(sig2_lo, del2_lo));
  add("int row exact at D^" + deg(k - 1), z_exact(del2_lo, ds2));
  add("int row exact at X^" + deg(k), z_exact(ds2, sig2_hi));
  add("int row exact at AB^" + deg(k), z_exact(sig2_hi, del2_hi));

  auto q_exact = [](const RatMat& f, const RatMat& g) {
    assert(f.rows == g.cols);
    return mul(g, f).is_zero() && rank_rat(f) + rank_rat(g) == g.cols;
  };
  add("rat row exact at AB^" + deg(k - 1), q_exact(sig3_lo, del3_lo));
  add("rat row exact at D^" + deg(k - 1), q_exact(del3_lo, ds3));
  add("rat row exact at X^" + deg(k), q_exact(ds3, sig3_hi));
  add("rat row exact at AB^" + deg(k), q_exact(sig3_hi, del3_hi));

  // connecting squares between the ratmod and int rows, checked on group
  // generators (sections and lattice witnesses)
  {
    const QzCohomology& ga = ws.qz(Part::A, k - 2);
    const QzCohomology& gb = ws.qz(Part::B, k - 2);
    const QzCohomology& gd = ws.qz(Part::D, k - 2);
    long na = ws.z(Part::A, k - 1).group.ngens();
    long nb = ws.z(Part::B, k - 1).group.ngens();
    std::vector<std::vector<Int>> lhs, rhs;
    for (const auto& p : qz_generator_pairs(ga)) {
      lhs.push_back(qz_b(gd, restrict_pair(ws, p, Part::D, k - 2)));
      rhs.push_back(del2_lo.apply(vec_concat(qz_b(ga, p), std::vector<Int>(nb, Int(0)))));
    }
    for (const auto& p : qz_generator_pairs(gb)) {
      lhs.push_back(qz_b(gd, cone_neg(restrict_pair(ws, p, Part::D, k - 2))));
      rhs.push_back(del2_lo.apply(vec_concat(std::vector<Int>(na, Int(0)), qz_b(gb, p))));
    }
    auto m = match_sign_z(del2_lo.cod, lhs, rhs);
    add("square b/delta^" + deg(k - 2), m.ok, m.ok ? sign_note(m.sign) : "");
  }
  {
    const QzCohomology& gd = ws.qz(Part::D, k - 2);
    const QzCohomology& gx1 = ws.qz(Part::X, k - 1);
    std::vector<std::vector<Int>> lhs, rhs;
    for (const auto& p : qz_generator_pairs(gd)) {
      lhs.push_back(qz_b(gx1, mv_d1_pair(ws, k - 2, p)));
      rhs.push_back(ds2.apply(qz_b(gd, p)));
    }
    auto m = match_sign_z(ds2.cod, lhs, rhs);
    add("square b/dstar^" + deg(k - 2), m.ok, m.ok ? sign_note(m.sign) : "");
  }
  {
    const QzCohomology& gx = ws.qz(Part::X, k - 1);
    const QzCohomology& ga = ws.qz(Part::A, k - 1);
    const QzCohomology& gb = ws.qz(Part::B, k - 1);
    std::vector<std::vector<Int>> lhs, rhs;
    for (const auto& p : qz_generator_pairs(gx)) {
      lhs.push_back(vec_concat(qz_b(ga, restrict_pair(ws, p, Part::A, k - 1)),
                               qz_b(gb, restrict_pair(ws, p, Part::B, k - 1))));
      rhs.push_back(sig2_hi.apply(qz_b(gx, p)));
    }
    auto m = match_sign_z(sig2_hi.cod, lhs, rhs);
    add("square b/sigma^" + deg(k - 1), m.ok, m.ok ? sign_note(m.sign) : "");
  }

  // curvature-character squares between the int and rat rows, as identities
  // of generator-image matrices
  RatMat ch_x_lo = ch_matrix(ws.z(Part::X, k - 1), ws.q(Part::X, k - 1));
  RatMat ch_x_hi = ch_matrix(ws.z(Part::X, k), ws.q(Part::X, k));
  RatMat ch_d_lo = ch_matrix(ws.z(Part::D, k - 1), ws.q(Part::D, k - 1));
  RatMat ch_ab_lo = rat_block_diag(ch_matrix(ws.z(Part::A, k - 1), ws.q(Part::A, k - 1)),
                                   ch_matrix(ws.z(Part::B, k - 1), ws.q(Part::B, k - 1)));
  RatMat ch_ab_hi = rat_block_diag(ch_matrix(ws.z(Part::A, k), ws.q(Part::A, k)),
                                   ch_matrix(ws.z(Part::B, k), ws.q(Part::B, k)));
  {
    auto m = match_sign_q(mul(ch_ab_lo, to_rat(sig2_lo.m)), mul(sig3_lo, ch_x_lo));
    add("square ch/sigma^" + deg(k - 1), m.ok, m.ok ? sign_note(m.sign) : "");
  }
  {
    auto m = match_sign_q(mul(ch_d_lo, to_rat(del2_lo.m)), mul(del3_lo, ch_ab_lo));
    add("square ch/delta^" + deg(k - 1), m.ok, m.ok ? sign_note(m.sign) : "");
  }
  {
    auto m = match_sign_q(mul(ch_x_hi, to_rat(ds2.m)), mul(ds3, ch_d_lo));
    add("square ch/dstar^" + deg(k - 1), m.ok, m.ok ? sign_note(m.sign) : "");
  }
  {
    auto m = match_sign_q(mul(ch_ab_hi, to_rat(sig2_hi.m)), mul(sig3_hi, ch_x_hi));
    add("square ch/sigma^" + deg(k), m.ok, m.ok ? sign_note(m.sign) : "");
  }

  return out;
}

}  // namespace dcmv
