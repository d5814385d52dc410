#include "dcmv/qz.hpp"

namespace dcmv {

ConePair cone_zero(SpaceRef spj1, SpaceRef spj) { return {z_zero(spj1), q_zero(spj)}; }

ConePair cone_add(const ConePair& a, const ConePair& b) {
  return {z_add(a.m, b.m), q_add(a.q, b.q)};
}

ConePair cone_sub(const ConePair& a, const ConePair& b) {
  return {z_sub(a.m, b.m), q_sub(a.q, b.q)};
}

ConePair cone_neg(const ConePair& a) { return {z_neg(a.m), q_neg(a.q)}; }

ConePair cone_scale(const ConePair& a, const Int& f) {
  return {z_scale(a.m, f), q_scale(a.q, Rat(f))};
}

bool cone_valid(const ConePair& p, SpaceRef spj2) {
  if (!z_is_zero(z_delta(p.m, spj2))) return false;
  return q_is_zero(q_add(rho(p.m), q_delta(p.q, p.m.sp)));
}

QzCoords QzCohomology::zero() const {
  return {std::vector<Rat>(div_rank(), Rat(0)), tor.zero()};
}

QzCohomology qz_cohomology(SpaceRef jm1, SpaceRef j, SpaceRef j1, SpaceRef j2) {
  QzCohomology g;
  g.spjm1 = jm1;
  g.spj = j;
  g.spj1 = j1;
  g.spj2 = j2;
  g.zplus = z_cohomology(j, j1, j2);
  g.qc = q_cohomology(jm1, j, j1);
  ZCohomology zj = z_cohomology(jm1, j, j1);
  g.lat = make_lattice(zj, g.qc);
  for (long i = 0; i < g.zplus.group.ngens(); ++i)
    if (g.zplus.group.orders[i] != 0) {
      g.tor_idx.push_back(i);
      g.tor.orders.push_back(g.zplus.group.orders[i]);
    }
  IntMat below = hstack(delta_full(*j, *j1), relation_cols(*j1));
  for (size_t t = 0; t < g.tor_idx.size(); ++t) {
    const Int& e = g.tor.orders[t];
    const ZCochain& c = g.zplus.reps[g.tor_idx[t]];
    // e·[c] = 0, so e·c = δb + relations; the section is (c, −ρ(b)/e)
    auto sol = solve_integer(below, vec_scale(c.v, e));
    assert(sol.has_value());
    std::vector<Int> b(sol->begin(), sol->begin() + j->dim_full);
    QCochain qb = rho(ZCochain{j, b});
    g.sections.push_back(ConePair{c, q_scale(qb, Rat(-1) / Rat(e))});
  }
  return g;
}

QzCoords qz_canonicalize(const QzCohomology& g, const ConePair& p) {
  assert(cone_valid(p, g.spj2));
  std::vector<Int> mclass = g.zplus.project(p.m);
  QzCoords out;
  out.fin.reserve(g.tor_idx.size());
  ConePair rest = p;
  for (size_t t = 0; t < g.tor_idx.size(); ++t) {
    const Int& c = mclass[g.tor_idx[t]];
    out.fin.push_back(c);
    rest = cone_sub(rest, cone_scale(g.sections[t], c));
  }
  // the q-side forces ch of the integral class to vanish, so after removing
  // the torsion sections the class is zero: rest.m = δb + relations
  for (long i = 0; i < g.zplus.group.ngens(); ++i)
    if (g.zplus.group.orders[i] == 0) assert(mclass[i] == 0);
  IntMat below = hstack(delta_full(*g.spj, *g.spj1), relation_cols(*g.spj1));
  auto sol = solve_integer(below, rest.m.v);
  assert(sol.has_value());
  std::vector<Int> b(sol->begin(), sol->begin() + g.spj->dim_full);
  QCochain q1 = q_add(rest.q, rho(ZCochain{g.spj, b}));
  assert(q_is_zero(q_delta(q1, g.spj1)));
  std::vector<Rat> lcoords = g.lat.lattice_coords(g.qc.project(q1));
  out.fracs.reserve(lcoords.size());
  for (const auto& e : lcoords) out.fracs.push_back(frac(e));
  out.fin = g.tor.reduce(out.fin);
  return out;
}

ConePair qz_rep(const QzCohomology& g, const QzCoords& c) {
  assert(static_cast<long>(c.fracs.size()) == g.div_rank());
  assert(c.fin.size() == g.tor_idx.size());
  ConePair p = cone_zero(g.spj1, g.spj);
  for (size_t t = 0; t < g.sections.size(); ++t)
    p = cone_add(p, cone_scale(g.sections[t], c.fin[t]));
  for (long i = 0; i < g.div_rank(); ++i)
    p.q = q_add(p.q, q_scale(g.lat.witnesses[i], c.fracs[i]));
  return p;
}

QzCoords qz_reduce(const QzCohomology& g, QzCoords c) {
  for (auto& e : c.fracs) e = frac(e);
  c.fin = g.tor.reduce(c.fin);
  return c;
}

QzCoords qz_coords_add(const QzCohomology& g, const QzCoords& a, const QzCoords& b) {
  return qz_reduce(g, QzCoords{vec_add(a.fracs, b.fracs), vec_add(a.fin, b.fin)});
}

QzCoords qz_coords_sub(const QzCohomology& g, const QzCoords& a, const QzCoords& b) {
  return qz_reduce(g, QzCoords{vec_sub(a.fracs, b.fracs), vec_sub(a.fin, b.fin)});
}

QzCoords qz_coords_scale(const QzCohomology& g, const QzCoords& a, const Int& f) {
  return qz_reduce(g, QzCoords{vec_scale(a.fracs, Rat(f)), vec_scale(a.fin, f)});
}

bool qz_is_zero(const QzCoords& c) {
  return vec_is_zero(c.fracs) && vec_is_zero(c.fin);
}

bool qz_equal(const QzCohomology& g, const ConePair& a, const ConePair& b) {
  return qz_canonicalize(g, a) == qz_canonicalize(g, b);
}

ConePair qz_p(const QzCohomology& g, const QCochain& s) {
  assert(g.qc.is_cocycle(s));
  return ConePair{z_zero(g.spj1), s};
}

std::vector<Int> qz_b(const QzCohomology& g, const ConePair& p) {
  return g.zplus.project(p.m);
}

std::string qz_pretty(const QzCohomology& g) {
  GroupShape fin = group_shape(g.tor);
  std::string out;
  if (g.div_rank() == 1) out = "(Q/Z)";
  if (g.div_rank() > 1) out = "(Q/Z)^" + std::to_string(g.div_rank());
  for (const auto& t : fin.torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + to_string(t);
  }
  return out.empty() ? "0" : out;
}

}  // namespace dcmv
