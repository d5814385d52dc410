#include "dcmv/diffcoh.hpp"

#include <cassert>
#include <random>
#include <string>
#include <utility>

namespace dcmv {

namespace {

bool q_same(const QCochain& a, const QCochain& b) { return q_is_zero(q_sub(a, b)); }

QCochain curvature_impl(const DiffClass& f, bool flip_sign) {
  QCochain dh = q_delta(f.h, f.c.sp);
  return flip_sign ? q_sub(rho(f.c), dh) : q_add(rho(f.c), dh);
}

// f = g + (δb + relation columns · z, -ρ(b) + δs) for integral b, z and
// rational s, as one mixed solve.  drop_rho removes the coupling between the
// two rows (the deliberately broken relation used as a negative control).
bool equal_impl(Workspace& ws, Part p, int k, const DiffClass& f,
                const DiffClass& g, bool drop_rho) {
  SpaceRef km2 = ws.space(p, k - 2);
  SpaceRef km1 = ws.space(p, k - 1);
  SpaceRef sk = ws.space(p, k);
  assert(f.c.sp == sk && g.c.sp == sk);
  assert(f.h.sp == km1 && g.h.sp == km1);
  IntMat rel = relation_cols(*sk);

  RatMat pfree(km1->dim_free, km1->dim_full);
  if (!drop_rho)
    for (long i = 0; i < km1->dim_full; ++i)
      if (km1->free_of_full[i] >= 0) pfree(km1->free_of_full[i], i) = Rat(-1);

  RatMat a = vstack(hstack(to_rat(delta_full(*km1, *sk)), to_rat(rel)),
                    hstack(pfree, RatMat(km1->dim_free, rel.cols)));
  RatMat b = vstack(RatMat(sk->dim_full, km2->dim_free), delta_free(*km2, *km1));
  std::vector<Rat> target =
      vec_concat(to_rat(z_sub(f.c, g.c).v), q_sub(f.h, g.h).v);
  return solve_mixed(a, b, target).has_value();
}

}  // namespace

DiffClass diff_make(Workspace& ws, Part p, int k, ZCochain c, QCochain h) {
  assert(c.sp == ws.space(p, k));
  assert(h.sp == ws.space(p, k - 1));
  assert(ws.z(p, k).is_cocycle(c));
  return DiffClass{z_normalize(std::move(c)), std::move(h)};
}

DiffClass diff_zero(Workspace& ws, Part p, int k) {
  return DiffClass{z_zero(ws.space(p, k)), q_zero(ws.space(p, k - 1))};
}

DiffClass diff_add(const DiffClass& f, const DiffClass& g) {
  return DiffClass{z_add(f.c, g.c), q_add(f.h, g.h)};
}

DiffClass diff_sub(const DiffClass& f, const DiffClass& g) {
  return DiffClass{z_sub(f.c, g.c), q_sub(f.h, g.h)};
}

DiffClass diff_neg(const DiffClass& f) {
  return DiffClass{z_neg(f.c), q_neg(f.h)};
}

bool diff_equal(Workspace& ws, Part p, int k, const DiffClass& f,
                const DiffClass& g) {
  return equal_impl(ws, p, k, f, g, false);
}

bool diff_is_zero(Workspace& ws, Part p, int k, const DiffClass& f) {
  return equal_impl(ws, p, k, f, diff_zero(ws, p, k), false);
}

QCochain delta1(const DiffClass& f) { return curvature_impl(f, false); }

std::vector<Int> delta2(Workspace& ws, Part p, int k, const DiffClass& f) {
  return ws.z(p, k).project(f.c);
}

DiffClass i2(Workspace& ws, Part p, int k, const QCochain& alpha) {
  assert(alpha.sp == ws.space(p, k - 1));
  return DiffClass{z_zero(ws.space(p, k)), alpha};
}

DiffClass i1(Workspace& ws, Part p, int k, const ConePair& u) {
  assert(u.m.sp == ws.space(p, k) && u.q.sp == ws.space(p, k - 1));
  assert(cone_valid(u, ws.space(p, k + 1)));
  return DiffClass{u.m, u.q};
}

std::optional<QCochain> i2_preimage(Workspace& ws, Part p, int k,
                                    const DiffClass& f) {
  SpaceRef km1 = ws.space(p, k - 1);
  SpaceRef sk = ws.space(p, k);
  auto sol = solve_integer(hstack(delta_full(*km1, *sk), relation_cols(*sk)), f.c.v);
  if (!sol) return std::nullopt;
  std::vector<Int> b(sol->begin(), sol->begin() + km1->dim_full);
  return q_add(f.h, rho(ZCochain{km1, std::move(b)}));
}

DiffClass restrict_class(Workspace& ws, Part to, int k, const DiffClass& f) {
  return DiffClass{z_restrict(f.c, ws.space(to, k)),
                   q_restrict(f.h, ws.space(to, k - 1))};
}

// ---- diagram verification ----------------------------------------------

namespace {

struct Sampler {
  std::mt19937_64 rng;
  explicit Sampler(unsigned long long s) : rng(s) {}

  long small(long lo, long hi) {  // inclusive
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

QCochain random_q(SpaceRef sp, Sampler& s) { return QCochain{sp, s.rat_vec(sp->dim_free)}; }

DiffClass random_class(Workspace& ws, Part p, int k, Sampler& s) {
  const ZCohomology& zk = ws.z(p, k);
  SpaceRef km1 = ws.space(p, k - 1);
  ZCochain c = zk.lift(s.int_vec(zk.group.ngens()));
  ZCochain b{km1, s.int_vec(km1->dim_full)};
  c = z_normalize(z_add(c, z_delta(b, ws.space(p, k))));
  return DiffClass{std::move(c), random_q(km1, s)};
}

// an explicitly trivial pair (δb + relations, -ρ(b) + δs)
DiffClass relation_elt(Workspace& ws, Part p, int k, Sampler& s) {
  SpaceRef km2 = ws.space(p, k - 2);
  SpaceRef km1 = ws.space(p, k - 1);
  SpaceRef sk = ws.space(p, k);
  ZCochain b{km1, s.int_vec(km1->dim_full)};
  IntMat rel = relation_cols(*sk);
  ZCochain c = z_normalize(
      z_add(z_delta(b, sk), ZCochain{sk, mul(rel, s.int_vec(rel.cols))}));
  QCochain h = q_add(q_neg(rho(b)), q_delta(random_q(km2, s), km1));
  return DiffClass{std::move(c), std::move(h)};
}

QzCoords random_qz(const QzCohomology& g, Sampler& s) {
  QzCoords u;
  u.fracs.reserve(g.div_rank());
  for (long i = 0; i < g.div_rank(); ++i) u.fracs.push_back(frac(s.small_rat()));
  u.fin = s.int_vec(g.tor.ngens());
  return qz_reduce(g, u);
}

// cone coboundary of a random pair one degree down
ConePair random_cone_coboundary(Workspace& ws, Part p, int k, Sampler& s) {
  SpaceRef km2 = ws.space(p, k - 2);
  SpaceRef km1 = ws.space(p, k - 1);
  ZCochain mp{km1, s.int_vec(km1->dim_full)};
  QCochain qp = random_q(km2, s);
  return ConePair{z_normalize(z_neg(z_delta(mp, ws.space(p, k)))),
                  q_add(rho(mp), q_delta(qp, km1))};
}

// a random element of 𝚲^k_J: ρ of an integral cocycle plus a coboundary
QCochain random_lattice_cocycle(Workspace& ws, Part p, int k,
                                const std::vector<Int>& x, Sampler& s) {
  const ZCohomology& zk = ws.z(p, k);
  return q_add(rho(zk.lift(x)), q_delta(random_q(ws.space(p, k - 1), s), ws.space(p, k)));
}

struct Checker {
  std::vector<CheckResult> out;
  unsigned long long seed;
  long samples;

  template <typename Body>
  void run(const std::string& name, Body body) {
    Sampler s(seed * 1000003ULL + static_cast<unsigned long long>(out.size()) + 1);
    CheckResult r{name, true, ""};
    body(s, r);
    out.push_back(std::move(r));
  }
};

void fail(CheckResult& r, const std::string& note) {
  r.pass = false;
  if (r.note.empty()) r.note = note;
}

std::string at_sample(long i) { return "sample " + std::to_string(i); }

}  // namespace

std::vector<CheckResult> verify_diagram1(Workspace& ws, int k, long samples,
                                         unsigned long long seed,
                                         Diagram1Fault fault) {
  const Part P = Part::X;
  const bool flip = fault == Diagram1Fault::flip_curvature_sign;
  const bool drop = fault == Diagram1Fault::drop_rho_coupling;

  SpaceRef km1 = ws.space(P, k - 1);
  SpaceRef sk = ws.space(P, k);
  const ZCohomology& zk = ws.z(P, k);
  const QCohomology& qk = ws.q(P, k);
  const LatticeData& latk = ws.lattice(P, k);
  const QCohomology& qkm1 = ws.q(P, k - 1);
  const LatticeData& latkm1 = ws.lattice(P, k - 1);
  const QzCohomology& g = ws.qz(P, k - 1);

  auto curv = [&](const DiffClass& f) { return curvature_impl(f, flip); };
  auto eq = [&](const DiffClass& f, const DiffClass& h) {
    return equal_impl(ws, P, k, f, h, drop);
  };
  DiffClass zero = diff_zero(ws, P, k);
  auto is0 = [&](const DiffClass& f) { return eq(f, zero); };

  Checker ck{{}, seed, samples};

  // torsion-only coordinate vector on J^k(Z)
  auto torsion_only = [&](std::vector<Int> x) {
    for (long i = 0; i < zk.group.ngens(); ++i)
      if (zk.group.orders[i] == 0) x[i] = 0;
    return x;
  };

  ck.run("i2 kernel is the lattice", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < latkm1.hdim; ++i) {
      if (!is0(i2(ws, P, k, latkm1.witnesses[i])))
        fail(r, "lattice witness " + std::to_string(i) + " not killed");
      if (is0(i2(ws, P, k, q_scale(latkm1.witnesses[i], Rat(1, 2)))))
        fail(r, "half of lattice witness " + std::to_string(i) + " killed");
    }
    for (long i = 0; i < samples; ++i) {
      // explicit lattice element: integral witness combination plus exact
      QCochain in_lat = q_delta(random_q(ws.space(P, k - 2), s), km1);
      for (long j = 0; j < latkm1.hdim; ++j)
        in_lat = q_add(in_lat, q_scale(latkm1.witnesses[j], Rat(s.small_int())));
      if (!is0(i2(ws, P, k, in_lat))) fail(r, at_sample(i) + ": lattice element not killed");
      QCochain alpha = random_q(km1, s);
      if (is0(i2(ws, P, k, alpha)) != in_lambda_j(qkm1, latkm1, alpha))
        fail(r, at_sample(i) + ": i2 vanishing disagrees with lattice membership");
    }
  });

  ck.run("delta2 onto", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < zk.group.ngens(); ++i) {
      std::vector<Int> e(zk.group.ngens(), Int(0));
      e[i] = 1;
      DiffClass f{zk.lift(e), q_zero(km1)};
      if (delta2(ws, P, k, f) != zk.group.reduce(e))
        fail(r, "generator " + std::to_string(i) + " missed");
    }
    for (long i = 0; i < samples; ++i) {
      std::vector<Int> x = s.int_vec(zk.group.ngens());
      DiffClass f{zk.lift(x), q_zero(km1)};
      if (delta2(ws, P, k, f) != zk.group.reduce(x)) fail(r, at_sample(i));
    }
  });

  ck.run("ker delta2 = im i2", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      QCochain alpha = random_q(km1, s);
      if (!vec_is_zero(delta2(ws, P, k, i2(ws, P, k, alpha))))
        fail(r, at_sample(i) + ": i2 image has nonzero class");
      DiffClass f = random_class(ws, P, k, s);
      DiffClass f0 = diff_sub(f, DiffClass{zk.lift(delta2(ws, P, k, f)), q_zero(km1)});
      if (!vec_is_zero(delta2(ws, P, k, f0))) {
        fail(r, at_sample(i) + ": class correction failed");
        continue;
      }
      auto a = i2_preimage(ws, P, k, f0);
      if (!a) {
        fail(r, at_sample(i) + ": no preimage for a trivial class");
        continue;
      }
      if (!eq(i2(ws, P, k, *a), f0)) fail(r, at_sample(i) + ": preimage does not glue back");
    }
  });

  ck.run("i1 injective", [&](Sampler& s, CheckResult& r) {
    for (size_t t = 0; t < g.sections.size(); ++t) {
      const ConePair& u = g.sections[t];
      if (is0(i1(ws, P, k, u))) fail(r, "torsion section " + std::to_string(t) + " killed");
      Int ord = g.tor.orders[t];
      if (!is0(i1(ws, P, k, cone_scale(u, ord))))
        fail(r, "order multiple of section " + std::to_string(t) + " not killed");
    }
    for (long i = 0; i < samples; ++i) {
      QzCoords u = random_qz(g, s);
      ConePair pu = qz_rep(g, u);
      if (is0(i1(ws, P, k, pu)) != qz_is_zero(u))
        fail(r, at_sample(i) + ": vanishing disagrees with coordinates");
      ConePair moved = cone_add(pu, random_cone_coboundary(ws, P, k, s));
      if (!eq(i1(ws, P, k, pu), i1(ws, P, k, moved)))
        fail(r, at_sample(i) + ": value depends on the representative");
    }
  });

  ck.run("delta1 onto lattice cocycles", [&](Sampler& s, CheckResult& r) {
    RatMat ch = ch_matrix(zk, qk);
    for (long i = 0; i < samples; ++i) {
      std::vector<Int> x = s.int_vec(zk.group.ngens());
      QCochain omega = random_lattice_cocycle(ws, P, k, x, s);
      auto sol = solve_mixed(ch, RatMat(qk.hdim, 0), qk.project(omega));
      if (!sol) {
        fail(r, at_sample(i) + ": no integral class under the target");
        continue;
      }
      ZCochain rep = zk.lift(sol->x);
      auto prim = qk.primitive(q_sub(omega, rho(rep)));
      if (!prim) {
        fail(r, at_sample(i) + ": correction term is not exact");
        continue;
      }
      if (!q_same(curv(DiffClass{rep, *prim}), omega))
        fail(r, at_sample(i) + ": constructed class has wrong curvature");
    }
  });

  ck.run("ker delta1 = im i1", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      QzCoords u = random_qz(g, s);
      if (!q_is_zero(curv(i1(ws, P, k, qz_rep(g, u)))))
        fail(r, at_sample(i) + ": flat inclusion has nonzero curvature");
      DiffClass f = diff_add(i1(ws, P, k, qz_rep(g, u)), relation_elt(ws, P, k, s));
      if (!q_is_zero(curv(f))) {
        fail(r, at_sample(i) + ": moved flat class has nonzero curvature");
        continue;
      }
      QzCoords back = qz_canonicalize(g, ConePair{f.c, f.h});
      if (back != u) fail(r, at_sample(i) + ": flat pair recovers wrong coordinates");
      if (!eq(f, i1(ws, P, k, qz_rep(g, back))))
        fail(r, at_sample(i) + ": flat pair not equal to its i1 image");
    }
  });

  ck.run("b = delta2 . i1", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      ConePair u = qz_rep(g, random_qz(g, s));
      if (delta2(ws, P, k, i1(ws, P, k, u)) != zk.group.reduce(qz_b(g, u)))
        fail(r, at_sample(i));
    }
  });

  ck.run("delta1 . i2 = d", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      QCochain alpha = random_q(km1, s);
      if (!q_same(curv(i2(ws, P, k, alpha)), q_delta(alpha, sk))) fail(r, at_sample(i));
    }
  });

  ck.run("forms row exact at the middle quotient", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      QCochain cls = qkm1.lift(s.rat_vec(qkm1.hdim));
      if (!q_is_zero(q_delta(cls, sk))) fail(r, at_sample(i) + ": class image not closed");
      QCochain alpha = q_add(cls, q_delta(random_q(ws.space(P, k - 2), s), km1));
      QCochain rest = q_sub(alpha, qkm1.lift(qkm1.project(alpha)));
      if (!qkm1.primitive(rest))
        fail(r, at_sample(i) + ": closed cochain not a class modulo the lattice");
    }
  });

  ck.run("forms row exact at the lattice cocycles", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      if (!in_lambda_j(qk, latk, q_delta(random_q(km1, s), sk)))
        fail(r, at_sample(i) + ": coboundary not in the lattice");
      std::vector<Int> x = s.int_vec(zk.group.ngens());
      if (i % 2 == 1) x = torsion_only(std::move(x));
      QCochain omega = random_lattice_cocycle(ws, P, k, x, s);
      bool trivial = vec_is_zero(qk.project(omega));
      if (trivial != qk.primitive(omega).has_value())
        fail(r, at_sample(i) + ": exactness disagrees with the rational class");
    }
  });

  ck.run("flat row exact at J^{k-1}(Q/Z)", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      QzCoords u = random_qz(g, s);
      if (i % 2 == 1) u.fin.assign(u.fin.size(), Int(0));
      bool killed = zk.group.is_zero(qz_b(g, qz_rep(g, u)));
      if (killed != vec_is_zero(u.fin)) {
        fail(r, at_sample(i) + ": connecting map disagrees with the finite part");
        continue;
      }
      if (!killed) continue;
      // preimage under p: the witness combination with the same fractions
      QCochain w = q_zero(km1);
      for (long j = 0; j < g.div_rank(); ++j)
        w = q_add(w, q_scale(latkm1.witnesses[j], u.fracs[j]));
      if (qz_canonicalize(g, qz_p(g, w)) != u)
        fail(r, at_sample(i) + ": kernel element is not a rational-class image");
    }
  });

  ck.run("flat row exact at J^k(Z)", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      std::vector<Int> x = zk.group.reduce(s.int_vec(zk.group.ngens()));
      if (i % 2 == 1) x = torsion_only(std::move(x));
      bool free_zero = vec_is_zero(vec_sub(x, torsion_only(x)));
      if (vec_is_zero(ch_coords(zk, qk, x)) != free_zero) {
        fail(r, at_sample(i) + ": characteristic kernel is not the torsion");
        continue;
      }
      if (!free_zero) continue;
      ConePair u = cone_zero(sk, km1);
      for (size_t t = 0; t < g.sections.size(); ++t)
        u = cone_add(u, cone_scale(g.sections[t], x[g.tor_idx[t]]));
      if (zk.group.reduce(qz_b(g, u)) != x)
        fail(r, at_sample(i) + ": torsion class not hit by the connecting map");
    }
  });

  ck.run("restriction naturality", [&](Sampler& s, CheckResult& r) {
    const Part A = Part::A;
    for (long i = 0; i < samples; ++i) {
      DiffClass f = random_class(ws, P, k, s);
      DiffClass fa = restrict_class(ws, A, k, f);
      if (!q_same(q_restrict(curv(f), ws.space(A, k)), curv(fa)))
        fail(r, at_sample(i) + ": curvature does not restrict");
      if (delta2(ws, A, k, fa) != z_class_restrict(ws, P, A, k, delta2(ws, P, k, f)))
        fail(r, at_sample(i) + ": characteristic class does not restrict");
      QCochain alpha = random_q(km1, s);
      DiffClass left = i2(ws, A, k, q_restrict(alpha, ws.space(A, k - 1)));
      DiffClass right = restrict_class(ws, A, k, i2(ws, P, k, alpha));
      if (!z_equal(left.c, right.c) || !q_same(left.h, right.h))
        fail(r, at_sample(i) + ": i2 does not restrict");
      ConePair u = qz_rep(g, random_qz(g, s));
      ConePair ua{z_restrict(u.m, ws.space(A, k)), q_restrict(u.q, ws.space(A, k - 1))};
      left = i1(ws, A, k, ua);
      right = restrict_class(ws, A, k, i1(ws, P, k, u));
      if (!z_equal(left.c, right.c) || !q_same(left.h, right.h))
        fail(r, at_sample(i) + ": i1 does not restrict");
    }
  });

  ck.run("group laws", [&](Sampler& s, CheckResult& r) {
    for (long i = 0; i < samples; ++i) {
      DiffClass f = random_class(ws, P, k, s);
      DiffClass h = random_class(ws, P, k, s);
      if (!is0(diff_add(f, diff_neg(f)))) fail(r, at_sample(i) + ": f - f is not zero");
      if (!is0(relation_elt(ws, P, k, s)))
        fail(r, at_sample(i) + ": relation element is not zero");
      if (!eq(diff_add(f, relation_elt(ws, P, k, s)), f))
        fail(r, at_sample(i) + ": relation shift changes the class");
      if (latkm1.hdim > 0) {
        DiffClass shifted =
            diff_add(f, i2(ws, P, k, q_scale(latkm1.witnesses[0], Rat(1, 2))));
        if (eq(shifted, f)) fail(r, at_sample(i) + ": half-witness shift not detected");
      }
      std::vector<Int> lhs = delta2(ws, P, k, diff_add(f, h));
      std::vector<Int> rhs = zk.group.reduce(
          vec_add(delta2(ws, P, k, f), delta2(ws, P, k, h)));
      if (lhs != rhs) fail(r, at_sample(i) + ": delta2 not additive");
      if (!q_same(curv(diff_add(f, h)), q_add(curv(f), curv(h))))
        fail(r, at_sample(i) + ": delta1 not additive");
    }
  });

  return ck.out;
}

}  // namespace dcmv
