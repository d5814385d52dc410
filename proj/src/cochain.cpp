#include "dcmv/cochain.hpp"

namespace dcmv {

std::string CochainSpace::coord_name(long full_idx) const {
  for (const auto& bl : blocks) {
    long span = bl.nsimp * bl.g.ngens();
    if (full_idx < bl.off_full || full_idx >= bl.off_full + span) continue;
    long rel = full_idx - bl.off_full;
    long simp = rel / bl.g.ngens(), gen = rel % bl.g.ngens();
    return s.name(bl.j, simp) + " gen " + std::to_string(gen);
  }
  return "coord " + std::to_string(full_idx);
}

SpaceRef make_space(const Subcomplex& s, int k, const GradedCoeffs& coeffs) {
  auto sp = std::make_shared<CochainSpace>();
  sp->s = s;
  sp->k = k;
  sp->coeffs = coeffs;
  for (int j = 0; j <= s.dim(); ++j) {
    CoeffGroup g = coeffs.at(k - j);
    if (s.count(j) == 0 || g.trivial()) continue;
    CochainSpace::Block bl{j, s.count(j), g, sp->dim_full, sp->dim_free};
    sp->blocks.push_back(bl);
    sp->dim_full += bl.nsimp * g.ngens();
    sp->dim_free += bl.nsimp * g.rank;
  }
  sp->orders.assign(sp->dim_full, Int(0));
  sp->free_of_full.assign(sp->dim_full, -1);
  for (const auto& bl : sp->blocks) {
    long nf = 0;
    for (long sidx = 0; sidx < bl.nsimp; ++sidx)
      for (long g = 0; g < bl.g.ngens(); ++g) {
        long full = sp->coord(bl, sidx, g);
        sp->orders[full] = bl.g.order_of(g);
        if (g < bl.g.rank) {
          sp->free_of_full[full] = bl.off_free + nf;
          ++nf;
        }
      }
  }
  sp->full_of_free.assign(sp->dim_free, -1);
  for (long f = 0; f < sp->dim_full; ++f)
    if (sp->free_of_full[f] >= 0) sp->full_of_free[sp->free_of_full[f]] = f;
  return sp;
}

ZCochain z_zero(SpaceRef sp) { return ZCochain{sp, std::vector<Int>(sp->dim_full, Int(0))}; }
QCochain q_zero(SpaceRef sp) { return QCochain{sp, std::vector<Rat>(sp->dim_free, Rat(0))}; }

ZCochain z_normalize(ZCochain c) {
  for (long i = 0; i < c.sp->dim_full; ++i)
    if (c.sp->orders[i] != 0) c.v[i] = mod_floor(c.v[i], c.sp->orders[i]);
  return c;
}

bool z_is_zero(const ZCochain& c) { return vec_is_zero(z_normalize(c).v); }

bool z_equal(const ZCochain& a, const ZCochain& b) {
  assert(a.sp == b.sp || a.sp->dim_full == b.sp->dim_full);
  return z_normalize(a).v == z_normalize(b).v;
}

ZCochain z_add(const ZCochain& a, const ZCochain& b) { return ZCochain{a.sp, vec_add(a.v, b.v)}; }
ZCochain z_sub(const ZCochain& a, const ZCochain& b) { return ZCochain{a.sp, vec_sub(a.v, b.v)}; }
ZCochain z_neg(const ZCochain& a) { return ZCochain{a.sp, vec_neg(a.v)}; }
ZCochain z_scale(const ZCochain& a, const Int& f) { return ZCochain{a.sp, vec_scale(a.v, f)}; }

bool q_is_zero(const QCochain& c) { return vec_is_zero(c.v); }
QCochain q_add(const QCochain& a, const QCochain& b) { return QCochain{a.sp, vec_add(a.v, b.v)}; }
QCochain q_sub(const QCochain& a, const QCochain& b) { return QCochain{a.sp, vec_sub(a.v, b.v)}; }
QCochain q_neg(const QCochain& a) { return QCochain{a.sp, vec_neg(a.v)}; }
QCochain q_scale(const QCochain& a, const Rat& f) { return QCochain{a.sp, vec_scale(a.v, f)}; }

QCochain rho(const ZCochain& c) {
  QCochain q = q_zero(c.sp);
  for (long f = 0; f < c.sp->dim_free; ++f) q.v[f] = Rat(c.v[c.sp->full_of_free[f]]);
  return q;
}

IntMat delta_full(const CochainSpace& from, const CochainSpace& to) {
  assert(to.k == from.k + 1 && to.s.same_as(from.s));
  IntMat m(to.dim_full, from.dim_full);
  for (const auto& bf : from.blocks) {
    // degree-j piece at level k-j maps to the degree-(j+1) piece at the same level
    const CochainSpace::Block* bt = nullptr;
    for (const auto& b : to.blocks)
      if (b.j == bf.j + 1) bt = &b;
    if (!bt) continue;
    assert(bt->g.ngens() == bf.g.ngens());
    IntMat inc = simplicial_coboundary(from.s, bf.j);
    for (long r = 0; r < inc.rows; ++r)
      for (long c = 0; c < inc.cols; ++c) {
        if (inc(r, c) == 0) continue;
        for (long g = 0; g < bf.g.ngens(); ++g)
          m(to.coord(*bt, r, g), from.coord(bf, c, g)) = inc(r, c);
      }
  }
  return m;
}

RatMat delta_free(const CochainSpace& from, const CochainSpace& to) {
  IntMat full = delta_full(from, to);
  RatMat m(to.dim_free, from.dim_free);
  for (long i = 0; i < to.dim_free; ++i)
    for (long j = 0; j < from.dim_free; ++j)
      m(i, j) = Rat(full(to.full_of_free[i], from.full_of_free[j]));
  return m;
}

IntMat relation_cols(const CochainSpace& sp) {
  std::vector<long> tors;
  for (long i = 0; i < sp.dim_full; ++i)
    if (sp.orders[i] != 0) tors.push_back(i);
  IntMat r(sp.dim_full, static_cast<long>(tors.size()));
  for (long j = 0; j < r.cols; ++j) r(tors[j], j) = sp.orders[tors[j]];
  return r;
}

ZCochain z_delta(const ZCochain& c, SpaceRef to) {
  return ZCochain{to, mul(delta_full(*c.sp, *to), c.v)};
}

QCochain q_delta(const QCochain& c, SpaceRef to) {
  return QCochain{to, mul(delta_free(*c.sp, *to), c.v)};
}

IntMat restriction_full(const CochainSpace& src, const CochainSpace& dst) {
  assert(dst.k == src.k);
  IntMat m(dst.dim_full, src.dim_full);
  for (const auto& bd : dst.blocks) {
    const CochainSpace::Block* bs = nullptr;
    for (const auto& b : src.blocks)
      if (b.j == bd.j) bs = &b;
    if (!bs) continue;
    for (long sd = 0; sd < bd.nsimp; ++sd) {
      long p = dst.s.parent_index(bd.j, sd);
      long ss = src.s.local_index(bd.j, p);
      if (ss < 0) continue;  // dst.s ⊆ src.s makes this unreachable
      for (long g = 0; g < bd.g.ngens(); ++g) m(dst.coord(bd, sd, g), src.coord(*bs, ss, g)) = 1;
    }
  }
  return m;
}

ZCochain z_restrict(const ZCochain& c, SpaceRef dst) {
  return ZCochain{dst, mul(restriction_full(*c.sp, *dst), c.v)};
}

QCochain q_restrict(const QCochain& c, SpaceRef dst) {
  QCochain out = q_zero(dst);
  IntMat r = restriction_full(*c.sp, *dst);
  for (long i = 0; i < dst->dim_free; ++i) {
    long fi = dst->full_of_free[i];
    for (long j = 0; j < c.sp->dim_full; ++j)
      if (r(fi, j) != 0) {
        long fj = c.sp->free_of_full[j];
        assert(fj >= 0);  // free coords restrict to free coords
        out.v[i] += c.v[fj];
      }
  }
  return out;
}

ZCochain z_extend_zero(const ZCochain& c, SpaceRef dst) {
  IntMat r = restriction_full(*dst, *c.sp);  // dst ⊇ c.sp->s: transpose the restriction
  return ZCochain{dst, mul(transpose(r), c.v)};
}

QCochain q_extend_zero(const QCochain& c, SpaceRef dst) {
  IntMat r = restriction_full(*dst, *c.sp);
  std::vector<Rat> full(dst->dim_full, Rat(0));
  std::vector<Rat> cf = q_to_full(c);
  IntMat rt = transpose(r);
  for (long i = 0; i < rt.rows; ++i)
    for (long j = 0; j < rt.cols; ++j)
      if (rt(i, j) != 0) full[i] += cf[j];
  return q_from_full(dst, std::move(full));
}

namespace {

// X-local coord -> value taken from the A- or B-side cochain
template <class Val, class Space>
std::vector<Val> glue_values(const Space& sx, const CochainSpace& sa, const CochainSpace& sb,
                             const std::vector<Val>& va, const std::vector<Val>& vb) {
  std::vector<Val> out(sx.dim_full, Val(0));
  for (const auto& bx : sx.blocks) {
    const CochainSpace::Block* ba = nullptr;
    const CochainSpace::Block* bb = nullptr;
    for (const auto& b : sa.blocks)
      if (b.j == bx.j) ba = &b;
    for (const auto& b : sb.blocks)
      if (b.j == bx.j) bb = &b;
    for (long sidx = 0; sidx < bx.nsimp; ++sidx) {
      long p = sx.s.parent_index(bx.j, sidx);
      long la = sa.s.local_index(bx.j, p);
      long lb = sb.s.local_index(bx.j, p);
      assert(la >= 0 || lb >= 0);  // decomposition cover
      for (long g = 0; g < bx.g.ngens(); ++g)
        out[sx.coord(bx, sidx, g)] =
            la >= 0 ? va[sa.coord(*ba, la, g)] : vb[sb.coord(*bb, lb, g)];
    }
  }
  return out;
}

}  // namespace

ZCochain z_glue(const ZCochain& a, const ZCochain& b, SpaceRef sx, SpaceRef sd) {
  ZCochain ad = z_normalize(z_restrict(a, sd));
  ZCochain bd = z_normalize(z_restrict(b, sd));
  for (long i = 0; i < sd->dim_full; ++i)
    if (ad.v[i] != bd.v[i])
      throw DecompositionError("glue mismatch on D at " + sd->coord_name(i));
  return ZCochain{sx, glue_values(*sx, *a.sp, *b.sp, a.v, b.v)};
}

QCochain q_glue(const QCochain& a, const QCochain& b, SpaceRef sx, SpaceRef sd) {
  QCochain ad = q_restrict(a, sd);
  QCochain bd = q_restrict(b, sd);
  for (long i = 0; i < sd->dim_free; ++i)
    if (ad.v[i] != bd.v[i])
      throw DecompositionError("glue mismatch on D at " + sd->coord_name(sd->full_of_free[i]));
  std::vector<Rat> full = glue_values(*sx, *a.sp, *b.sp, q_to_full(a), q_to_full(b));
  return q_from_full(sx, std::move(full));
}

std::vector<Rat> q_to_full(const QCochain& c) {
  std::vector<Rat> full(c.sp->dim_full, Rat(0));
  for (long f = 0; f < c.sp->dim_free; ++f) full[c.sp->full_of_free[f]] = c.v[f];
  return full;
}

QCochain q_from_full(SpaceRef sp, std::vector<Rat> full) {
  QCochain q = q_zero(sp);
  for (long i = 0; i < sp->dim_full; ++i) {
    if (sp->free_of_full[i] >= 0)
      q.v[sp->free_of_full[i]] = full[i];
    else
      assert(full[i] == 0);
  }
  return q;
}

}  // namespace dcmv
