#include "dcmv/fgab.hpp"

#include <sstream>

namespace dcmv {

IntMat order_relations(const FgAbGroup& g) {
  std::vector<long> finite;
  for (long i = 0; i < g.ngens(); ++i)
    if (g.orders[i] != 0) finite.push_back(i);
  IntMat r(g.ngens(), static_cast<long>(finite.size()));
  for (long j = 0; j < r.cols; ++j) r(finite[j], j) = g.orders[finite[j]];
  return r;
}

GroupShape group_shape(const FgAbGroup& g) {
  // invariant factors of diag(orders): Smith form restores the chain
  IntMat d(g.ngens(), g.ngens());
  for (long i = 0; i < g.ngens(); ++i) d(i, i) = g.orders[i];
  SnfResult f = smith_normal_form(d);
  GroupShape s;
  for (long i = 0; i < g.ngens(); ++i) {
    Int v = f.diag(i);
    if (v == 0)
      ++s.free_rank;
    else if (v > 1)
      s.torsion.push_back(v);
  }
  return s;
}

std::string pretty_group(const FgAbGroup& g) {
  GroupShape s = group_shape(g);
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (s.free_rank == 1) {
    sep();
    out << "Z";
  } else if (s.free_rank > 1) {
    sep();
    out << "Z^" << s.free_rank;
  }
  for (const auto& t : s.torsion) {
    sep();
    out << "Z/" << t.str();
  }
  if (first) out << "0";
  return out.str();
}

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b) {
  return FgAbGroup{vec_concat(a.orders, b.orders)};
}

IntMat block_diag(const IntMat& a, const IntMat& b) {
  IntMat z(a.rows + b.rows, a.cols + b.cols);
  for (long i = 0; i < a.rows; ++i)
    for (long j = 0; j < a.cols; ++j) z(i, j) = a(i, j);
  for (long i = 0; i < b.rows; ++i)
    for (long j = 0; j < b.cols; ++j) z(a.rows + i, a.cols + j) = b(i, j);
  return z;
}

PresentedQuotient quotient_presentation(long n, const IntMat& relations) {
  assert(relations.cols == 0 || relations.rows == n);
  IntMat r = relations;
  if (r.cols == 0) r = IntMat(n, 0);
  SnfResult f = smith_normal_form(r);
  // U*R*V = S, so Z^n / im(R) has cyclic factor Z/S(i,i) on the i-th row of U;
  // keep the factors with S(i,i) != 1
  std::vector<long> kept;
  std::vector<Int> orders;
  for (long i = 0; i < n; ++i) {
    Int d = f.diag(i);
    if (d == 1) continue;
    kept.push_back(i);
    orders.push_back(d);
  }
  PresentedQuotient q;
  q.group = FgAbGroup{std::move(orders)};
  q.proj = submatrix_rows(f.U, kept);
  q.lift = submatrix_cols(f.Uinv, kept);
  return q;
}

bool hom_well_defined(const FgAbGroup& dom, const FgAbGroup& cod, const IntMat& m) {
  if (m.rows != cod.ngens() || m.cols != dom.ngens()) return false;
  for (long j = 0; j < dom.ngens(); ++j) {
    if (dom.orders[j] == 0) continue;
    std::vector<Int> v = vec_scale(m.col(j), dom.orders[j]);
    if (!cod.is_zero(v)) return false;
  }
  return true;
}

AbHom make_hom(FgAbGroup dom, FgAbGroup cod, IntMat m) {
  assert(hom_well_defined(dom, cod, m));
  return AbHom{std::move(dom), std::move(cod), std::move(m)};
}

AbHom compose(const AbHom& g, const AbHom& f) {
  assert(f.cod == g.dom);
  return AbHom{f.dom, g.cod, mul(g.m, f.m)};
}

AbHom hom_sub(const AbHom& a, const AbHom& b) {
  assert(a.dom == b.dom && a.cod == b.cod);
  return AbHom{a.dom, a.cod, sub(a.m, b.m)};
}

AbHom zero_hom(FgAbGroup dom, FgAbGroup cod) {
  IntMat z(cod.ngens(), dom.ngens());
  return AbHom{std::move(dom), std::move(cod), std::move(z)};
}

Subgroup subgroup_from_gens(const FgAbGroup& parent, IntMat gens) {
  assert(gens.rows == parent.ngens() || gens.cols == 0);
  if (gens.cols == 0) gens = IntMat(parent.ngens(), 0);
  // relations among the given generators: z with gens*z = 0 in parent
  IntMat rel = stacked_kernel_x(gens, order_relations(parent));
  Subgroup s;
  s.parent = parent;
  s.pres = quotient_presentation(gens.cols, rel);
  s.gens = std::move(gens);
  return s;
}

std::optional<std::vector<Int>> subgroup_solve(const FgAbGroup& parent, const IntMat& gens,
                                               const std::vector<Int>& v) {
  IntMat sys = hstack(gens, order_relations(parent));
  auto sol = solve_integer(sys, v);
  if (!sol) return std::nullopt;
  sol->resize(gens.cols);
  return sol;
}

bool subgroup_contains(const FgAbGroup& parent, const IntMat& gens, const std::vector<Int>& v) {
  return subgroup_solve(parent, gens, v).has_value();
}

bool subgroup_leq(const FgAbGroup& parent, const IntMat& gens_small, const IntMat& gens_big) {
  for (long j = 0; j < gens_small.cols; ++j)
    if (!subgroup_contains(parent, gens_big, gens_small.col(j))) return false;
  return true;
}

bool subgroup_equal(const FgAbGroup& parent, const IntMat& a, const IntMat& b) {
  return subgroup_leq(parent, a, b) && subgroup_leq(parent, b, a);
}

Subgroup hom_kernel(const AbHom& f) {
  // x with f.m * x = 0 modulo codomain orders; contains the domain order
  // relations automatically (f is well defined)
  IntMat k = stacked_kernel_x(f.m, order_relations(f.cod));
  return subgroup_from_gens(f.dom, k);
}

Subgroup hom_image(const AbHom& f) { return subgroup_from_gens(f.cod, f.m); }

PresentedQuotient hom_cokernel(const AbHom& f) {
  return quotient_presentation(f.cod.ngens(), hstack(f.m, order_relations(f.cod)));
}

std::optional<std::vector<Int>> preimage_solve(const AbHom& f, const std::vector<Int>& y) {
  IntMat sys = hstack(f.m, order_relations(f.cod));
  auto sol = solve_integer(sys, y);
  if (!sol) return std::nullopt;
  sol->resize(f.dom.ngens());
  return f.dom.reduce(*sol);
}

PresentedQuotient quotient_by(const FgAbGroup& parent, const IntMat& subgens) {
  return quotient_presentation(parent.ngens(), hstack(subgens, order_relations(parent)));
}

Subgroup torsion_subgroup(const FgAbGroup& g) {
  std::vector<long> finite;
  for (long i = 0; i < g.ngens(); ++i)
    if (g.orders[i] != 0) finite.push_back(i);
  IntMat gens(g.ngens(), static_cast<long>(finite.size()));
  for (long j = 0; j < gens.cols; ++j) gens(finite[j], j) = 1;
  return subgroup_from_gens(g, gens);
}

bool is_isomorphism(const AbHom& f) {
  if (!hom_kernel(f).group().is_trivial_group()) return false;
  return subgroup_leq(f.cod, IntMat::identity(f.cod.ngens()), f.m);
}

}  // namespace dcmv
