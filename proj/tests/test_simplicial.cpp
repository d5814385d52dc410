#include <random>

#include "dcmv/cochain.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dcmv;

namespace {

std::vector<std::vector<std::string>> tri_edges() { return {{"v0", "v1"}, {"v1", "v2"}, {"v0", "v2"}}; }

std::vector<std::vector<std::string>> tetra_faces() {
  return {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}};
}

GradedCoeffs z_coeffs() {
  GradedCoeffs g;
  g.level[0] = CoeffGroup{1, {}};
  return g;
}

}  // namespace

TEST_CASE("complex building and face closure") {
  ComplexRef c = build_complex(tri_edges());
  CHECK(c->dim() == 1);
  CHECK(c->count(0) == 3);
  CHECK(c->count(1) == 3);
  CHECK(c->index_of(1, {0, 1}) >= 0);
  CHECK(c->index_of(1, {0, 2}) >= 0);
  CHECK(c->index_of(2, {0, 1, 2}) == -1);

  ComplexRef t = build_complex(tetra_faces());
  CHECK(t->dim() == 2);
  CHECK(t->count(0) == 4);
  CHECK(t->count(1) == 6);
  CHECK(t->count(2) == 4);
}

TEST_CASE("coboundary matrices") {
  ComplexRef pt = build_complex({{"p"}});
  IntMat d0 = simplicial_coboundary(whole_complex(pt), 0);
  CHECK(d0.rows == 0);
  CHECK(d0.cols == 1);

  ComplexRef edge = build_complex({{"0", "1"}});
  IntMat de = simplicial_coboundary(whole_complex(edge), 0);
  REQUIRE(de.rows == 1);
  REQUIRE(de.cols == 2);
  CHECK(de(0, 0) == -1);
  CHECK(de(0, 1) == 1);

  ComplexRef tri = build_complex(tri_edges());
  IntMat dt = simplicial_coboundary(whole_complex(tri), 0);
  CHECK(dt.rows == 3);
  CHECK(dt.cols == 3);
  CHECK(oracle::rank_via_elimination(dt) == 2);

  ComplexRef tet = build_complex(tetra_faces());
  Subcomplex w = whole_complex(tet);
  IntMat a = simplicial_coboundary(w, 0), b = simplicial_coboundary(w, 1);
  CHECK(mul(b, a).is_zero());
}

TEST_CASE("decomposition validation") {
  ComplexRef tri = build_complex(tri_edges());
  Decomposition dec = make_decomposition(tri, {{"v0", "v1"}, {"v1", "v2"}}, {{"v0", "v2"}});
  CHECK(dec.d.count(0) == 2);
  CHECK(dec.d.count(1) == 0);
  CHECK(dec.d.contains(0, tri->index_of(0, {0})));
  CHECK(dec.d.contains(0, tri->index_of(0, {2})));
  CHECK_FALSE(dec.d.contains(0, tri->index_of(0, {1})));

  // degenerate cover A = X, B = empty
  Decomposition full = make_decomposition(tri, tri_edges(), {});
  CHECK(full.b.count(0) == 0);
  CHECK(full.d.count(0) == 0);

  // tetrahedron boundary split into two wedges meets in a 4-cycle
  ComplexRef tet = build_complex(tetra_faces());
  Decomposition td =
      make_decomposition(tet, {{"0", "1", "2"}, {"0", "1", "3"}}, {{"0", "2", "3"}, {"1", "2", "3"}});
  CHECK(td.d.count(0) == 4);
  CHECK(td.d.count(1) == 4);
  CHECK(td.d.count(2) == 0);
  for (const char* e : {"02", "03", "12", "13"}) {
    Simplex s{e[0] - '0', e[1] - '0'};
    CHECK(td.d.contains(1, tet->index_of(1, s)));
  }

  CHECK_THROWS_WITH_AS(make_decomposition(tri, {{"v0", "v1"}}, {{"v0", "v2"}}),
                       doctest::Contains("{v1,v2}"), DecompositionError);
}

TEST_CASE("graded cochain space layout") {
  ComplexRef tri = build_complex(tri_edges());
  GradedCoeffs g;
  g.level[0] = CoeffGroup{1, {Int(2)}};  // Z + Z/2
  g.level[1] = CoeffGroup{1, {}};        // Z
  // degree 1: edges at level 0 (Z + Z/2), vertices at level 1 (Z)
  SpaceRef sp = make_space(whole_complex(tri), 1, g);
  CHECK(sp->dim_full == 3 * 2 + 3 * 1);
  CHECK(sp->dim_free == 3 * 1 + 3 * 1);
  long torsion_coords = 0;
  for (const auto& o : sp->orders)
    if (o != 0) ++torsion_coords;
  CHECK(torsion_coords == 3);
  CHECK(relation_cols(*sp).cols == 3);

  // degree too negative for any level: empty space
  SpaceRef none = make_space(whole_complex(tri), -1, g);
  CHECK(none->dim_full == 0);
}

TEST_CASE("integer cochain arithmetic and normalization") {
  ComplexRef tri = build_complex(tri_edges());
  GradedCoeffs g;
  g.level[0] = CoeffGroup{1, {Int(3)}};
  SpaceRef sp = make_space(whole_complex(tri), 0, g);
  ZCochain c = z_zero(sp);
  c.v[1] = 5;  // torsion coord of the first vertex
  CHECK(sp->orders[1] == 3);
  ZCochain n = z_normalize(c);
  CHECK(n.v[1] == 2);
  CHECK_FALSE(z_is_zero(c));
  c.v[1] = 6;
  CHECK(z_is_zero(c));
  // rho drops torsion coordinates
  c.v[0] = 4;
  QCochain q = rho(c);
  CHECK(q.v[0] == Rat(4));
  CHECK(static_cast<long>(q.v.size()) == sp->dim_free);
}

TEST_CASE("delta commutes with restriction and squares to zero") {
  ComplexRef tet = build_complex(tetra_faces());
  Decomposition dec =
      make_decomposition(tet, {{"0", "1", "2"}, {"0", "1", "3"}}, {{"0", "2", "3"}, {"1", "2", "3"}});
  GradedCoeffs g = z_coeffs();
  SpaceRef x0 = make_space(dec.x, 0, g), x1 = make_space(dec.x, 1, g), x2 = make_space(dec.x, 2, g);
  SpaceRef a0 = make_space(dec.a, 0, g), a1 = make_space(dec.a, 1, g);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    ZCochain c = z_zero(x0);
    for (auto& e : c.v) e = Int(static_cast<long>(rng() % 11) - 5);
    CHECK(z_is_zero(z_delta(z_delta(c, x1), x2)));
    CHECK(z_equal(z_restrict(z_delta(c, x1), a1), z_delta(z_restrict(c, a0), a1)));
  }
}

TEST_CASE("restriction and gluing round trips") {
  ComplexRef tri = build_complex(tri_edges());
  Decomposition dec = make_decomposition(tri, {{"v0", "v1"}, {"v1", "v2"}}, {{"v0", "v2"}});
  GradedCoeffs g = z_coeffs();
  SpaceRef sx = make_space(dec.x, 0, g), sa = make_space(dec.a, 0, g), sb = make_space(dec.b, 0, g),
           sd = make_space(dec.d, 0, g);

  // restriction to the whole complex is the identity
  ZCochain c = z_zero(sx);
  c.v = {Int(1), Int(0), Int(0)};  // vertices sorted v0, v1, v2
  CHECK(z_equal(z_restrict(c, sx), c));

  // (c|A)|D = (c|B)|D
  CHECK(z_equal(z_restrict(z_restrict(c, sa), sd), z_restrict(z_restrict(c, sb), sd)));

  // glue(c|A, c|B) = c
  ZCochain glued = z_glue(z_restrict(c, sa), z_restrict(c, sb), sx, sd);
  CHECK(z_equal(glued, c));

  // the circle example: a = (v0=1, v1=0, v2=0) on A, b = (v0=1, v2=0) on B
  ZCochain a = z_restrict(c, sa), b = z_restrict(c, sb);
  CHECK(z_glue(a, b, sx, sd).v == c.v);

  // mismatch on D is rejected with the offending simplex named
  ZCochain bad = b;
  bad.v[0] += 1;
  CHECK_THROWS_WITH_AS(z_glue(a, bad, sx, sd), doctest::Contains("{v0}"), DecompositionError);

  // rational version
  QCochain qa = q_zero(sa), qb = q_zero(sb);
  qa.v[0] = Rat(1, 2);  // value at v0 on A
  CHECK_THROWS_AS(q_glue(qa, qb, sx, sd), DecompositionError);
  qb.v[0] = Rat(1, 2);
  QCochain qg = q_glue(qa, qb, sx, sd);
  CHECK(qg.v[0] == Rat(1, 2));

  // zero-extension then restriction is the identity on D
  QCochain qd = q_zero(sd);
  qd.v[1] = Rat(7, 3);
  CHECK(q_restrict(q_extend_zero(qd, sa), sd).v == qd.v);
}
