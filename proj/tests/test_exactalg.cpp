#include <random>

#include "dcmv/fgab.hpp"
#include "dcmv/linalg.hpp"
#include "dcmv/snf.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dcmv;

namespace {

IntMat random_mat(std::mt19937_64& rng, long rows, long cols, long lo, long hi) {
  IntMat m(rows, cols);
  for (auto& e : m.a) e = Int(static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)) + lo);
  return m;
}

std::vector<Int> iv(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Rat> rv(std::initializer_list<Rat> xs) { return std::vector<Rat>(xs); }

}  // namespace

TEST_CASE("smith form of a fixed matrix") {
  IntMat m{{Int(2), Int(4)}, {Int(6), Int(8)}};
  SnfResult f = smith_normal_form(m);
  CHECK(snf_consistent(m, f));
  CHECK(f.rank == 2);
  CHECK(f.diag(0) == 2);
  CHECK(f.diag(1) == 4);
  CHECK(abs_det(f.U) == 1);
  CHECK(abs_det(f.V) == 1);
}

TEST_CASE("smith form edge shapes") {
  for (const IntMat& m : {IntMat(0, 0), IntMat(3, 0), IntMat(0, 3), IntMat::zero(2, 5),
                          IntMat::identity(4), IntMat{{Int(0), Int(7)}}}) {
    SnfResult f = smith_normal_form(m);
    CHECK(snf_consistent(m, f));
  }
  SnfResult f = smith_normal_form(IntMat{{Int(0), Int(7)}});
  CHECK(f.diag(0) == 7);
  CHECK(f.rank == 1);
}

TEST_CASE("smith form against determinantal divisors") {
  std::mt19937_64 rng(20260819);
  for (int trial = 0; trial < 60; ++trial) {
    long r = 1 + static_cast<long>(rng() % 4), c = 1 + static_cast<long>(rng() % 4);
    IntMat m = random_mat(rng, r, c, -9, 9);
    SnfResult f = smith_normal_form(m);
    REQUIRE(snf_consistent(m, f));
    std::vector<Int> expect = oracle::invariant_factors_by_minors(m);
    REQUIRE(f.rank == static_cast<long>(expect.size()));
    for (long i = 0; i < f.rank; ++i) CHECK(f.diag(i) == expect[i]);
  }
}

TEST_CASE("smith form against first-pivot reduction") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    long r = 1 + static_cast<long>(rng() % 5), c = 1 + static_cast<long>(rng() % 7);
    IntMat m = random_mat(rng, r, c, -20, 20);
    SnfResult f = smith_normal_form(m);
    REQUIRE(snf_consistent(m, f));
    std::vector<Int> expect = oracle::snf_diag_basic(m);
    for (long i = 0; i < std::min(r, c); ++i) CHECK(f.diag(i) == expect[i]);
  }
}

TEST_CASE("integer solve and kernel") {
  IntMat m{{Int(2), Int(4)}, {Int(6), Int(8)}};
  auto x = solve_integer(m, iv({2, 6}));
  REQUIRE(x.has_value());
  CHECK(mul(m, *x) == iv({2, 6}));
  CHECK_FALSE(solve_integer(m, iv({1, 0})).has_value());

  IntMat sing{{Int(1), Int(-1)}, {Int(1), Int(-1)}};
  auto s = solve_integer_full(sing, iv({3, 3}));
  REQUIRE(s.has_value());
  CHECK(mul(sing, s->x) == iv({3, 3}));
  REQUIRE(s->kernel.cols == 1);
  CHECK(mul(sing, s->kernel.col(0)) == iv({0, 0}));
  // shifted solutions stay solutions
  std::vector<Int> shifted = vec_add(s->x, vec_scale(s->kernel.col(0), Int(5)));
  CHECK(mul(sing, shifted) == iv({3, 3}));
  CHECK_FALSE(solve_integer(sing, iv({3, 4})).has_value());
}

TEST_CASE("kernel basis spans all integer solutions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    long r = 1 + static_cast<long>(rng() % 3), c = 1 + static_cast<long>(rng() % 5);
    IntMat m = random_mat(rng, r, c, -6, 6);
    IntMat k = integer_kernel_basis(m);
    for (long j = 0; j < k.cols; ++j) CHECK(vec_is_zero(mul(m, k.col(j))));
    // any random kernel member must be an integer combination of the basis
    if (k.cols > 0) {
      std::vector<Int> comb(static_cast<size_t>(m.cols), Int(0));
      for (long j = 0; j < k.cols; ++j)
        comb = vec_add(comb, vec_scale(k.col(j), Int(static_cast<long>(rng() % 9) - 4)));
      CHECK(solve_integer(k, comb).has_value());
    }
  }
}

TEST_CASE("lattice basis and membership") {
  IntMat gens{{Int(2), Int(0), Int(2)}, {Int(0), Int(3), Int(3)}};
  IntMat b = lattice_basis(gens);
  CHECK(b.cols == 2);
  CHECK(lattice_contains(b, iv({2, 0})));
  CHECK(lattice_contains(b, iv({0, 3})));
  CHECK(lattice_contains(b, iv({2, 3})));
  CHECK(lattice_contains(b, iv({4, -3})));
  CHECK_FALSE(lattice_contains(b, iv({1, 0})));
  CHECK_FALSE(lattice_contains(b, iv({2, 1})));
}

TEST_CASE("rational solve, kernel, rank") {
  RatMat a{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
  CHECK(rank_rat(a) == 1);
  auto x = solve_rational(a, rv({Rat(3), Rat(6)}));
  REQUIRE(x.has_value());
  CHECK(mul(a, *x) == rv({Rat(3), Rat(6)}));
  CHECK_FALSE(solve_rational(a, rv({Rat(3), Rat(7)})).has_value());
  RatMat k = rational_kernel_basis(a);
  REQUIRE(k.cols == 1);
  CHECK(vec_is_zero(mul(a, k.col(0))));
  RatMat ln = left_nullspace(a);
  REQUIRE(ln.rows == 1);
  CHECK(mul(ln, a).is_zero());

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    IntMat m = random_mat(rng, 2 + static_cast<long>(rng() % 3), 2 + static_cast<long>(rng() % 3), -7, 7);
    CHECK(rank_rat(to_rat(m)) == oracle::rank_via_elimination(m));
  }
}

TEST_CASE("mixed integer-rational solve") {
  // 2x = 3 has no integer solution even with no rational unknowns
  CHECK_FALSE(solve_mixed(RatMat{{Rat(2)}}, RatMat(1, 0), rv({Rat(3)})).has_value());
  // 2x + y = 1/3 with rational y: any x works, y absorbs the rest
  auto s = solve_mixed(RatMat{{Rat(2)}}, RatMat{{Rat(1)}}, rv({Rat(1, 3)}));
  REQUIRE(s.has_value());
  CHECK(Rat(2) * Rat(s->x[0]) + s->y[0] == Rat(1, 3));
  CHECK(s->x_kernel.cols == 1);

  // x(1,1) + y(0,1) = (2, 1/2): x forced to 2 by the first row
  auto t = solve_mixed(RatMat{{Rat(1)}, {Rat(1)}}, RatMat{{Rat(0)}, {Rat(1)}}, rv({Rat(2), Rat(1, 2)}));
  REQUIRE(t.has_value());
  CHECK(t->x[0] == 2);
  CHECK(t->y[0] == Rat(-3, 2));
  CHECK(t->x_kernel.cols == 0);

  // x(2,2) + y(0,1) = (3, 0): first row forces 2x = 3, impossible
  CHECK_FALSE(
      solve_mixed(RatMat{{Rat(2)}, {Rat(2)}}, RatMat{{Rat(0)}, {Rat(1)}}, rv({Rat(3), Rat(0)})).has_value());

  // kernel shifts remain solvable in the rational part
  auto u = solve_mixed(RatMat{{Rat(1), Rat(1)}}, RatMat{{Rat(1, 2)}}, rv({Rat(5)}));
  REQUIRE(u.has_value());
  REQUIRE(u->x_kernel.cols >= 1);
  std::vector<Int> x2 = vec_add(u->x, u->x_kernel.col(0));
  std::vector<Rat> y2 = mixed_rational_part(RatMat{{Rat(1), Rat(1)}}, RatMat{{Rat(1, 2)}}, rv({Rat(5)}), x2);
  CHECK(Rat(x2[0]) + Rat(x2[1]) + Rat(1, 2) * y2[0] == Rat(5));
}

TEST_CASE("quotient presentation invariants") {
  // Z^2 / <(2,6),(4,8)> has invariant factors 2, 4
  PresentedQuotient q = quotient_presentation(2, IntMat{{Int(2), Int(4)}, {Int(6), Int(8)}});
  GroupShape s = group_shape(q.group);
  CHECK(s.free_rank == 0);
  CHECK(s.torsion == iv({2, 4}));
  // relation columns map to zero
  CHECK(q.group.is_zero(q.coords(iv({2, 6}))));
  CHECK(q.group.is_zero(q.coords(iv({4, 8}))));
  // coords/rep round trip
  std::vector<Int> c = q.coords(iv({1, 0}));
  CHECK(q.coords(q.rep(c)) == c);

  // Z^2 / <(1,1)> is free of rank 1 and identifies (1,0) with (0,-1)
  PresentedQuotient d = quotient_presentation(2, IntMat{{Int(1)}, {Int(1)}});
  CHECK(group_shape(d.group) == GroupShape{1, {}});
  CHECK(d.coords(iv({1, 0})) == d.coords(iv({0, -1})));
  CHECK_FALSE(d.coords(iv({1, 0})) == d.coords(iv({0, 1})));
}

TEST_CASE("group shape and printing") {
  CHECK(pretty_group(FgAbGroup{{}}) == "0");
  CHECK(pretty_group(FgAbGroup{iv({1})}) == "0");
  CHECK(pretty_group(FgAbGroup{iv({0})}) == "Z");
  CHECK(pretty_group(FgAbGroup{iv({0, 0, 2, 4})}) == "Z^2 + Z/2 + Z/4");
  // non-chain orders canonicalize: Z/2 + Z/3 = Z/6
  CHECK(pretty_group(FgAbGroup{iv({2, 3})}) == "Z/6");
  CHECK(pretty_group(FgAbGroup{iv({2, 0, 3})}) == "Z + Z/6");
  CHECK(pretty_group(FgAbGroup{iv({4, 6})}) == "Z/2 + Z/12");
}

TEST_CASE("hom well-definedness, kernel, image, cokernel") {
  FgAbGroup z2{iv({0, 0})};
  AbHom f = make_hom(z2, z2, IntMat{{Int(1), Int(-1)}, {Int(1), Int(-1)}});
  CHECK(group_shape(hom_kernel(f).group()) == GroupShape{1, {}});
  CHECK(group_shape(hom_image(f).group()) == GroupShape{1, {}});
  CHECK(group_shape(hom_cokernel(f).group) == GroupShape{1, {}});

  FgAbGroup zmod2{iv({2})}, zmod4{iv({4})};
  CHECK(hom_well_defined(zmod2, zmod4, IntMat{{Int(2)}}));
  CHECK_FALSE(hom_well_defined(zmod2, zmod4, IntMat{{Int(1)}}));
  AbHom g = make_hom(zmod2, zmod4, IntMat{{Int(2)}});
  CHECK(hom_kernel(g).group().is_trivial_group());
  CHECK(group_shape(hom_image(g).group()) == GroupShape{0, {Int(2)}});

  // surjection Z -> Z/3 and a preimage
  AbHom p = make_hom(FgAbGroup{iv({0})}, FgAbGroup{iv({3})}, IntMat{{Int(1)}});
  auto pre = preimage_solve(p, iv({2}));
  REQUIRE(pre.has_value());
  CHECK(p.apply(*pre) == iv({2}));
  CHECK(is_isomorphism(make_hom(z2, z2, IntMat{{Int(0), Int(1)}, {Int(1), Int(0)}})));
  CHECK_FALSE(is_isomorphism(make_hom(FgAbGroup{iv({0})}, FgAbGroup{iv({0})}, IntMat{{Int(2)}})));
}

TEST_CASE("subgroup calculus") {
  FgAbGroup z2{iv({0, 0})};
  IntMat even{{Int(2), Int(0)}, {Int(0), Int(2)}};
  IntMat skew{{Int(2), Int(1)}, {Int(0), Int(1)}};
  CHECK_FALSE(subgroup_equal(z2, even, skew));
  IntMat a{{Int(1), Int(1)}, {Int(1), Int(-1)}};
  IntMat b{{Int(1), Int(0)}, {Int(1), Int(2)}};
  CHECK(subgroup_equal(z2, a, b));
  CHECK(subgroup_contains(z2, even, iv({4, -2})));
  CHECK_FALSE(subgroup_contains(z2, even, iv({1, 0})));

  // inside Z/4: <2> has order 2
  FgAbGroup z4{iv({4})};
  Subgroup h = subgroup_from_gens(z4, IntMat{{Int(2)}});
  CHECK(group_shape(h.group()) == GroupShape{0, {Int(2)}});
  CHECK(subgroup_contains(z4, h.gens, iv({2})));
  CHECK_FALSE(subgroup_contains(z4, h.gens, iv({1})));

  CHECK(group_shape(torsion_subgroup(FgAbGroup{iv({0, 2, 3})}).group()) == GroupShape{0, {Int(6)}});

  // quotient of Z^2 by the even sublattice
  PresentedQuotient q = quotient_by(z2, even);
  CHECK(group_shape(q.group) == GroupShape{0, {Int(2), Int(2)}});
}

TEST_CASE("subgroup generator representatives") {
  FgAbGroup z4{iv({4})};
  Subgroup h = subgroup_from_gens(z4, IntMat{{Int(2)}});
  REQUIRE(h.group().ngens() == 1);
  std::vector<Int> rep = h.gen_rep(0);
  CHECK(subgroup_contains(z4, h.gens, rep));
  CHECK_FALSE(z4.is_zero(rep));
}
