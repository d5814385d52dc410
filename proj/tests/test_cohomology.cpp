#include <map>
#include <random>
#include <set>

#include "dcmv/cohomology.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace dcmv;

namespace {

std::vector<std::vector<std::string>> circle_max() { return {{"0", "1"}, {"1", "2"}, {"0", "2"}}; }

std::vector<std::vector<std::string>> sphere_max() {
  return {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}};
}

std::vector<std::vector<std::string>> rp2_max() {
  return {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "5"}, {"1", "4", "6"}, {"1", "5", "6"},
          {"2", "3", "6"}, {"2", "4", "5"}, {"2", "5", "6"}, {"3", "4", "5"}, {"3", "4", "6"}};
}

// 7-vertex torus: triangles (i, i+1, i+3) and (i, i+2, i+3) cyclically
std::vector<std::vector<std::string>> torus_max() {
  std::vector<std::vector<std::string>> out;
  auto v = [](int i) { return std::to_string((i - 1) % 7 + 1); };
  for (int i = 1; i <= 7; ++i) {
    out.push_back({v(i), v(i + 1), v(i + 3)});
    out.push_back({v(i), v(i + 2), v(i + 3)});
  }
  return out;
}

GradedCoeffs z_coeffs() {
  GradedCoeffs g;
  g.level[0] = CoeffGroup{1, {}};
  return g;
}

GradedCoeffs z_z2_coeffs() {
  GradedCoeffs g;
  g.level[0] = CoeffGroup{1, {Int(2)}};
  return g;
}

struct Theory {
  ComplexRef c;
  GradedCoeffs coeffs;
  std::map<int, SpaceRef> sp;

  SpaceRef space(int k) {
    auto it = sp.find(k);
    if (it != sp.end()) return it->second;
    return sp[k] = make_space(whole_complex(c), k, coeffs);
  }
  ZCohomology z(int k) { return z_cohomology(space(k - 1), space(k), space(k + 1)); }
  QCohomology q(int k) { return q_cohomology(space(k - 1), space(k), space(k + 1)); }
};

}  // namespace

TEST_CASE("integral cohomology groups match the reference Smith computation") {
  struct Row {
    const char* name;
    std::vector<std::vector<std::string>> maximal;
  };
  std::vector<Row> rows = {{"circle", circle_max()},
                           {"sphere", sphere_max()},
                           {"rp2", rp2_max()},
                           {"torus", torus_max()}};
  for (const auto& row : rows) {
    CAPTURE(row.name);
    oracle::PlainComplex pc = oracle::plain_build(row.maximal);
    Theory th{build_complex(row.maximal), z_coeffs(), {}};
    for (int k = 0; k <= 3; ++k) {
      CAPTURE(k);
      ZCohomology zc = th.z(k);
      CHECK(group_shape(zc.group) == oracle::ref_z_shape(pc, k));
      for (const auto& rep : zc.reps) CHECK(zc.is_cocycle(rep));
    }
  }

  CHECK(pretty_group(Theory{build_complex(circle_max()), z_coeffs(), {}}.z(1).group) == "Z");
  CHECK(pretty_group(Theory{build_complex(sphere_max()), z_coeffs(), {}}.z(2).group) == "Z");
  CHECK(pretty_group(Theory{build_complex(rp2_max()), z_coeffs(), {}}.z(2).group) == "Z/2");
  CHECK(pretty_group(Theory{build_complex(torus_max()), z_coeffs(), {}}.z(1).group) == "Z^2");
}

TEST_CASE("graded coefficients split across levels") {
  // Z + Z/2 in level 0 on the circle
  oracle::PlainComplex pc = oracle::plain_build(circle_max());
  Theory th{build_complex(circle_max()), z_z2_coeffs(), {}};
  for (int k = 0; k <= 2; ++k) {
    CAPTURE(k);
    CHECK(group_shape(th.z(k).group) == oracle::ref_graded_shape(pc, z_z2_coeffs(), k));
    CHECK(th.q(k).hdim == oracle::ref_q_dim(pc, z_z2_coeffs(), k));
  }
  CHECK(pretty_group(th.z(1).group) == "Z + Z/2");

  // two free levels: degree-1 classes pick up both H^1(level 0) and H^0(level 1)
  GradedCoeffs two;
  two.level[0] = CoeffGroup{1, {}};
  two.level[1] = CoeffGroup{1, {}};
  Theory th2{build_complex(circle_max()), two, {}};
  for (int k = 0; k <= 2; ++k) {
    CAPTURE(k);
    CHECK(group_shape(th2.z(k).group) == oracle::ref_graded_shape(pc, two, k));
    CHECK(th2.q(k).hdim == oracle::ref_q_dim(pc, two, k));
  }
  CHECK(pretty_group(th2.z(1).group) == "Z^2");

  // torsion in level 0 meets torsion in the space
  oracle::PlainComplex prp2 = oracle::plain_build(rp2_max());
  Theory th3{build_complex(rp2_max()), z_z2_coeffs(), {}};
  for (int k = 0; k <= 3; ++k) {
    CAPTURE(k);
    CHECK(group_shape(th3.z(k).group) == oracle::ref_graded_shape(prp2, z_z2_coeffs(), k));
  }
}

TEST_CASE("class coordinates round trip and respect addition") {
  std::mt19937_64 rng(277);
  std::uniform_int_distribution<int> coeff(-5, 5);
  struct Row {
    std::vector<std::vector<std::string>> maximal;
    int k;
  };
  std::vector<Row> rows = {{circle_max(), 1}, {rp2_max(), 2}, {torus_max(), 1}, {sphere_max(), 2}};
  for (const auto& row : rows) {
    Theory th{build_complex(row.maximal), z_coeffs(), {}};
    ZCohomology zc = th.z(row.k);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Int> x(zc.group.ngens()), y(zc.group.ngens());
      for (auto& e : x) e = coeff(rng);
      for (auto& e : y) e = coeff(rng);
      x = zc.group.reduce(x);
      y = zc.group.reduce(y);
      CHECK(zc.project(zc.lift(x)) == x);
      CHECK(zc.project(z_add(zc.lift(x), zc.lift(y))) == zc.group.reduce(vec_add(x, y)));
    }
    // a coboundary projects to zero
    SpaceRef below = th.space(row.k - 1);
    std::vector<Int> v(below->dim_full);
    for (auto& e : v) e = coeff(rng);
    CHECK(zc.group.is_zero(zc.project(z_delta(ZCochain{below, v}, th.space(row.k)))));
  }
}

TEST_CASE("rational classes, primitives and the projection basis") {
  Theory th{build_complex(torus_max()), z_coeffs(), {}};
  QCohomology qc = th.q(1);
  REQUIRE(qc.hdim == 2);
  for (long j = 0; j < qc.hbasis.cols; ++j)
    CHECK(qc.is_cocycle(QCochain{qc.spk, qc.hbasis.col(j)}));

  // lift/project round trip
  std::vector<Rat> coords = {Rat(3, 2), Rat(-1, 7)};
  CHECK(qc.project(qc.lift(coords)) == coords);

  // an exact cochain has a primitive and a zero class
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Rat> v(th.space(0)->dim_free);
  for (auto& e : v) e = Rat(coeff(rng), 1 + std::abs(coeff(rng)));
  QCochain below{th.space(0), v};
  QCochain exact = q_delta(below, th.space(1));
  auto prim = qc.primitive(exact);
  REQUIRE(prim.has_value());
  CHECK(q_is_zero(q_sub(q_delta(*prim, th.space(1)), exact)));
  for (const auto& e : qc.project(exact)) CHECK(e == 0);

  // a cocycle with a nonzero class has no primitive
  QCochain gen{qc.spk, qc.hbasis.col(0)};
  CHECK_FALSE(qc.primitive(gen).has_value());
}

TEST_CASE("the integral-image lattice is full rank with closed witnesses") {
  struct Row {
    const char* name;
    std::vector<std::vector<std::string>> maximal;
    int k;
    long hdim;
  };
  std::vector<Row> rows = {
      {"circle", circle_max(), 1, 1}, {"sphere", sphere_max(), 2, 1},
      {"torus", torus_max(), 1, 2},   {"rp2", rp2_max(), 2, 0},
      {"rp2", rp2_max(), 1, 0},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    CAPTURE(row.k);
    Theory th{build_complex(row.maximal), z_coeffs(), {}};
    ZCohomology zc = th.z(row.k);
    QCohomology qc = th.q(row.k);
    LatticeData lat = make_lattice(zc, qc);
    CHECK(lat.hdim == row.hdim);
    CHECK(lat.basis.cols == row.hdim);
    for (long j = 0; j < row.hdim; ++j) {
      CHECK(qc.is_cocycle(lat.witnesses[j]));
      CHECK(qc.project(lat.witnesses[j]) == lat.basis.col(j));
      CHECK(in_lambda_j(qc, lat, lat.witnesses[j]));
      // half a basis class leaves the lattice
      CHECK_FALSE(in_lambda_j(qc, lat, q_scale(lat.witnesses[j], Rat(1, 2))));
    }
  }

  // every integral class lands in the lattice; torsion generators land on zero
  Theory tors{build_complex(circle_max()), z_z2_coeffs(), {}};
  ZCohomology zc = tors.z(1);
  QCohomology qc = tors.q(1);
  LatticeData lat = make_lattice(zc, qc);
  RatMat ch = ch_matrix(zc, qc);
  REQUIRE(ch.rows == 1);
  REQUIRE(ch.cols == zc.group.ngens());
  for (long j = 0; j < ch.cols; ++j) {
    CHECK(lat.contains(ch.col(j)));
    if (zc.group.orders[j] != 0) CHECK(vec_is_zero(ch.col(j)));
  }
  CHECK(in_lambda_j(qc, lat, rho(zc.lift(zc.group.reduce({Int(3), Int(1)})))));
}
