#include <string>
#include <vector>

#include "dcmv/mv.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace dcmv;

namespace {

QzHomData qz_hom(long sdom, long scod, std::vector<Int> tdom_orders, std::vector<Int> tcod_orders,
                 IntMat tlat, RatMat fin_fracs, IntMat fin_fin) {
  QzHomData h;
  h.sdom = sdom;
  h.scod = scod;
  h.tdom = FgAbGroup{std::move(tdom_orders)};
  h.tcod = FgAbGroup{std::move(tcod_orders)};
  h.tlat = std::move(tlat);
  h.fin_fracs = std::move(fin_fracs);
  h.fin_fin = std::move(fin_fin);
  return h;
}

}  // namespace

TEST_CASE("restriction, difference and connecting maps assemble the circle sequence") {
  Workspace ws = circle_ws(z_coeffs());
  CHECK(pretty_group(ws.z(Part::X, 1).group) == "Z");
  CHECK(pretty_group(mv_ab_group_z(ws, 0)) == "Z^2");
  CHECK(ws.space(Part::A, 1) == ws.space(Part::A, 1));  // cached, same object

  AbHom sig = mv_sigma_z(ws, 0);
  AbHom del = mv_delta_z(ws, 0);
  AbHom ds = mv_dstar_z(ws, 0);

  CHECK(hom_kernel(sig).group().is_trivial_group());
  CHECK(vec_is_zero(del.apply(sig.apply({Int(1)}))));

  // both arcs are connected, so each side restricts to the same class on
  // both intersection points and the difference of equal pairs dies
  CHECK(del.m.rows == 2);
  CHECK(del.m.cols == 2);
  CHECK(abs(del.m(0, 0)) == 1);
  CHECK(del.m.col(0) == vec_neg(del.m.col(1)));

  // the connecting map is onto the winding class and kills the diagonal
  CHECK(subgroup_equal(ds.cod, hom_image(ds).gens, IntMat::identity(1)));
  CHECK(vec_is_zero(ds.apply(del.apply({Int(1), Int(0)}))));

  // recorded matrix column equals the class of the glued witness cochain
  const ZCohomology& zd = ws.z(Part::D, 0);
  ZCochain w = mv_d2_cochain(ws, 0, zd.reps[0]);
  CHECK(ws.z(Part::X, 1).project(w) == ds.m.col(0));
  CHECK(ws.z(Part::X, 1).is_cocycle(w));

  // rational row mirrors the integral one on the torsion-free circle
  CHECK(mv_sigma_q(ws, 0).rows == 2);
  CHECK(rank_rat(mv_dstar_q(ws, 0)) == 1);
}

TEST_CASE("the exactness decision procedure separates exact from inexact") {
  std::string note;

  QzHomData zero_in = qz_hom(0, 1, {}, {}, IntMat(1, 0), RatMat(1, 0), IntMat(0, 0));
  QzHomData ident = qz_hom(1, 1, {}, {}, IntMat{{1}}, RatMat(1, 0), IntMat(0, 0));
  QzHomData dbl = qz_hom(1, 1, {}, {}, IntMat{{2}}, RatMat(1, 0), IntMat(0, 0));
  QzHomData to_zero = qz_hom(1, 0, {}, {}, IntMat(0, 1), RatMat(0, 0), IntMat(0, 0));

  // identity has no kernel; doubling keeps the half-integral points
  CHECK(qz_exact_at(zero_in, ident, &note));
  CHECK_FALSE(qz_exact_at(zero_in, dbl, &note));
  CHECK(note == "kernel generator outside the image");

  // doubling is onto the divisible group, so a full kernel is still matched
  CHECK(qz_exact_at(dbl, to_zero, &note));

  // Z/2 hitting exactly the half-integral points
  QzHomData half = qz_hom(0, 1, {Int(2)}, {}, IntMat(1, 0), RatMat{{Rat(1, 2)}}, IntMat(0, 1));
  CHECK(qz_exact_at(half, dbl, &note));
  QzHomData half0 = qz_hom(0, 1, {Int(2)}, {}, IntMat(1, 0), RatMat{{Rat(0)}}, IntMat(0, 1));
  CHECK_FALSE(qz_exact_at(half0, dbl, &note));

  // composite must vanish before anything else is considered
  CHECK_FALSE(qz_exact_at(half, ident, &note));
  CHECK(note == "composite nonzero on finite generator 0");

  // finite middle group: Z/2 → Z/4 → Z/2
  QzHomData incl = qz_hom(0, 0, {Int(2)}, {Int(4)}, IntMat(0, 0), RatMat(0, 1), IntMat{{2}});
  QzHomData proj = qz_hom(0, 0, {Int(4)}, {Int(2)}, IntMat(0, 0), RatMat(0, 1), IntMat{{1}});
  QzHomData crush = qz_hom(0, 0, {Int(4)}, {Int(2)}, IntMat(0, 0), RatMat(0, 1), IntMat{{0}});
  CHECK(qz_exact_at(incl, proj, &note));
  CHECK_FALSE(qz_exact_at(incl, crush, &note));
}

TEST_CASE("ladder rows are exact and squares commute across scenes") {
  struct Row {
    std::string name;
    Workspace ws;
    int k;
  };
  std::vector<Row> rows;
  rows.push_back({"point k=1", point_ws(), 1});
  rows.push_back({"circle k=1", circle_ws(z_coeffs()), 1});
  rows.push_back({"circle graded k=1", circle_ws(z_z2_coeffs()), 1});
  rows.push_back({"sphere k=2", sphere_ws(), 2});
  rows.push_back({"projective plane k=2", rp2_ws(), 2});
  rows.push_back({"torus k=1", torus_ws(), 1});

  for (auto& row : rows) {
    auto checks = verify_diagram2(row.ws, row.k);
    CHECK(checks.size() >= 15);
    for (const auto& c : checks) CHECK_MESSAGE(c.pass, row.name, ": ", c.name, " ", c.note);
  }
}

TEST_CASE("a flipped difference-map entry is caught") {
  Workspace ws = circle_ws(z_coeffs());
  CHECK(all_pass(verify_diagram2(ws, 1)));
  CHECK_FALSE(all_pass(verify_diagram2(ws, 1, Diagram2Fault::flip_delta_entry)));
}
