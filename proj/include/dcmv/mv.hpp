#pragma once

#include <string>
#include <vector>

#include "dcmv/report.hpp"
#include "dcmv/workspace.hpp"

namespace dcmv {

// ---- integral row -----------------------------------------------------
FgAbGroup mv_ab_group_z(Workspace& ws, int j);
AbHom mv_sigma_z(Workspace& ws, int j);  // J^j(X) → J^j(A) ⊕ J^j(B)
AbHom mv_delta_z(Workspace& ws, int j);  // J^j(A) ⊕ J^j(B) → J^j(D)
AbHom mv_dstar_z(Workspace& ws, int j);  // J^j(D) → J^{j+1}(X)

// Connecting-map witness: extend a cocycle on D by zero over A, apply δ,
// glue with the zero cochain on B.  The result is a cocycle on X.
ZCochain mv_d2_cochain(Workspace& ws, int j, const ZCochain& y);

// ---- rational row (matrices on harmonic-basis coordinates) ------------
RatMat mv_sigma_q(Workspace& ws, int j);
RatMat mv_delta_q(Workspace& ws, int j);
RatMat mv_dstar_q(Workspace& ws, int j);
QCochain mv_d3_cochain(Workspace& ws, int j, const QCochain& y);

// ---- rational-mod-integral row -----------------------------------------
// Connecting map on cone pairs; degree j on D goes to degree j+1 on X.
ConePair mv_d1_pair(Workspace& ws, int j, const ConePair& p);

// A homomorphism (Q/Z)^{s_dom} ⊕ T_dom → (Q/Z)^{s_cod} ⊕ T_cod in canonical
// coordinates.  The divisible block is an integer matrix (integrality is
// forced: a fractional entry would not be constant on representatives), and
// each finite generator carries its full image.
struct QzHomData {
  long sdom = 0, scod = 0;
  FgAbGroup tdom, tcod;
  IntMat tlat;       // scod × sdom
  RatMat fin_fracs;  // scod × tdom generators, entries in [0,1)
  IntMat fin_fin;    // tcod generators × tdom generators
  QzCoords apply(const QzCoords& x) const;
};

QzHomData mv_sigma_qz(Workspace& ws, int j);
QzHomData mv_delta_qz(Workspace& ws, int j);
QzHomData mv_dstar_qz(Workspace& ws, int j);

// Decides Im(f) = Ker(g) exactly for composable maps of groups of the shape
// (Q/Z)^s ⊕ T.  On failure, a human-readable reason is written to *note.
bool qz_exact_at(const QzHomData& f, const QzHomData& g, std::string* note);

enum class Diagram2Fault { none, flip_delta_entry };

// Checks the three-row ladder around degree k: exactness of each row at the
// four displayed positions and commutation (up to one consistent sign per
// square, which is reported in the note) of the six connecting squares.
std::vector<CheckResult> verify_diagram2(Workspace& ws, int k,
                                         Diagram2Fault fault = Diagram2Fault::none);

}  // namespace dcmv
