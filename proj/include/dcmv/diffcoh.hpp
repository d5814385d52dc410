#pragma once

#include <optional>
#include <vector>

#include "dcmv/report.hpp"
#include "dcmv/workspace.hpp"

namespace dcmv {

// A differential class of degree k: an integral cocycle c of degree k
// together with a rational cochain h of degree k-1.  Two pairs represent the
// same class when they differ by (δb + relation columns, -ρ(b) + δs) for an
// integral b of degree k-1 and a rational s of degree k-2.  The curvature
// ρ(c) + δh is then a well-defined closed cochain whose class is the
// characteristic class of [c] in the rational lattice.
struct DiffClass {
  ZCochain c;
  QCochain h;
};

DiffClass diff_make(Workspace& ws, Part p, int k, ZCochain c, QCochain h);
DiffClass diff_zero(Workspace& ws, Part p, int k);
DiffClass diff_add(const DiffClass& f, const DiffClass& g);
DiffClass diff_sub(const DiffClass& f, const DiffClass& g);
DiffClass diff_neg(const DiffClass& f);

// Decided by a single mixed solve: integral unknowns (b, relation
// multipliers) and a rational unknown s, coupled through -ρ(b).
bool diff_equal(Workspace& ws, Part p, int k, const DiffClass& f,
                const DiffClass& g);
bool diff_is_zero(Workspace& ws, Part p, int k, const DiffClass& f);

// Curvature ρ(c) + δh; closed, and its class lies in the degree-k lattice.
QCochain delta1(const DiffClass& f);

// Characteristic class [c], in coordinates on J^k(Z).
std::vector<Int> delta2(Workspace& ws, Part p, int k, const DiffClass& f);

// Topologically trivial classes: α of degree k-1 maps to the class of (0, α).
// Kills exactly the closed cochains with lattice class.
DiffClass i2(Workspace& ws, Part p, int k, const QCochain& alpha);

// Flat classes: a cone pair u = (m, q) of degree k-1 maps to the class with
// c = m and h = q.  Its curvature vanishes by cone-cocycle validity, and the
// value is independent of the chosen representative.
DiffClass i1(Workspace& ws, Part p, int k, const ConePair& u);

// For f with trivial characteristic class, a cochain α with i2(α) equal to f.
// Returns nothing when the characteristic class is nonzero.
std::optional<QCochain> i2_preimage(Workspace& ws, Part p, int k,
                                    const DiffClass& f);

// Componentwise restriction to a subcomplex; commutes with the four maps.
DiffClass restrict_class(Workspace& ws, Part to, int k, const DiffClass& f);

enum class Diagram1Fault {
  none,
  flip_curvature_sign,  // curvature computed as ρ(c) - δh
  drop_rho_coupling,    // equivalence solved without the -ρ(b) term
};

// Checks the degree-k hexagon on the total space of `ws`: kernel/image
// identities for i1, i2, delta1, delta2, exactness of the two four-term
// rows, naturality under restriction to A, and the group laws.  Each check
// runs on generator-derived elements plus `samples` seeded random ones; the
// random stream is derived from (seed, check index) so results do not depend
// on evaluation order.
std::vector<CheckResult> verify_diagram1(Workspace& ws, int k, long samples,
                                         unsigned long long seed,
                                         Diagram1Fault fault = Diagram1Fault::none);

}  // namespace dcmv
