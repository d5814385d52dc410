#pragma once

#include <stdexcept>
#include <vector>

#include "dcmv/diffcoh.hpp"
#include "dcmv/mv.hpp"

namespace dcmv {

// The inputs do not satisfy the compatibility hypothesis.
struct IncoherentPairError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solve that the theory guarantees to succeed failed; indicates a bug.
struct InternalSolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The obstruction group W = ch(J^{k-1}(D;Z)) / ch(Im Δ₂), presented on the
// degree-(k-1) lattice basis of D.  Isomorphic to the quotient of the
// lattice-class cocycles on D by the restrictions from A and B; the witness
// cochains realize coordinates on that side of the bridge.
struct ObstructionGroup {
  int k = 0;
  SpaceRef sp;                     // cochains in degree k-1 on D
  LatticeData lat;                 // degree k-1 lattice of D
  IntMat rel;                      // lattice coords of ch(Δ₂ generator images)
  PresentedQuotient pq;            // Z^{lat.hdim} / rel
  std::vector<QCochain> witnesses; // closed cochains on D, one per generator

  FgAbGroup group() const { return pq.group; }
};

struct ObstructionClass {
  const ObstructionGroup* parent = nullptr;
  std::vector<Int> coords;
};

ObstructionGroup obstruction_group(Workspace& ws, int k);

// Class of αA|D − αB|D in W.  The difference must be closed with lattice
// class (throws IncoherentPairError otherwise); the value is independent of
// shifting either input by a lattice-class cocycle on its own piece.
ObstructionClass compute_w(Workspace& ws, const ObstructionGroup& wg,
                           const QCochain& alpha_a, const QCochain& alpha_b);

// A closed cochain on D whose class realizes the given coordinates.
QCochain w_witness(const ObstructionGroup& wg, const std::vector<Int>& coords);

// {v ∈ J^k(X;Z) : v|A = 0 = v|B}, computed as ker Σ; equals Im d* by the
// Mayer-Vietoris sequence.
Subgroup j_o_group(Workspace& ws, int k);

// Ω(v): lift v to a differential class h, flat-trivialize h|A and h|B, and
// take w of the trivializations.  A nonzero seed re-randomizes every internal
// choice (the lift representative, the rational part, the preimage solves);
// the result is invariant.
ObstructionClass omega(Workspace& ws, const ObstructionGroup& wg,
                       const std::vector<Int>& v, unsigned long long seed = 0);

// Ω as a homomorphism on J^k_o / b(Im d₁*), together with the pieces it is
// built from.  Construction verifies well-definedness and surjectivity.
struct OmegaHom {
  ObstructionGroup wg;
  Subgroup jo;            // ⊆ J^k(X;Z)
  IntMat bd1_gens;        // generators of b(Im d₁*) in J^k(X) coordinates
  PresentedQuotient quo;  // J^k_o (canonical generators) / b(Im d₁*)
  AbHom hom;              // quo.group → W

  // representative in J^k(X) coordinates of an element of the quotient
  std::vector<Int> parent_coords(const std::vector<Int>& qcoords) const;
};

OmegaHom omega_hom(Workspace& ws, int k);

// v ∈ J^k_o with Ω(v) = wval; total since Ω is onto.
std::vector<Int> solve_omega(Workspace& ws, const OmegaHom& oh,
                             const ObstructionClass& wval);

// Full trace of the gluing run, auditable step by step: the class v glued
// from the characteristic classes, its lift h, the flat trivializations α,
// the obstruction w, the correction v₀ with lift h₀ and trivializations γ,
// the lattice-class pieces β, and the glued cochain θ.
struct GlueCertificate {
  DiffClass fa, fb;
  DiffClass f;
  std::vector<Int> v;
  DiffClass h;
  QCochain alpha_a, alpha_b;
  std::vector<Int> w_coords;
  std::vector<Int> v0;
  DiffClass h0;
  QCochain gamma_a, gamma_b;
  QCochain beta_a, beta_b;
  QCochain theta;
  bool ok_a = false, ok_b = false;

  bool verified() const { return ok_a && ok_b; }
};

// Glue fa (on A) and fb (on B) into f on X with f|A = fa and f|B = fb.
// Requires diff_equal(fa|D, fb|D).  Pass a prebuilt OmegaHom to amortize the
// setup over many calls.
GlueCertificate glue(Workspace& ws, int k, const DiffClass& fa, const DiffClass& fb,
                     const OmegaHom* oh = nullptr);

// Constructive checks of the six supporting facts: the presentation bridge,
// the torsion kernel of the rational comparison, the rational trace identity
// and surjectivity mod torsion, vanishing on flat connecting images, the
// triangle of induced isomorphisms, and the torsion bijection.
std::vector<CheckResult> verify_lemmas(Workspace& ws, int k, long samples,
                                       unsigned long long seed);

}  // namespace dcmv
