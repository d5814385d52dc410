#pragma once

#include <optional>
#include <string>

#include "dcmv/linalg.hpp"

namespace dcmv {

// Finitely generated abelian group presented as a direct sum of cyclic
// factors: generator i has order orders[i] (0 = infinite).  Elements are
// coordinate vectors reduced into [0, order) per finite generator.
struct FgAbGroup {
  std::vector<Int> orders;

  long ngens() const { return static_cast<long>(orders.size()); }

  std::vector<Int> reduce(std::vector<Int> v) const {
    assert(v.size() == orders.size());
    for (size_t i = 0; i < v.size(); ++i)
      if (orders[i] != 0) v[i] = mod_floor(v[i], orders[i]);
    return v;
  }

  std::vector<Int> zero() const { return std::vector<Int>(orders.size(), Int(0)); }

  bool is_zero(const std::vector<Int>& v) const { return vec_is_zero(reduce(v)); }

  bool is_trivial_group() const {
    for (const auto& o : orders)
      if (o != 1) return false;
    return true;
  }

  bool operator==(const FgAbGroup& o) const { return orders == o.orders; }
};

// relation columns o_i * e_i for each finite-order generator
IntMat order_relations(const FgAbGroup& g);

// (free_rank, invariant factors >= 2 in a divisibility chain)
struct GroupShape {
  long free_rank = 0;
  std::vector<Int> torsion;
  bool operator==(const GroupShape& o) const = default;
};
GroupShape group_shape(const FgAbGroup& g);

// "0", "Z", "Z^2 + Z/2 + Z/4", ...
std::string pretty_group(const FgAbGroup& g);

FgAbGroup direct_sum(const FgAbGroup& a, const FgAbGroup& b);
IntMat block_diag(const IntMat& a, const IntMat& b);

// Z^n / column span of R, canonical generators.
// coords(x) = group.reduce(proj * x); a representative of generator i is lift.col(i).
struct PresentedQuotient {
  FgAbGroup group;  // canonical: torsion in a divisibility chain, then free
  IntMat proj;      // ngens x n
  IntMat lift;      // n x ngens

  std::vector<Int> coords(const std::vector<Int>& x) const { return group.reduce(mul(proj, x)); }
  std::vector<Int> rep(const std::vector<Int>& c) const { return mul(lift, c); }
};

PresentedQuotient quotient_presentation(long n, const IntMat& relations);

// homomorphism dom -> cod given on generators by the columns of m
struct AbHom {
  FgAbGroup dom, cod;
  IntMat m;

  std::vector<Int> apply(const std::vector<Int>& x) const { return cod.reduce(mul(m, x)); }
};

AbHom make_hom(FgAbGroup dom, FgAbGroup cod, IntMat m);  // asserts well-definedness
bool hom_well_defined(const FgAbGroup& dom, const FgAbGroup& cod, const IntMat& m);

AbHom compose(const AbHom& g, const AbHom& f);  // g after f
AbHom hom_sub(const AbHom& a, const AbHom& b);
AbHom zero_hom(FgAbGroup dom, FgAbGroup cod);

// subgroup of parent spanned by the columns of gens, presented on those columns
struct Subgroup {
  FgAbGroup parent;
  IntMat gens;
  PresentedQuotient pres;  // over Z^{gens.cols}

  FgAbGroup group() const { return pres.group; }
  // representative in parent coords of canonical subgroup generator i
  std::vector<Int> gen_rep(long i) const { return parent.reduce(mul(gens, pres.rep(unit(i)))); }

 private:
  std::vector<Int> unit(long i) const {
    std::vector<Int> e(pres.group.ngens(), Int(0));
    e[i] = 1;
    return e;
  }
};

Subgroup subgroup_from_gens(const FgAbGroup& parent, IntMat gens);

// coefficients z with  gens * z = v  in parent (nullopt if v is outside)
std::optional<std::vector<Int>> subgroup_solve(const FgAbGroup& parent, const IntMat& gens,
                                               const std::vector<Int>& v);
bool subgroup_contains(const FgAbGroup& parent, const IntMat& gens, const std::vector<Int>& v);
bool subgroup_leq(const FgAbGroup& parent, const IntMat& gens_small, const IntMat& gens_big);
bool subgroup_equal(const FgAbGroup& parent, const IntMat& a, const IntMat& b);

Subgroup hom_kernel(const AbHom& f);
Subgroup hom_image(const AbHom& f);
PresentedQuotient hom_cokernel(const AbHom& f);
std::optional<std::vector<Int>> preimage_solve(const AbHom& f, const std::vector<Int>& y);

// parent / <subgens>
PresentedQuotient quotient_by(const FgAbGroup& parent, const IntMat& subgens);

Subgroup torsion_subgroup(const FgAbGroup& g);

bool is_isomorphism(const AbHom& f);

}  // namespace dcmv
