#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "dcmv/mat.hpp"

namespace dcmv {

using Simplex = std::vector<int>;  // strictly increasing vertex ids

std::string simplex_name(const Simplex& s, const std::vector<std::string>& vertex_names);

struct Complex {
  std::vector<std::string> vertex_names;     // id -> label, sorted by label
  std::vector<std::vector<Simplex>> by_dim;  // by_dim[j]: lex sorted, unique, face-closed

  int dim() const { return static_cast<int>(by_dim.size()) - 1; }
  long count(int j) const {
    return (j < 0 || j > dim()) ? 0 : static_cast<long>(by_dim[j].size());
  }
  long index_of(int j, const Simplex& s) const;  // -1 if absent
  std::string name(int j, long idx) const { return simplex_name(by_dim[j][idx], vertex_names); }
};

using ComplexRef = std::shared_ptr<const Complex>;

// face closure of the given simplices; vertex ids assigned by sorted label
ComplexRef build_complex(const std::vector<std::vector<std::string>>& simplices);

struct Subcomplex {
  ComplexRef parent;
  std::vector<std::vector<long>> incl;  // incl[j]: sorted parent indices

  int dim() const { return static_cast<int>(incl.size()) - 1; }
  long count(int j) const {
    return (j < 0 || j > dim()) ? 0 : static_cast<long>(incl[j].size());
  }
  long parent_index(int j, long local) const { return incl[j][local]; }
  long local_index(int j, long parent_idx) const;  // -1 if absent
  bool contains(int j, long parent_idx) const { return local_index(j, parent_idx) >= 0; }
  std::string name(int j, long local) const { return parent->name(j, parent_index(j, local)); }
  bool same_as(const Subcomplex& o) const { return parent == o.parent && incl == o.incl; }
};

Subcomplex whole_complex(ComplexRef c);
// simplices given by vertex labels; face closure applied; error if any simplex
// is not in the parent complex
Subcomplex subcomplex_closure(ComplexRef c, const std::vector<std::vector<std::string>>& simplices);

struct Decomposition {
  ComplexRef space;
  Subcomplex x, a, b, d;  // x = whole complex, d = a ∩ b
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// validates A ∪ B = X after face closure; D is the intersection
Decomposition make_decomposition(ComplexRef space, const std::vector<std::vector<std::string>>& a,
                                 const std::vector<std::vector<std::string>>& b);

// signed incidence matrix of δ: C^j(S) → C^{j+1}(S); rows are (j+1)-simplices
IntMat simplicial_coboundary(const Subcomplex& s, int j);

}  // namespace dcmv
