#include "dcmv/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dcmv {

std::string simplex_name(const Simplex& s, const std::vector<std::string>& vertex_names) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += vertex_names[s[i]];
  }
  return out + "}";
}

long Complex::index_of(int j, const Simplex& s) const {
  if (j < 0 || j > dim()) return -1;
  const auto& v = by_dim[j];
  auto it = std::lower_bound(v.begin(), v.end(), s);
  if (it == v.end() || *it != s) return -1;
  return it - v.begin();
}

long Subcomplex::local_index(int j, long parent_idx) const {
  if (j < 0 || j > dim()) return -1;
  const auto& v = incl[j];
  auto it = std::lower_bound(v.begin(), v.end(), parent_idx);
  if (it == v.end() || *it != parent_idx) return -1;
  return it - v.begin();
}

namespace {

// all faces of s, including s itself
void close_under_faces(const Simplex& s, std::set<Simplex>* out) {
  if (s.empty() || out->count(s)) return;
  out->insert(s);
  if (s.size() == 1) return;
  for (size_t i = 0; i < s.size(); ++i) {
    Simplex face;
    for (size_t j = 0; j < s.size(); ++j)
      if (j != i) face.push_back(s[j]);
    close_under_faces(face, out);
  }
}

Simplex to_ids(const std::vector<std::string>& labels, const std::map<std::string, int>& id_of,
               bool* ok) {
  Simplex s;
  for (const auto& l : labels) {
    auto it = id_of.find(l);
    if (it == id_of.end()) {
      *ok = false;
      return {};
    }
    s.push_back(it->second);
  }
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    *ok = false;  // repeated vertex
    return {};
  }
  *ok = true;
  return s;
}

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  return out + "}";
}

}  // namespace

ComplexRef build_complex(const std::vector<std::vector<std::string>>& simplices) {
  std::set<std::string> labels;
  for (const auto& s : simplices) {
    if (s.empty()) throw DecompositionError("empty simplex in complex");
    for (const auto& l : s) labels.insert(l);
  }
  auto c = std::make_shared<Complex>();
  std::map<std::string, int> id_of;
  for (const auto& l : labels) {
    id_of[l] = static_cast<int>(c->vertex_names.size());
    c->vertex_names.push_back(l);
  }
  std::set<Simplex> closed;
  for (const auto& s : simplices) {
    bool ok = false;
    Simplex ids = to_ids(s, id_of, &ok);
    if (!ok) throw DecompositionError("bad simplex " + join_labels(s) + " (repeated vertex)");
    close_under_faces(ids, &closed);
  }
  int maxdim = -1;
  for (const auto& s : closed) maxdim = std::max(maxdim, static_cast<int>(s.size()) - 1);
  c->by_dim.resize(maxdim + 1);
  for (const auto& s : closed) c->by_dim[s.size() - 1].push_back(s);
  // std::set iteration is lex order already; keep sorted per dim
  for (auto& v : c->by_dim) std::sort(v.begin(), v.end());
  return c;
}

Subcomplex whole_complex(ComplexRef c) {
  Subcomplex s;
  s.parent = c;
  s.incl.resize(c->by_dim.size());
  for (int j = 0; j <= c->dim(); ++j)
    for (long i = 0; i < c->count(j); ++i) s.incl[j].push_back(i);
  return s;
}

Subcomplex subcomplex_closure(ComplexRef c,
                              const std::vector<std::vector<std::string>>& simplices) {
  std::map<std::string, int> id_of;
  for (size_t i = 0; i < c->vertex_names.size(); ++i)
    id_of[c->vertex_names[i]] = static_cast<int>(i);
  std::set<Simplex> closed;
  for (const auto& s : simplices) {
    bool ok = false;
    Simplex ids = to_ids(s, id_of, &ok);
    if (!ok) throw DecompositionError("simplex " + join_labels(s) + " is not in the complex");
    close_under_faces(ids, &closed);
  }
  Subcomplex sub;
  sub.parent = c;
  sub.incl.resize(c->by_dim.size());
  for (const auto& s : closed) {
    int j = static_cast<int>(s.size()) - 1;
    long idx = c->index_of(j, s);
    if (idx < 0)
      throw DecompositionError("simplex " + simplex_name(s, c->vertex_names) +
                               " is not in the complex");
    sub.incl[j].push_back(idx);
  }
  for (auto& v : sub.incl) std::sort(v.begin(), v.end());
  return sub;
}

Decomposition make_decomposition(ComplexRef space, const std::vector<std::vector<std::string>>& a,
                                 const std::vector<std::vector<std::string>>& b) {
  Decomposition dec;
  dec.space = space;
  dec.x = whole_complex(space);
  dec.a = subcomplex_closure(space, a);
  dec.b = subcomplex_closure(space, b);
  // cover check: every simplex of X lies in A or B
  for (int j = 0; j <= space->dim(); ++j)
    for (long i = 0; i < space->count(j); ++i)
      if (!dec.a.contains(j, i) && !dec.b.contains(j, i))
        throw DecompositionError("cover failure: simplex " + space->name(j, i) +
                                 " is in neither A nor B");
  dec.d.parent = space;
  dec.d.incl.resize(space->by_dim.size());
  for (int j = 0; j <= space->dim(); ++j)
    for (long p : dec.a.incl[j])
      if (dec.b.contains(j, p)) dec.d.incl[j].push_back(p);
  return dec;
}

IntMat simplicial_coboundary(const Subcomplex& s, int j) {
  IntMat m(s.count(j + 1), s.count(j));
  for (long r = 0; r < m.rows; ++r) {
    const Simplex& tau = s.parent->by_dim[j + 1][s.parent_index(j + 1, r)];
    for (size_t i = 0; i < tau.size(); ++i) {
      Simplex face;
      for (size_t q = 0; q < tau.size(); ++q)
        if (q != i) face.push_back(tau[q]);
      long pidx = s.parent->index_of(j, face);
      assert(pidx >= 0);
      long c = s.local_index(j, pidx);
      // subcomplexes are face-closed, so every face of tau is present
      assert(c >= 0);
      m(r, c) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace dcmv
