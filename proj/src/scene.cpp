#include "dcmv/scene.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace dcmv {

namespace {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw SceneError(where + ": " + what);
}

std::vector<std::vector<std::string>> simplex_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of simplices");
  std::vector<std::vector<std::string>> out;
  for (size_t i = 0; i < j.size(); ++i) {
    const json& s = j[i];
    if (!s.is_array() || s.empty()) bad(where + "/" + std::to_string(i), "expected a nonempty array of vertex labels");
    std::vector<std::string> verts;
    for (const auto& v : s) {
      if (!v.is_string()) bad(where + "/" + std::to_string(i), "vertex labels must be strings");
      verts.push_back(v.get<std::string>());
    }
    out.push_back(std::move(verts));
  }
  return out;
}

std::vector<std::string> split_key(const std::string& key) {
  std::istringstream in(key);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

// locate the simplex named by a class-data key inside the part
std::pair<int, long> locate(const Subcomplex& sub, const std::string& key,
                            const std::string& where) {
  const Complex& c = *sub.parent;
  Simplex s;
  for (const auto& label : split_key(key)) {
    auto it = std::find(c.vertex_names.begin(), c.vertex_names.end(), label);
    if (it == c.vertex_names.end()) bad(where, "unknown vertex '" + label + "'");
    s.push_back(static_cast<int>(it - c.vertex_names.begin()));
  }
  if (s.empty()) bad(where, "empty simplex key");
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) bad(where, "repeated vertex");
  int j = static_cast<int>(s.size()) - 1;
  long parent_idx = j <= c.dim() ? c.index_of(j, s) : -1;
  if (parent_idx < 0) bad(where, "simplex '" + key + "' is not in the complex");
  long local = sub.local_index(j, parent_idx);
  if (local < 0) bad(where, "simplex '" + key + "' is not in this piece");
  return {j, local};
}

const CochainSpace::Block* block_of_dim(const CochainSpace& sp, int j) {
  for (const auto& bl : sp.blocks)
    if (bl.j == j) return &bl;
  return nullptr;
}

std::string simplex_key(const Subcomplex& sub, int j, long local) {
  const Complex& c = *sub.parent;
  const Simplex& s = c.by_dim[j][sub.parent_index(j, local)];
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += c.vertex_names[s[i]];
  }
  return out;
}

long long small_of(const Int& v, const std::string& where) {
  static const Int lo(std::numeric_limits<long long>::min());
  static const Int hi(std::numeric_limits<long long>::max());
  if (v < lo || v > hi) bad(where, "integer out of interchange range");
  return v.convert_to<long long>();
}

NamedClassData parse_class_data(const json& j, const std::string& where) {
  NamedClassData d;
  if (!j.is_object()) bad(where, "expected an object");
  for (const auto& [key, val] : j.items()) {
    if (key == "c") {
      if (!val.is_object()) bad(where + "/c", "expected simplex -> integer-vector map");
      for (const auto& [simp, vec] : val.items()) {
        if (!vec.is_array()) bad(where + "/c/" + simp, "expected an integer vector");
        std::vector<Int> v;
        for (const auto& x : vec) {
          if (!x.is_number_integer()) bad(where + "/c/" + simp, "entries must be integers");
          v.push_back(Int(x.get<long long>()));
        }
        d.c[simp] = std::move(v);
      }
    } else if (key == "h") {
      if (!val.is_object()) bad(where + "/h", "expected simplex -> rational-vector map");
      for (const auto& [simp, vec] : val.items()) {
        if (!vec.is_array()) bad(where + "/h/" + simp, "expected a vector of \"p/q\" strings");
        std::vector<Rat> v;
        for (const auto& x : vec) {
          if (!x.is_string()) bad(where + "/h/" + simp, "entries must be \"p/q\" strings");
          try {
            v.push_back(parse_rat(x.get<std::string>()));
          } catch (const std::exception&) {
            bad(where + "/h/" + simp, "malformed rational '" + x.get<std::string>() + "'");
          }
        }
        d.h[simp] = std::move(v);
      }
    } else if (key != "degree") {
      bad(where, "unknown field '" + key + "'");
    }
  }
  return d;
}

ojson class_to_json(const DiffClass& f) {
  NamedClassData d = class_data(f);
  ojson out = ojson::object();
  ojson c = ojson::object(), h = ojson::object();
  for (const auto& [key, vec] : d.c) {
    ojson arr = ojson::array();
    for (const auto& x : vec) arr.push_back(small_of(x, "class integer part"));
    c[key] = std::move(arr);
  }
  for (const auto& [key, vec] : d.h) {
    ojson arr = ojson::array();
    for (const auto& x : vec) arr.push_back(to_string(x));
    h[key] = std::move(arr);
  }
  out["c"] = std::move(c);
  out["h"] = std::move(h);
  return out;
}

}  // namespace

std::string fnv1a64(const std::string& bytes) {
  unsigned long long hash = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 1099511628211ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

Scene parse_scene_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError(std::string("scene is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SceneError("/: scene must be a JSON object");
  for (const auto& [key, val] : j.items()) {
    (void)val;
    if (key != "complex" && key != "decomposition" && key != "coefficients" && key != "classes")
      bad("/" + key, "unknown field");
  }
  if (!j.contains("complex")) bad("/complex", "missing");
  if (!j.contains("decomposition")) bad("/decomposition", "missing");
  if (!j.contains("coefficients")) bad("/coefficients", "missing");

  Scene sc;
  sc.digest = fnv1a64(text);

  try {
    sc.complex = build_complex(simplex_list(j["complex"], "/complex"));
  } catch (const std::exception& e) {
    bad("/complex", e.what());
  }

  const json& dec = j["decomposition"];
  if (!dec.is_object() || !dec.contains("a") || !dec.contains("b"))
    bad("/decomposition", "expected {\"a\": [...], \"b\": [...]}");
  try {
    sc.dec = make_decomposition(sc.complex, simplex_list(dec["a"], "/decomposition/a"),
                                simplex_list(dec["b"], "/decomposition/b"));
  } catch (const DecompositionError& e) {
    bad("/decomposition", e.what());
  }

  const json& co = j["coefficients"];
  if (!co.is_array()) bad("/coefficients", "expected an array");
  for (size_t i = 0; i < co.size(); ++i) {
    std::string where = "/coefficients/" + std::to_string(i);
    const json& e = co[i];
    if (!e.is_object() || !e.contains("degree")) bad(where, "expected {degree, rank, torsion}");
    if (!e["degree"].is_number_integer()) bad(where + "/degree", "expected an integer");
    int d = e["degree"].get<int>();
    if (sc.coeffs.level.count(d)) bad(where, "degree " + std::to_string(d) + " appears twice");
    CoeffGroup g;
    if (e.contains("rank")) {
      if (!e["rank"].is_number_integer() || e["rank"].get<long long>() < 0)
        bad(where + "/rank", "expected a nonnegative integer");
      g.rank = e["rank"].get<long>();
    }
    if (e.contains("torsion")) {
      if (!e["torsion"].is_array()) bad(where + "/torsion", "expected an array of invariant factors");
      for (const auto& t : e["torsion"]) {
        if (!t.is_number_integer() || t.get<long long>() < 2)
          bad(where + "/torsion", "invariant factors must be integers >= 2");
        g.torsion.push_back(Int(t.get<long long>()));
      }
    }
    sc.coeffs.level[d] = std::move(g);
  }

  if (j.contains("classes")) {
    if (!j["classes"].is_object()) bad("/classes", "expected name -> class map");
    for (const auto& [name, val] : j["classes"].items())
      sc.classes[name] = parse_class_data(val, "/classes/" + name);
  }
  return sc;
}

Scene parse_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SceneError("cannot open scene file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_scene_text(buf.str());
  } catch (const SceneError& e) {
    throw SceneError(path + ": " + e.what());
  }
}

DiffClass realize_class(Workspace& ws, Part p, int k, const NamedClassData& d,
                        const std::string& name) {
  SpaceRef sk = ws.space(p, k);
  SpaceRef skm1 = ws.space(p, k - 1);
  ZCochain c = z_zero(sk);
  for (const auto& [key, vec] : d.c) {
    std::string where = "class " + name + " c/" + key;
    auto [j, local] = locate(sk->s, key, where);
    const auto* bl = block_of_dim(*sk, j);
    if (!bl || bl->g.trivial()) bad(where, "no coefficients in this degree");
    if (static_cast<long>(vec.size()) != bl->g.ngens())
      bad(where, "expected " + std::to_string(bl->g.ngens()) + " entries");
    for (long g = 0; g < bl->g.ngens(); ++g) c.v[sk->coord(*bl, local, g)] = vec[g];
  }
  QCochain h = q_zero(skm1);
  for (const auto& [key, vec] : d.h) {
    std::string where = "class " + name + " h/" + key;
    auto [j, local] = locate(skm1->s, key, where);
    const auto* bl = block_of_dim(*skm1, j);
    if (!bl || bl->g.rank == 0) bad(where, "no free coefficients in this degree");
    if (static_cast<long>(vec.size()) != bl->g.rank)
      bad(where, "expected " + std::to_string(bl->g.rank) + " entries");
    for (long g = 0; g < bl->g.rank; ++g)
      h.v[skm1->free_of_full[skm1->coord(*bl, local, g)]] = vec[g];
  }
  if (!ws.z(p, k).is_cocycle(c)) throw SceneError("class " + name + ": integer part is not closed");
  return diff_make(ws, p, k, z_normalize(std::move(c)), std::move(h));
}

NamedClassData class_data(const DiffClass& f) {
  NamedClassData d;
  const CochainSpace& sk = *f.c.sp;
  for (const auto& bl : sk.blocks)
    for (long s = 0; s < bl.nsimp; ++s) {
      std::vector<Int> vec(bl.g.ngens());
      bool nonzero = false;
      for (long g = 0; g < bl.g.ngens(); ++g) {
        vec[g] = f.c.v[sk.coord(bl, s, g)];
        nonzero = nonzero || vec[g] != 0;
      }
      if (nonzero) d.c[simplex_key(sk.s, bl.j, s)] = std::move(vec);
    }
  const CochainSpace& skm1 = *f.h.sp;
  for (const auto& bl : skm1.blocks)
    for (long s = 0; s < bl.nsimp; ++s) {
      std::vector<Rat> vec(bl.g.rank);
      bool nonzero = false;
      for (long g = 0; g < bl.g.rank; ++g) {
        vec[g] = f.h.v[skm1.free_of_full[skm1.coord(bl, s, g)]];
        nonzero = nonzero || vec[g] != 0;
      }
      if (nonzero) d.h[simplex_key(skm1.s, bl.j, s)] = std::move(vec);
    }
  return d;
}

void write_class_file(const std::string& path, const DiffClass& f, int k) {
  ojson out = ojson::object();
  out["degree"] = k;
  ojson cls = class_to_json(f);
  out["c"] = std::move(cls["c"]);
  out["h"] = std::move(cls["h"]);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw SceneError("cannot write class file '" + path + "'");
  os << out.dump(2) << "\n";
}

std::pair<NamedClassData, int> parse_class_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SceneError("cannot open class file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw SceneError(path + ": not valid JSON: " + e.what());
  }
  if (!j.is_object() || !j.contains("degree") || !j["degree"].is_number_integer())
    throw SceneError(path + ": expected {degree, c, h}");
  return {parse_class_data(j, path), j["degree"].get<int>()};
}

}  // namespace dcmv
