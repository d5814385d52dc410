#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcmv/diffcoh.hpp"

namespace dcmv {

struct SceneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sparse cochain data as stored in scene files: keys are space-separated
// vertex labels, values are coefficient vectors on that simplex.  The
// integer part lists one entry per generator of the coefficient level, the
// rational part one per infinite-order generator, as "p/q" strings.
struct NamedClassData {
  std::map<std::string, std::vector<Int>> c;
  std::map<std::string, std::vector<Rat>> h;
};

struct Scene {
  ComplexRef complex;
  Decomposition dec;
  GradedCoeffs coeffs;
  std::map<std::string, NamedClassData> classes;
  std::string digest;  // fnv1a-64 of the source bytes, 16 hex digits
};

std::string fnv1a64(const std::string& bytes);

// Text is the authoritative input; the file overload adds the path to error
// messages.  Errors carry the JSON pointer of the offending field.
Scene parse_scene_text(const std::string& text);
Scene parse_scene(const std::string& path);

// Build the class the data names on the given part and degree.  Unlisted
// simplices carry zero; listed ones must belong to the part, their vectors
// must match the coefficient block, and the integer part must be closed.
DiffClass realize_class(Workspace& ws, Part p, int k, const NamedClassData& d,
                        const std::string& name);

// Sparse form of a class, dropping zero simplices; realize_class inverts it.
NamedClassData class_data(const DiffClass& f);

// Class files written by `glue --out`: the named data plus its degree.
void write_class_file(const std::string& path, const DiffClass& f, int k);
std::pair<NamedClassData, int> parse_class_file(const std::string& path);

}  // namespace dcmv
