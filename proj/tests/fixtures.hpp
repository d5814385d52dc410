#pragma once

#include <string>
#include <vector>

#include "dcmv/workspace.hpp"

// The bundled example spaces with their standard two-piece covers.

inline std::vector<std::vector<std::string>> circle_max() {
  return {{"0", "1"}, {"1", "2"}, {"0", "2"}};
}

inline std::vector<std::vector<std::string>> sphere_max() {
  return {{"0", "1", "2"}, {"0", "1", "3"}, {"0", "2", "3"}, {"1", "2", "3"}};
}

inline std::vector<std::vector<std::string>> rp2_max() {
  return {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "5"}, {"1", "4", "6"}, {"1", "5", "6"},
          {"2", "3", "6"}, {"2", "4", "5"}, {"2", "5", "6"}, {"3", "4", "5"}, {"3", "4", "6"}};
}

inline std::vector<std::vector<std::string>> torus_max() {
  return {{"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "5"}, {"2", "4", "5"}, {"3", "4", "6"},
          {"3", "5", "6"}, {"4", "5", "7"}, {"4", "6", "7"}, {"1", "5", "6"}, {"1", "5", "7"},
          {"1", "2", "6"}, {"2", "6", "7"}, {"1", "3", "7"}, {"2", "3", "7"}};
}

inline dcmv::GradedCoeffs z_coeffs() {
  dcmv::GradedCoeffs g;
  g.level[0] = dcmv::CoeffGroup{1, {}};
  return g;
}

inline dcmv::GradedCoeffs z_z2_coeffs() {
  dcmv::GradedCoeffs g;
  g.level[0] = dcmv::CoeffGroup{1, {dcmv::Int(2)}};
  return g;
}

inline dcmv::Workspace circle_ws(const dcmv::GradedCoeffs& g) {
  dcmv::ComplexRef c = dcmv::build_complex(circle_max());
  return dcmv::Workspace(dcmv::make_decomposition(c, {{"0", "1"}, {"1", "2"}}, {{"0", "2"}}), g);
}

inline dcmv::Workspace sphere_ws() {
  dcmv::ComplexRef c = dcmv::build_complex(sphere_max());
  return dcmv::Workspace(dcmv::make_decomposition(c, {{"0", "1", "2"}, {"0", "1", "3"}},
                                                  {{"0", "2", "3"}, {"1", "2", "3"}}),
                         z_coeffs());
}

inline dcmv::Workspace rp2_ws() {
  dcmv::ComplexRef c = dcmv::build_complex(rp2_max());
  return dcmv::Workspace(
      dcmv::make_decomposition(c,
                               {{"1", "2", "4"}, {"1", "4", "6"}, {"1", "5", "6"}, {"2", "3", "6"},
                                {"2", "4", "5"}, {"2", "5", "6"}, {"3", "4", "6"}},
                               {{"1", "2", "3"}, {"1", "3", "5"}, {"3", "4", "5"}}),
      z_coeffs());
}

inline dcmv::Workspace torus_ws() {
  dcmv::ComplexRef c = dcmv::build_complex(torus_max());
  return dcmv::Workspace(
      dcmv::make_decomposition(c,
                               {{"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "5"}, {"2", "4", "5"},
                                {"3", "4", "6"}, {"3", "5", "6"}},
                               {{"1", "2", "6"}, {"1", "3", "7"}, {"1", "5", "6"}, {"1", "5", "7"},
                                {"2", "3", "7"}, {"2", "6", "7"}, {"4", "5", "7"}, {"4", "6", "7"}}),
      z_coeffs());
}

inline dcmv::Workspace point_ws() {
  dcmv::ComplexRef c = dcmv::build_complex({{"p"}});
  return dcmv::Workspace(dcmv::make_decomposition(c, {{"p"}}, {}), z_coeffs());
}
