#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dcmv/gluing.hpp"
#include "dcmv/mv.hpp"
#include "dcmv/scene.hpp"
#include "json.hpp"

using namespace dcmv;
using ojson = nlohmann::ordered_json;

namespace {

std::string resolve_scene(const std::string& arg) {
  auto readable = [](const std::string& p) { return std::ifstream(p).good(); };
  if (readable(arg)) return arg;
  std::vector<std::string> tried{arg};
  if (arg.find('/') == std::string::npos) {
    if (const char* env = std::getenv("DCMV_SCENE_DIR")) {
      std::string p = std::string(env) + "/" + arg;
      if (readable(p)) return p;
      tried.push_back(p);
    }
    std::string p = std::string(DCMV_SCENE_DIR) + "/" + arg;
    if (readable(p)) return p;
    tried.push_back(p);
  }
  std::string msg = "scene not found; tried";
  for (const auto& t : tried) msg += " '" + t + "'";
  throw SceneError(msg);
}

// the report order is by check name, independent of evaluation order
std::vector<CheckResult> sorted_checks(std::vector<CheckResult> checks) {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });
  return checks;
}

ojson checks_json(const std::vector<CheckResult>& checks) {
  ojson arr = ojson::array();
  for (const auto& c : checks) {
    ojson e = ojson::object();
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["note"] = c.note;
    arr.push_back(std::move(e));
  }
  return arr;
}

void print_checks_text(std::ostream& os, const std::vector<CheckResult>& checks) {
  for (const auto& c : checks) {
    os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
    if (!c.note.empty()) os << " -- " << c.note;
    os << "\n";
  }
}

long long to_ll(const Int& v) {
  return v.convert_to<long long>();  // report values are desk-scale
}

ojson int_vec_json(const std::vector<Int>& v) {
  ojson arr = ojson::array();
  for (const auto& x : v) arr.push_back(to_ll(x));
  return arr;
}

std::string int_vec_text(const std::vector<Int>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string q_pretty(long hdim) {
  if (hdim == 0) return "0";
  if (hdim == 1) return "Q";
  return "Q^" + std::to_string(hdim);
}

struct Output {
  std::string format;  // "json" or "text"
  ojson report = ojson::object();
  std::string text;

  void field(const std::string& key, const std::string& val) {
    report[key] = val;
    text += key + ": " + val + "\n";
  }
  void field(const std::string& key, long long val) {
    report[key] = val;
    text += key + ": " + std::to_string(val) + "\n";
  }
  void emit() const {
    if (format == "json")
      std::cout << report.dump(2) << "\n";
    else
      std::cout << text;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Mayer-Vietoris gluing for differential cohomology on simplicial scenes"};
  app.require_subcommand(1);

  std::string scene_arg, format = "text", ring = "int", fa_name, fb_name, out_path;
  int degree = 1;
  long samples = 100;
  unsigned long long seed = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_degree = true) {
    cmd->add_option("--scene", scene_arg, "scene file (bundled name or path)")->required();
    if (needs_degree) cmd->add_option("--degree", degree, "cohomological degree k")->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_sampling = [&](CLI::App* cmd, long default_samples) {
    samples = default_samples;
    cmd->add_option("--samples", samples, "random elements per identity");
    cmd->add_option("--seed", seed, "sampling seed")->envname("DCMV_SEED");
  };

  CLI::App* c_cohom =
      app.add_subcommand("cohomology", "print degree-k cohomology of the glued space");
  add_common(c_cohom);
  c_cohom->add_option("--ring", ring, "coefficient flavor")
      ->check(CLI::IsMember({"int", "rat", "ratmod"}));

  CLI::App* c_glue = app.add_subcommand("glue", "glue two named classes along the overlap");
  add_common(c_glue);
  c_glue->add_option("--fa", fa_name, "named class on piece A")->required();
  c_glue->add_option("--fb", fb_name, "named class on piece B")->required();
  c_glue->add_option("--out", out_path, "write the glued class to this file");

  CLI::App* c_d1 = app.add_subcommand("verify-diagram1", "check the degree-k hexagon laws");
  add_common(c_d1);
  add_sampling(c_d1, 100);

  CLI::App* c_d2 = app.add_subcommand("verify-diagram2",
                                      "check the Mayer-Vietoris ladder around degree k");
  add_common(c_d2);

  CLI::App* c_lem = app.add_subcommand("verify-lemmas", "check the gluing-theorem lemmas");
  add_common(c_lem);
  add_sampling(c_lem, 25);

  CLI::App* c_obs = app.add_subcommand("obstruction", "print the obstruction group W");
  add_common(c_obs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  auto t0 = std::chrono::steady_clock::now();
  int code = 0;
  try {
    Scene sc = parse_scene(resolve_scene(scene_arg));
    Workspace ws(sc.dec, sc.coeffs);
    CLI::App* sub = app.get_subcommands().front();

    Output out;
    out.format = format;
    out.field("command", sub->get_name());
    out.field("scene_digest", sc.digest);
    out.field("degree", degree);

    auto finish_checks = [&](std::vector<CheckResult> checks) {
      checks = sorted_checks(std::move(checks));
      bool ok = all_pass(checks);
      out.report["checks"] = checks_json(checks);
      out.report["pass"] = ok;
      std::ostringstream body;
      print_checks_text(body, checks);
      out.text += body.str() + (ok ? "result: pass\n" : "result: FAIL\n");
      code = ok ? 0 : 1;
    };

    if (sub == c_cohom) {
      out.field("ring", ring);
      if (ring == "int") {
        const ZCohomology& z = ws.z(Part::X, degree);
        out.field("group", pretty_group(z.group));
        out.report["invariant_factors"] = int_vec_json(z.group.orders);
      } else if (ring == "rat") {
        out.field("group", q_pretty(ws.q(Part::X, degree).hdim));
      } else {
        out.field("group", qz_pretty(ws.qz(Part::X, degree)));
      }
    } else if (sub == c_obs) {
      ObstructionGroup wg = obstruction_group(ws, degree);
      out.field("group", pretty_group(wg.group()));
      out.report["invariant_factors"] = int_vec_json(wg.group().orders);
      out.field("restricted_trivial_classes", pretty_group(j_o_group(ws, degree).group()));
    } else if (sub == c_d1) {
      out.field("samples", static_cast<long long>(samples));
      out.field("seed", static_cast<long long>(seed));
      finish_checks(verify_diagram1(ws, degree, samples, seed));
    } else if (sub == c_d2) {
      finish_checks(verify_diagram2(ws, degree));
    } else if (sub == c_lem) {
      out.field("samples", static_cast<long long>(samples));
      out.field("seed", static_cast<long long>(seed));
      finish_checks(verify_lemmas(ws, degree, samples, seed));
    } else if (sub == c_glue) {
      if (!sc.classes.count(fa_name)) throw SceneError("no class named '" + fa_name + "'");
      if (!sc.classes.count(fb_name)) throw SceneError("no class named '" + fb_name + "'");
      DiffClass fa = realize_class(ws, Part::A, degree, sc.classes.at(fa_name), fa_name);
      DiffClass fb = realize_class(ws, Part::B, degree, sc.classes.at(fb_name), fb_name);
      GlueCertificate cert = glue(ws, degree, fa, fb);

      out.field("fa", fa_name);
      out.field("fb", fb_name);
      out.field("verified", cert.verified() ? "true" : "false");
      out.report["verified"] = cert.verified();
      out.field("restriction_to_a_matches", cert.ok_a ? "true" : "false");
      out.report["restriction_to_a_matches"] = cert.ok_a;
      out.field("restriction_to_b_matches", cert.ok_b ? "true" : "false");
      out.report["restriction_to_b_matches"] = cert.ok_b;

      std::vector<Int> d2f = delta2(ws, Part::X, degree, cert.f);
      out.report["characteristic_class"] = int_vec_json(d2f);
      out.report["obstruction"] = int_vec_json(cert.w_coords);
      out.report["correction_class"] = int_vec_json(cert.v0);
      out.text += "characteristic class: " + int_vec_text(d2f) + "\n";
      out.text += "obstruction: " + int_vec_text(cert.w_coords) + "\n";
      out.text += "correction class: " + int_vec_text(cert.v0) + "\n";

      NamedClassData glued = class_data(cert.f);
      ojson cj = ojson::object(), hj = ojson::object();
      for (const auto& [key, vec] : glued.c) cj[key] = int_vec_json(vec);
      for (const auto& [key, vec] : glued.h) {
        ojson arr = ojson::array();
        for (const auto& x : vec) arr.push_back(to_string(x));
        hj[key] = std::move(arr);
      }
      ojson fj = ojson::object();
      fj["c"] = std::move(cj);
      fj["h"] = std::move(hj);
      out.report["f"] = std::move(fj);
      out.text += "glued class: " + out.report["f"].dump() + "\n";

      if (!out_path.empty()) write_class_file(out_path, cert.f, degree);
      code = cert.verified() ? 0 : 1;
    }

    out.emit();
  } catch (const IncoherentPairError& e) {
    std::cerr << "incoherent pair: " << e.what() << "\n";
    code = 1;
  } catch (const InternalSolveError& e) {
    std::cerr << "internal solver failure: " << e.what() << "\n";
    code = 1;
  } catch (const SceneError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    code = 2;
  }

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  std::cerr << "# elapsed_ms: " << ms << "\n";
  return code;
}
