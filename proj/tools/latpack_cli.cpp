// latpack command-line interface: lattice census, exact classification,
// Golay verification, multiplier tables, and the perturbed-ball experiment.
#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>

#include "latpack/acceptance.hpp"
#include "latpack/body.hpp"
#include "latpack/eutaxy.hpp"
#include "latpack/golay.hpp"
#include "latpack/harmonics.hpp"
#include "latpack/lattice.hpp"
#include "latpack/parallel.hpp"
#include "latpack/pessimum.hpp"

namespace {

using nlohmann::ordered_json;
using namespace latpack;

void emit(const ordered_json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(path);
  out << j.dump(2) << "\n";
}

ordered_json lattice_record(const std::string& name) {
  Lattice lat = lattice_by_name(name);
  MinimalVectors mv = minimal_vectors(lat);
  ordered_json j;
  j["name"] = lat.name;
  j["dim"] = lat.dim;
  j["det_squared"] = det_exact(lat.gram).str();
  j["min_norm"] = mv.norm.str();
  j["kissing"] = mv.count;
  return j;
}

int cmd_lattice(const std::string& name, const std::string& out) {
  emit(lattice_record(name), out);
  return 0;
}

int cmd_classify(const std::string& name, bool redundancy, bool no_transitive,
                 const std::string& out) {
  Lattice lat = lattice_by_name(name);
  MinimalVectors mv = minimal_vectors(lat);
  VectorConfiguration cfg = unit_configuration(lat, mv);
  ClassifyOptions opts;
  opts.check_redundancy = redundancy;
  opts.transitive = !no_transitive;
  if (redundancy && lat.dim == 24 && mv.count == 196560)
    opts.certificate_subset = leech_two_coordinate_pairs(lat, mv);
  EutaxyReport rep = classify(cfg, opts);

  ordered_json j;
  j["perfect"] = rep.perfect;
  j["eutaxy"] = to_string(rep.eutaxy);
  j["extreme"] = rep.extreme;
  j["minimally_extreme"] = rep.minimally_extreme;
  j["redundantly_semi_eutactic"] =
      rep.redundantly_semi_eutactic ? ordered_json(*rep.redundantly_semi_eutactic)
                                    : ordered_json(nullptr);
  j["redundantly_extreme"] = rep.redundantly_extreme
                                 ? ordered_json(*rep.redundantly_extreme)
                                 : ordered_json(nullptr);
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : rep.coefficients) coeffs.push_back(c.str());
  j["coefficients"] = coeffs;
  emit(j, out);
  return 0;
}

int cmd_golay(const std::string& out) {
  GolayCode code = build_golay();
  ordered_json weights;
  for (auto& [w, c] : weight_distribution(code)) weights[std::to_string(w)] = c;
  ordered_json j;
  j["weights"] = weights;
  emit(j, out);
  return 0;
}

int cmd_harmonics_cl(int max_l, const std::string& out) {
  std::ostringstream os;
  os << "l,c_exact,c_float,scaled_deviation\n";
  for (int l = 0; l <= max_l; ++l) {
    Rational c = multiplier_c_exact(l);
    double cf = c.to_double();
    os << l << "," << c.str() << "," << cf << ","
       << std::fabs(cf - 1.0) * std::sqrt(static_cast<double>(std::max(l, 1))) << "\n";
  }
  if (out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(out);
    f << os.str();
  }
  return 0;
}

int cmd_harmonics_mod8(int max_l) {
  auto residues = legendre_q_mod8(max_l);
  bool ok = true;
  for (int l = 0; l <= max_l; ++l) {
    std::cout << l << " " << residues[l] << "\n";
    if (l >= 3 && residues[l] != 4) ok = false;
  }
  std::cout << (ok ? "PASS" : "FAIL") << ": residue 4 for all l >= 3\n";
  return ok ? 0 : 1;
}

int cmd_pessimum(std::size_t seeds, int bandlimit, double epsilon, std::size_t rotations,
                 const std::string& json_out, const std::string& csv_out) {
  std::vector<PessimumVerdict> verdicts(seeds);
  std::vector<std::string> errors(seeds);
  parallel_for(seeds, [&](std::size_t i) {
    std::uint64_t seed = i + 1;
    try {
      RadialBody body = random_body(seed, bandlimit, epsilon);
      verdicts[i] = verify_pessimum(body, rotations, 60, seed);
      verdicts[i].seed = seed;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  });

  ordered_json records = ordered_json::array();
  std::ostringstream csv;
  csv << "seed,l1_norm,phi_lower,phi_ball,delta,"
         "r00,r01,r02,r10,r11,r12,r20,r21,r22,alpha,admissible_checked\n";
  bool all_ok = true;
  for (std::size_t i = 0; i < seeds; ++i) {
    if (!errors[i].empty()) {
      std::cerr << "seed " << i + 1 << " failed: " << errors[i] << "\n";
      all_ok = false;
      continue;
    }
    const auto& v = verdicts[i];
    ordered_json rec;
    rec["seed"] = v.seed;
    rec["l1_norm"] = v.l1_norm;
    rec["phi_lower"] = v.phi_lower;
    rec["phi_ball"] = phi_ball3();
    rec["delta"] = v.delta;
    ordered_json rot = ordered_json::array();
    for (std::size_t k = 0; k < 9; ++k) rot.push_back(v.rotation.e[k]);
    rec["rotation"] = rot;
    rec["alpha"] = v.alpha;
    rec["admissible_checked"] = v.checked_vectors;
    records.push_back(rec);
    csv << v.seed << "," << v.l1_norm << "," << v.phi_lower << "," << phi_ball3() << ","
        << v.delta;
    for (std::size_t k = 0; k < 9; ++k) csv << "," << v.rotation.e[k];
    csv << "," << v.alpha << "," << v.checked_vectors << "\n";
    if (!v.ok) {
      std::cerr << "seed " << v.seed << ": phi_lower " << v.phi_lower
                << " does not exceed phi(B3)\n";
      all_ok = false;
    }
  }
  ordered_json j;
  j["records"] = records;
  emit(j, json_out);
  if (!csv_out.empty()) {
    std::ofstream f(csv_out);
    f << csv.str();
  }
  return all_ok ? 0 : 1;
}

int cmd_report(const std::string& out) {
  auto results = run_acceptance();
  ordered_json criteria = ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    ordered_json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["seconds"] = r.seconds;
    c["detail"] = r.detail;
    criteria.push_back(c);
    all = all && r.pass;
    std::cerr << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name
              << ") [" << r.seconds << "s] " << r.detail << "\n";
    if (!r.pass) std::cerr << "failed criterion: " << r.name << "\n";
  }
  ordered_json j;
  j["pass"] = all;
  j["criteria"] = criteria;
  emit(j, out);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latpack: exact lattice classification and perturbed-ball packing"};
  app.set_config("--config");
  app.require_subcommand(1);

  std::string out_path;

  auto* lat = app.add_subcommand("lattice", "lattice constructions and census");
  lat->require_subcommand(1);
  std::string lat_name;
  auto* lat_info = lat->add_subcommand("info", "exact invariants of a lattice");
  lat_info->add_option("name", lat_name, "lattice name or Gram file")->required();
  lat_info->add_option("--json", out_path, "write JSON here instead of stdout");
  auto* lat_minvecs = lat->add_subcommand("minvecs", "minimal-vector census");
  lat_minvecs->add_option("name", lat_name, "lattice name or Gram file")->required();
  lat_minvecs->add_option("--json", out_path, "write JSON here instead of stdout");

  auto* cls = app.add_subcommand("classify", "exact eutaxy/perfection classification");
  std::string cls_name;
  bool redundancy = false, no_transitive = false;
  cls->add_option("name", cls_name, "lattice name or Gram file")->required();
  cls->add_flag("--redundancy", redundancy, "also decide redundant variants");
  cls->add_flag("--no-transitive", no_transitive, "test every pair deletion");
  cls->add_option("--json", out_path, "write JSON here instead of stdout");

  auto* gol = app.add_subcommand("golay", "Golay code utilities");
  auto* gol_verify = gol->add_subcommand("verify", "weight distribution self-check");
  gol_verify->add_option("--json", out_path, "write JSON here instead of stdout");

  auto* har = app.add_subcommand("harmonics", "multiplier tables");
  int max_l = 12;
  auto* har_cl = har->add_subcommand("cl", "CSV table of multiplier coefficients");
  har_cl->add_option("--max", max_l, "largest degree")->required();
  har_cl->add_option("--csv", out_path, "write CSV here instead of stdout");
  auto* har_mod8 = har->add_subcommand("mod8", "integer-recurrence residues");
  har_mod8->add_option("--max", max_l, "largest degree")->required();

  auto* pes = app.add_subcommand("pessimum", "perturbed-ball experiment");
  auto* pes_run = pes->add_subcommand("run", "seeded bodies, rotation search, verdicts");
  std::size_t seeds = 5, rotations = 2000;
  int bandlimit = 4;
  double epsilon = 0.01;
  std::string json_out, csv_out;
  pes_run->add_option("--seeds", seeds, "number of seeded bodies")->required();
  pes_run->add_option("--bandlimit", bandlimit, "perturbation band limit (even, 4..12)");
  pes_run->add_option("--epsilon", epsilon, "shell bound, at most 0.01");
  pes_run->add_option("--rotations", rotations, "rotation samples per body");
  pes_run->add_option("--json", json_out, "JSON output path");
  pes_run->add_option("--csv", csv_out, "CSV output path");

  auto* rep = app.add_subcommand("report", "acceptance reports");
  auto* rep_all = rep->add_subcommand("all", "run the full acceptance suite");
  rep_all->add_option("--json", out_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (lat_info->parsed()) return cmd_lattice(lat_name, out_path);
    if (lat_minvecs->parsed()) return cmd_lattice(lat_name, out_path);
    if (cls->parsed()) return cmd_classify(cls_name, redundancy, no_transitive, out_path);
    if (gol_verify->parsed()) return cmd_golay(out_path);
    if (har_cl->parsed()) return cmd_harmonics_cl(max_l, out_path);
    if (har_mod8->parsed()) return cmd_harmonics_mod8(max_l);
    if (pes_run->parsed())
      return cmd_pessimum(seeds, bandlimit, epsilon, rotations, json_out, csv_out);
    if (rep_all->parsed()) return cmd_report(out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << app.help();
  return 2;
}
