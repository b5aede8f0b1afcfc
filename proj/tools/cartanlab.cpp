// cartanlab: catalog access, classification, Cartan projection sampling and
// properness reports for subgroups of SO(2,n) and SL(3,R).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cartanlab/io.hpp"

using namespace cartanlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconclusive = 3;

std::uint64_t default_seed() {
  if (const char* s = std::getenv("CARTANLAB_SEED")) {
    try {
      return std::stoull(s);
    } catch (...) {
      throw Error(ErrorCode::parse_error, "CARTANLAB_SEED is not an unsigned integer");
    }
  }
  return 42;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::parse_error, "cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::parse_error, "cannot write '" + path + "'");
  out << text;
}

// A catalog label, or a path to a subalgebra file.
Subalgebra resolve(const std::string& arg, int n, const ExemplarParams& prm = {}) {
  if (std::filesystem::exists(arg)) return parse_subalgebra(read_file(arg));
  return catalog_entry(arg, n, prm);
}

ExemplarParams params_from(const std::vector<std::string>& kvs) {
  std::map<std::string, std::string> kv;
  for (auto& s : kvs) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::parse_error, "parameter '" + s + "' is not key=value");
    kv[s.substr(0, eq)] = s.substr(eq + 1);
  }
  return parse_params(kv);
}

void cite(const CKVerdict& v) {
  std::cerr << ck_name(v.verdict);
  for (auto& j : v.justification) std::cerr << " <- " << j;
  std::cerr << "\n";
  for (auto& n : v.notes) std::cerr << "  note: " << n << "\n";
}

struct Options {
  // catalog
  std::string label;
  int n = 4;
  std::vector<std::string> params;
  std::string out;
  // classify / mu
  std::string input;
  bool assume_su = false;
  double t_max = 24;
  int steps = 40;
  int samples = 32;
  double t_min = 12;
  std::uint64_t seed = 0;
  // proper
  std::string left, right;
  std::vector<double> radii;
  std::string csv;
  // conjsu
  std::string matrix;
  // sl3
  std::string sl3_label = "sl3:sl2-top-left";
  int mu_samples = 200;
  std::vector<double> scales{1e2, 1e4, 1e6};
};

int cmd_catalog_list(const Options& o) {
  json j;
  j["tool_version"] = kToolVersion;
  j["n"] = o.n;
  j["labels"] = catalog_labels(o.n);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_catalog_emit(const Options& o) {
  Subalgebra h = catalog_entry(o.label, o.n, params_from(o.params));
  if (h.label().empty()) h.set_label(o.label);
  write_text(o.out, subalgebra_json(h).dump(2) + "\n");
  return kExitOk;
}

int cmd_classify(const Options& o) {
  Subalgebra h = parse_subalgebra(read_file(o.input));
  json j;
  j["tool_version"] = kToolVersion;
  j["input"] = o.input;
  j["assume_su_conjecture"] = o.assume_su;
  CKVerdict ck = ck_verdict(h, o.assume_su);
  std::optional<TypeVerdict> tv = ck.type;
  if (!tv && h.in_an() && h.dim() > 0 && static_cast<int>(h.dim()) < 2 * h.n() && h.reductive() == ReductiveKind::none)
    tv = classify_type(h);
  if (tv) {
    j["type"] = type_json(*tv);
    try {
      j["window"] = window_json(predicted_window(*tv));
    } catch (const Error&) {
      j["window"] = nullptr;
    }
  } else if (h.reductive() != ReductiveKind::none) {
    j["window"] = window_json(reductive_window(h.reductive()));
  }
  j["ck"] = ck_json(ck);
  write_text(o.out, j.dump(2) + "\n");
  cite(ck);
  return ck.verdict == CK::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_mu(const Options& o) {
  Subalgebra h = resolve(o.input, o.n);
  auto grid = default_t_grid(1, o.t_max, o.steps);
  SampleOptions so;
  so.random_directions = o.samples;
  so.products = o.samples;
  OrbitSample s = sample_orbit(h, grid, o.seed, so);
  if (!o.out.empty()) {
    std::ofstream csv(o.out);
    if (!csv) throw Error(ErrorCode::parse_error, "cannot write '" + o.out + "'");
    write_orbit_csv(csv, s);
  }
  json j;
  j["tool_version"] = kToolVersion;
  j["label"] = h.label();
  j["seed"] = o.seed;
  j["t_max"] = o.t_max;
  j["steps"] = o.steps;
  j["directions"] = s.directions;
  j["points"] = s.points.size();
  try {
    CDSResult cds = cds_criterion(s.chamber_points());
    j["cds_criterion"] = cds_name(cds);
  } catch (const Error& e) {
    j["cds_criterion"] = "insufficient-data";
  }
  FitOptions fo;
  fo.t_min = o.t_min;
  GrowthWindow w = fit_window(s, fo);
  j["window"] = window_json(w);
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_proper(const Options& o) {
  Subalgebra L = resolve(o.left, o.n), R = resolve(o.right, o.n);
  auto grid = default_t_grid(1, o.t_max, o.steps);
  SampleOptions so;
  so.random_directions = o.samples;
  so.products = o.samples;
  auto sl = sample_any(L, grid, o.seed, so), sr = sample_any(R, grid, o.seed + 1, so);
  sl.label = o.left;
  sr.label = o.right;
  PropernessReport rep = o.radii.empty() ? cone_separation(sl, sr) : cone_separation(sl, sr, o.radii);
  rep.seed = o.seed;
  try {
    rep.predicted = proper_pair_predicted(window_of(L), window_of(R));
  } catch (const Error& e) {
    rep.predicted = Prediction::unknown;
    rep.notes.push_back(std::string("no exact window: ") + e.what());
  }
  json j = properness_json(rep);
  j["tool_version"] = kToolVersion;
  std::cout << j.dump(2) << "\n";
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw Error(ErrorCode::parse_error, "cannot write '" + o.csv + "'");
    csv << "radius,distance,left_points,right_points\n";
    char buf[160];
    for (auto& a : rep.annuli) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%zu,%zu\n", a.radius, a.distance, a.left_points, a.right_points);
      csv << buf;
    }
  }
  std::cerr << prediction_name(rep.predicted) << " <- Thm 3.9 (window comparison); slope " << rep.slope << "\n";
  return kExitOk;
}

ExactMatrix read_matrix(const std::string& path) {
  std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    // plain text: whitespace-separated entries, one row per line
    std::vector<ExactVector> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      std::stringstream ls(line);
      std::string tok;
      ExactVector r;
      while (ls >> tok) r.push_back(Q6::parse(tok));
      if (!r.empty()) rows.push_back(r);
    }
    if (rows.empty()) throw Error(ErrorCode::parse_error, "empty matrix file");
    for (auto& r : rows)
      if (r.size() != rows[0].size()) throw Error(ErrorCode::parse_error, "ragged matrix rows");
    return rows_to_matrix(rows, rows[0].size());
  }
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw Error(ErrorCode::parse_error, "matrix: expected an array of rows");
  return matrix_from_json(j, "matrix", j.size(), j[0].size());
}

int cmd_conjsu(const Options& o) {
  ExactMatrix B = read_matrix(o.matrix);
  if (B.rows() != B.cols()) throw Error(ErrorCode::invalid_dimension, "matrix must be square");
  if (B.rows() % 2) throw Error(ErrorCode::invalid_dimension, "matrix size must be even");
  SUConjugacy r = su_conjugacy(B);
  json j;
  j["tool_version"] = kToolVersion;
  j["size"] = B.rows();
  j["real_eigenvalue"] = has_real_eigenvalue(B);
  j["conjugate_to_block_form"] = r.yes;
  if (r.yes) {
    j["a"] = r.a.str();
    j["b_squared"] = r.b_squared.str();
    j["b"] = static_cast<double>(r.b);
    json w = json::array();
    for (long i = 0; i < r.witness.rows(); ++i) {
      json row = json::array();
      for (long k = 0; k < r.witness.cols(); ++k) row.push_back(static_cast<double>(r.witness(i, k)));
      w.push_back(row);
    }
    j["witness"] = w;
  } else {
    j["reason"] = "symmetric part is not scalar or skew part is not a multiple of an orthogonal complex structure";
  }
  std::cout << j.dump(2) << "\n";
  std::cerr << (r.yes ? "yes" : "no") << " <- Thm 1.5(3) (block form a I + b J)\n";
  return kExitOk;
}

int cmd_sl3_cross(const Options& o) {
  Subalgebra h = catalog_entry(o.sl3_label, 3);
  CrossingReport rep = sl3_bplus_crossing(h, o.t_max, o.steps);
  json j;
  j["tool_version"] = kToolVersion;
  j["label"] = rep.label;
  j["d"] = rep.d;
  json pts = json::array();
  for (auto& p : rep.points) pts.push_back({{"t", p.t}, {"min_distance", p.min_distance}, {"argmin_s", p.argmin_s}});
  j["minima"] = pts;
  std::cout << j.dump(2) << "\n";
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    csv << "t,min_distance,argmin_s\n";
    char buf[128];
    for (auto& p : rep.points) {
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p.t, p.min_distance, p.argmin_s);
      csv << buf;
    }
  }
  std::cerr << "crossing <- Prop SL3-B+ (continuity)\n";
  return kExitOk;
}

int cmd_sl3_perturb(const Options& o) {
  json j;
  j["tool_version"] = kToolVersion;
  j["seed"] = o.seed;
  json arr = json::array();
  for (double sc : o.scales) {
    auto r = appendix_constant(sl3_ambient(), o.mu_samples, sc, o.seed);
    arr.push_back({{"g_scale", sc}, {"constant", r.constant}, {"samples", r.samples}});
  }
  j["constants"] = arr;
  std::cout << j.dump(2) << "\n";
  std::cerr << "perturbation bound <- Prop A.2\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cartan projections, growth windows and compact Clifford-Klein form verdicts"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;
  try {
    o.seed = default_seed();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }

  auto* cat = app.add_subcommand("catalog", "list or emit catalog subalgebras");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "list catalog labels");
  cat_list->add_option("--n", o.n, "ambient so(2,n)")->check(CLI::Range(3, 64));
  auto* cat_emit = cat->add_subcommand("emit", "write a catalog entry as a subalgebra file");
  cat_emit->add_option("--label", o.label, "catalog label")->required();
  cat_emit->add_option("--n", o.n, "ambient so(2,n)")->check(CLI::Range(3, 64));
  cat_emit->add_option("--param", o.params, "exemplar parameter key=value (repeatable)");
  cat_emit->add_option("--out", o.out, "output file (default stdout)");

  auto* cls = app.add_subcommand("classify", "structural type, growth window and compact-form verdict");
  cls->add_option("input", o.input, "subalgebra file")->required();
  cls->add_flag("--assume-su-conjecture", o.assume_su, "treat the SU(1,m) non-existence conjecture as true");
  cls->add_option("--out", o.out, "report file (default stdout)");

  auto* mu = app.add_subcommand("mu", "sample mu(exp(span h)) and fit the growth window");
  mu->add_option("input", o.input, "subalgebra file or catalog label")->required();
  mu->add_option("--n", o.n, "ambient n for catalog labels");
  mu->add_option("--t-max", o.t_max, "sampling horizon")->check(CLI::PositiveNumber);
  mu->add_option("--steps", o.steps, "t grid points")->check(CLI::Range(2, 100000));
  mu->add_option("--samples", o.samples, "random directions (and products)")->check(CLI::Range(0, 100000));
  mu->add_option("--seed", o.seed, "random seed (default CARTANLAB_SEED or 42)");
  mu->add_option("--t-min", o.t_min, "fit threshold on u1")->check(CLI::PositiveNumber);
  mu->add_option("--out", o.out, "CSV of (direction_id,t,u1,u2)");

  auto* pr = app.add_subcommand("proper", "properness prediction and cone separation");
  pr->add_option("--left", o.left, "catalog label or subalgebra file")->required();
  pr->add_option("--right", o.right, "catalog label or subalgebra file")->required();
  pr->add_option("--n", o.n, "ambient n for catalog labels");
  pr->add_option("--radius", o.radii, "annulus radii (repeatable)");
  pr->add_option("--t-max", o.t_max, "sampling horizon")->check(CLI::PositiveNumber);
  pr->add_option("--steps", o.steps, "t grid points")->check(CLI::Range(2, 100000));
  pr->add_option("--samples", o.samples, "random directions (and products)");
  pr->add_option("--seed", o.seed, "random seed");
  pr->add_option("--csv", o.csv, "per-annulus distances CSV");

  auto* cs = app.add_subcommand("conjsu", "decide conjugacy of B to a block form a I + b J");
  cs->add_option("--matrix", o.matrix, "matrix file (JSON rows or whitespace text)")->required();

  auto* sl3 = app.add_subcommand("sl3", "SL(3,R) geometry");
  sl3->require_subcommand(1);
  auto* cross = sl3->add_subcommand("bplus-cross", "minimal distance to B+ along the inversion homotopy");
  cross->add_option("--label", o.sl3_label, "sl3 catalog label");
  cross->add_option("--t-max", o.t_max, "largest t")->check(CLI::PositiveNumber);
  cross->add_option("--steps", o.steps, "number of t values")->check(CLI::Range(1, 100000));
  cross->add_option("--csv", o.csv, "CSV of per-t minima");
  auto* pert = sl3->add_subcommand("mu-perturb", "fitted perturbation constant across g scales");
  pert->add_option("--samples", o.mu_samples, "samples per scale")->check(CLI::Range(1, 10000000));
  pert->add_option("--scale", o.scales, "g scales (repeatable)");
  pert->add_option("--seed", o.seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*cat_list) return cmd_catalog_list(o);
    if (*cat_emit) return cmd_catalog_emit(o);
    if (*cls) return cmd_classify(o);
    if (*mu) return cmd_mu(o);
    if (*pr) return cmd_proper(o);
    if (*cs) return cmd_conjsu(o);
    if (*cross) return cmd_sl3_cross(o);
    if (*pert) return cmd_sl3_perturb(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::insufficient_data || e.code() == ErrorCode::no_prediction) return kExitInconclusive;
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
