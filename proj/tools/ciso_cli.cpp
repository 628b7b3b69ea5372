// ciso: command-line front end.
//
//   ciso analyze <spec.json> [--points file] [--tol 1e-9] [--seed N] [--out report.json]
//   ciso model heisenberg --n N --freq b1,...,bN --signature s1,...,s2N [--emit file]
//   ciso prolongation <spec.json>
//   ciso bounds --dim-m D --rk-h K --index L
//
// Exit status: 0 success, 1 usage, 2 parse or validation error, 3 not contact,
// 4 unsupported pencil (a partial report is still written).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ciso/analyzer.hpp"
#include "ciso/prolongation.hpp"
#include "ciso/stabilizer.hpp"

namespace {

using namespace ciso;

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
    case ErrorCode::BadSpec:
    case ErrorCode::FrameDegenerate:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::SingularMap:
      return 2;
    case ErrorCode::NotContact:
    case ErrorCode::DegenerateForm:
      return 3;
    case ErrorCode::UnsupportedPencil:
    case ErrorCode::NumericAmbiguity:
      return 4;
    default:
      return 1;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write " + path);
  out << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

int run_analyze(const std::string& spec_path, const std::string& points_path, std::optional<double> tol,
                std::uint64_t seed, const std::string& out_path) {
  const StructureSpec spec = parse_structure(read_file(spec_path));
  const FramedStructure& fs = spec.structure;
  std::vector<Point> points;
  if (!points_path.empty())
    points = parse_points(read_file(points_path), fs.dim());
  else if (spec.sample_points)
    points = *spec.sample_points;
  else
    points = default_sample_points(fs.dim(), 8, seed);
  AnalysisReport r = analyze(fs, points, tol.value_or(spec.tolerance.value_or(kDefaultTolerance)));
  r.model = spec.model;
  write_output(out_path, emit_report(r));
  if (r.failure) {
    std::cerr << "ciso: " << error_code_name(*r.failure) << " (" << r.warnings.size() << " warnings)\n";
    return exit_code_for(*r.failure);
  }
  return 0;
}

int run_model(std::size_t n, const std::string& freq, const std::string& signature, const std::string& emit) {
  HeisenbergSpec hs;
  hs.n = n;
  const auto fs = split_list(freq);
  if (fs.empty())
    hs.frequencies.assign(n, Rational(1));
  else
    for (const auto& b : fs) hs.frequencies.push_back(parse_rational(b));
  const auto ss = split_list(signature);
  if (ss.empty()) hs.signature.assign(2 * n, 1);
  for (const auto& s : ss) {
    if (s == "+" || s == "+1" || s == "1")
      hs.signature.push_back(1);
    else if (s == "-" || s == "-1")
      hs.signature.push_back(-1);
    else
      throw Error(ErrorCode::ValidationError, "signature entries must be + or -, got '" + s + "'");
  }
  hs.validate();
  write_output(emit, emit_structure(model_structure_spec(hs)));
  return 0;
}

int run_prolongation(const std::string& spec_path) {
  const StructureSpec spec = parse_structure(read_file(spec_path));
  const FramedStructure& fs = spec.structure;
  const Point p = spec.sample_points && !spec.sample_points->empty() ? spec.sample_points->front()
                                                                     : Point(fs.dim(), Rational(0));
  const PointwiseData data = canonical_contact_data(fs, p);
  const SymbolAlgebra sym = build_symbol(data.form_pair(fs.signature));
  const ProlongationResult pr = first_prolongation(sym);
  nlohmann::json doc;
  doc["point"] = nlohmann::json::array();
  for (const auto& x : p) doc["point"].push_back(to_string(x));
  doc["n"] = sym.n;
  doc["dim_g0"] = sym.g0.dimension();
  doc["symbol_dimension"] = sym.total_dimension();
  doc["g1_dimension"] = pr.g1_dimension;
  doc["trivial"] = pr.trivial;
  doc["v_a_vanishes"] = pr.v_a_vanishes;
  doc["g1_bracket_only_dimension"] = pr.bracket_only_dimension;
  doc["levi_civita_uniqueness"] = levi_civita_uniqueness(fs.index(), fs.n());
  std::cout << doc.dump(2) << "\n";
  return 0;
}

int run_bounds(std::size_t dim_m, std::size_t rk_h, std::size_t index) {
  if (dim_m < 3 || dim_m % 2 == 0 || rk_h != dim_m - 1)
    throw Error(ErrorCode::ValidationError, "need odd dim M >= 3 and rk H = dim M - 1");
  const std::size_t n = rk_h / 2;
  if (index > rk_h) throw Error(ErrorCode::ValidationError, "index exceeds rk H");
  nlohmann::json doc;
  doc["dim_m"] = dim_m;
  doc["n"] = n;
  doc["index"] = index;
  doc["thm1_bound"] = general_isometry_bound(dim_m, index);
  nlohmann::json est = nlohmann::json::object();
  std::size_t best = 0;
  for (std::size_t t : admissible_para_counts(n, index)) {
    const std::size_t v = *model_isometry_dimension(dim_m, index, t);
    est[std::to_string(t)] = v;
    best = std::max(best, v);
  }
  doc["est3_by_t"] = std::move(est);
  doc["est3_max"] = best;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isometry-dimension analysis of contact sub-pseudo-Riemannian structures"};
  app.require_subcommand(1);

  std::string spec_path, points_path, out_path;
  std::optional<double> tol;
  std::uint64_t seed = 1;
  auto* analyze = app.add_subcommand("analyze", "Analyze a structure-spec file");
  analyze->add_option("spec", spec_path, "Structure spec (JSON)")->required();
  analyze->add_option("--points", points_path, "JSON file of sample points");
  analyze->add_option("--tol", tol, "Eigenvalue clustering tolerance");
  analyze->add_option("--seed", seed, "Seed for the default sample points");
  analyze->add_option("--out", out_path, "Report path (default stdout)");

  std::size_t model_n = 1;
  std::string freq, signature, emit;
  auto* model = app.add_subcommand("model", "Emit a built-in model as a structure spec");
  auto* heis = model->add_subcommand("heisenberg", "Left-invariant Heisenberg model");
  model->require_subcommand(1);
  heis->add_option("--n", model_n, "Half-rank n")->check(CLI::PositiveNumber);
  heis->add_option("--freq", freq, "Frequencies b1,...,bn (default all 1)");
  heis->add_option("--signature", signature, "Signs s1,...,s2n in frame order X1,Y1,... (default all +)");
  heis->add_option("--emit", emit, "Output path (default stdout)");

  std::string prol_spec;
  auto* prol = app.add_subcommand("prolongation", "First prolongation at the first sample point");
  prol->add_option("spec", prol_spec, "Structure spec (JSON)")->required();

  std::size_t dim_m = 0, rk_h = 0, index = 0;
  auto* bounds = app.add_subcommand("bounds", "Isometry-dimension bounds from dimension data");
  bounds->add_option("--dim-m", dim_m, "dim M")->required();
  bounds->add_option("--rk-h", rk_h, "rk H")->required();
  bounds->add_option("--index", index, "Index of the metric")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*analyze) return run_analyze(spec_path, points_path, tol, seed, out_path);
    if (*heis) return run_model(model_n, freq, signature, emit);
    if (*prol) return run_prolongation(prol_spec);
    if (*bounds) return run_bounds(dim_m, rk_h, index);
  } catch (const Error& e) {
    std::cerr << "ciso: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 1;
}
