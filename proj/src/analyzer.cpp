#include "ciso/analyzer.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <limits>
#include <set>

#include "ciso/prolongation.hpp"
#include "ciso/stabilizer.hpp"

namespace ciso {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); }

Rational rational_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(mpz_class(v.dump()));
  if (v.is_number_float()) return parse_rational(v.dump());
  invalid(where + ": expected a rational number or \"p/q\" string");
}

Polynomial polynomial_from_json(const json& v, const std::vector<std::string>& coords, const std::string& where) {
  try {
    if (v.is_string()) return parse_polynomial(v.get<std::string>(), coords);
    if (v.is_number()) return Polynomial(rational_from_json(v, where));
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
  invalid(where + ": expected a polynomial string");
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

int sign_from_json(const json& v, std::size_t i) {
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "+" || s == "+1") return 1;
    // U+2212 MINUS SIGN is accepted alongside ASCII '-'.
    if (s == "-" || s == "-1" || s == "\xE2\x88\x92") return -1;
  } else if (v.is_number_integer()) {
    const auto k = v.get<long>();
    if (k == 1 || k == -1) return static_cast<int>(k);
  }
  invalid("signature[" + std::to_string(i) + "]: expected \"+\" or \"-\", got " + v.dump());
}

std::vector<Point> points_from_json(const json& list, std::size_t dim, const std::string& where) {
  if (!list.is_array()) invalid(where + ": expected a list of points");
  std::vector<Point> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const json& p = list[i];
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!p.is_array() || p.size() != dim) invalid(at + ": expected " + std::to_string(dim) + " coordinates");
    Point q;
    for (std::size_t k = 0; k < dim; ++k) q.push_back(rational_from_json(p[k], at));
    out.push_back(std::move(q));
  }
  return out;
}

json strings(const RationalVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json doubles(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(round12(x));
  return a;
}

// Sorted (s_i, p_i, generic) pattern of a profile, the regularity key.
std::vector<std::tuple<std::size_t, std::size_t, bool>> group_pattern(const KroneckerProfile& p) {
  std::vector<std::tuple<std::size_t, std::size_t, bool>> out;
  for (const auto& g : p.groups) out.emplace_back(g.s, g.p, g.generic);
  std::sort(out.begin(), out.end());
  return out;
}

int severity(ErrorCode c) {
  switch (c) {
    case ErrorCode::FrameDegenerate:
    case ErrorCode::NotContact:
      return 2;
    case ErrorCode::UnsupportedPencil:
    case ErrorCode::NumericAmbiguity:
      return 1;
    default:
      return 3;
  }
}

struct PointOutcome {
  PointReport report;
  std::optional<ErrorCode> failure;
};

PointOutcome analyze_point(const FramedStructure& fs, const Point& p, double tol) {
  PointOutcome out;
  PointReport& r = out.report;
  r.point = p;
  std::optional<PointwiseData> data;
  try {
    data = canonical_contact_data(fs, p);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotContact && e.code() != ErrorCode::FrameDegenerate) throw;
    r.error = e.what();
    out.failure = e.code();
    return out;
  }
  r.contact_ok = true;
  r.raw_pfaffian = data->raw_pfaffian;
  r.pfaffian = data->pf;
  r.scale = data->scale;
  r.alpha = data->alpha;
  r.reeb = data->reeb;
  const FormPair pair = data->form_pair(fs.signature);
  const StructureOperator j = structure_operator(pair);
  r.compatible = is_compatible(pair);
  r.dim_g0_exact = stabilizer_basis(pair).dimension();
  try {
    KroneckerProfile prof = spectral_classify(j, pair, tol);
    r.lemma1_bound = prof.s * prof.s + prof.t * prof.t;
    std::size_t bw = 0;
    for (const auto& g : prof.groups) bw += g.s * g.s + g.p * g.p;
    r.blockwise_dim = bw;
    r.profile = std::move(prof);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::UnsupportedPencil && e.code() != ErrorCode::NumericAmbiguity) throw;
    r.error = e.what();
    out.failure = e.code();
  }
  return out;
}

}  // namespace

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double y = std::strtod(buf, nullptr);
  return y == 0.0 ? 0.0 : y;
}

// ---- spec files ----

StructureSpec parse_structure(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (!doc.is_object()) invalid("structure spec must be a JSON object");

  StructureSpec spec;
  FramedStructure& fs = spec.structure;
  if (!doc.contains("n") || !doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() == 0)
    invalid("\"n\" must be a positive integer");
  const std::size_t n = doc["n"].get<std::size_t>(), d = 2 * n + 1;

  if (doc.contains("coordinates")) {
    const json& c = doc["coordinates"];
    if (!c.is_array() || c.size() != d) invalid("\"coordinates\" must list " + std::to_string(d) + " names");
    std::set<std::string> seen;
    for (const auto& name : c) {
      if (!name.is_string() || !valid_identifier(name.get<std::string>())) invalid("bad coordinate name " + name.dump());
      if (!seen.insert(name.get<std::string>()).second) invalid("duplicate coordinate name " + name.dump());
      fs.coordinates.push_back(name.get<std::string>());
    }
  } else {
    fs.coordinates = heisenberg_coordinates(n);
  }

  if (doc.contains("name")) {
    if (!doc["name"].is_string()) invalid("\"name\" must be a string");
    fs.name = doc["name"].get<std::string>();
  }

  if (!doc.contains("frame") || !doc["frame"].is_array()) invalid("\"frame\" must be a list of vector fields");
  const json& frame = doc["frame"];
  if (frame.size() != 2 * n)
    invalid("\"frame\" must have " + std::to_string(2 * n) + " fields, got " + std::to_string(frame.size()));
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const std::string at = "frame[" + std::to_string(i) + "]";
    if (!frame[i].is_array() || frame[i].size() != d) invalid(at + ": expected " + std::to_string(d) + " components");
    VectorField x;
    for (std::size_t k = 0; k < d; ++k)
      x.components.push_back(polynomial_from_json(frame[i][k], fs.coordinates, at + "[" + std::to_string(k) + "]"));
    fs.frame.push_back(std::move(x));
  }

  if (!doc.contains("signature") || !doc["signature"].is_array()) invalid("\"signature\" must be a list");
  const json& sig = doc["signature"];
  if (sig.size() != 2 * n)
    invalid("\"signature\" must have " + std::to_string(2 * n) + " entries, got " + std::to_string(sig.size()));
  for (std::size_t i = 0; i < sig.size(); ++i) fs.signature.push_back(sign_from_json(sig[i], i));

  if (doc.contains("contact_form") && !doc["contact_form"].is_null()) {
    const json& a = doc["contact_form"];
    if (!a.is_array() || a.size() != d) invalid("\"contact_form\" must have " + std::to_string(d) + " components");
    OneForm form;
    for (std::size_t k = 0; k < d; ++k)
      form.components.push_back(polynomial_from_json(a[k], fs.coordinates, "contact_form[" + std::to_string(k) + "]"));
    fs.contact_form = std::move(form);
  }

  if (doc.contains("sample_points")) spec.sample_points = points_from_json(doc["sample_points"], d, "sample_points");

  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number() || doc["tolerance"].get<double>() <= 0) invalid("\"tolerance\" must be positive");
    spec.tolerance = doc["tolerance"].get<double>();
  }
  if (doc.contains("model")) spec.model = doc["model"];

  fs.validate();
  return spec;
}

std::vector<Point> parse_points(std::string_view text, std::size_t dim) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "byte " + std::to_string(e.byte) + ": malformed JSON");
  }
  if (doc.is_object() && doc.contains("sample_points")) return points_from_json(doc["sample_points"], dim, "sample_points");
  return points_from_json(doc, dim, "points");
}

std::string emit_structure(const StructureSpec& spec) {
  const FramedStructure& fs = spec.structure;
  json doc;
  doc["n"] = fs.n();
  doc["name"] = fs.name;
  doc["coordinates"] = fs.coordinates;
  json frame = json::array();
  for (const auto& x : fs.frame) {
    json comps = json::array();
    for (const auto& c : x.components) comps.push_back(c.to_string(fs.coordinates));
    frame.push_back(std::move(comps));
  }
  doc["frame"] = std::move(frame);
  json sig = json::array();
  for (int e : fs.signature) sig.push_back(e > 0 ? "+" : "-");
  doc["signature"] = std::move(sig);
  if (fs.contact_form) {
    json a = json::array();
    for (const auto& c : fs.contact_form->components) a.push_back(c.to_string(fs.coordinates));
    doc["contact_form"] = std::move(a);
  }
  if (spec.sample_points) {
    json pts = json::array();
    for (const auto& p : *spec.sample_points) pts.push_back(strings(p));
    doc["sample_points"] = std::move(pts);
  }
  if (spec.tolerance) doc["tolerance"] = *spec.tolerance;
  if (!spec.model.is_null()) doc["model"] = spec.model;
  return doc.dump(2) + "\n";
}

StructureSpec model_structure_spec(const HeisenbergSpec& hs) {
  StructureSpec spec;
  spec.structure = build_model(hs);
  spec.structure.name = "heisenberg_n" + std::to_string(hs.n);
  json m;
  m["family"] = "heisenberg";
  m["n"] = hs.n;
  m["frequencies"] = strings(hs.frequencies);
  m["normalized_frequencies"] = strings(hs.normalized_frequencies());
  json sig = json::array();
  for (int e : hs.signature) sig.push_back(e > 0 ? "+" : "-");
  m["signature"] = std::move(sig);
  spec.model = std::move(m);
  return spec;
}

// ---- analysis ----

AnalysisReport analyze(const FramedStructure& fs, const std::vector<Point>& points, double tol) {
  fs.validate();
  if (!(tol > 0)) invalid("tolerance must be positive");
  AnalysisReport r;
  r.name = fs.name;
  r.n = fs.n();
  r.dim_m = fs.dim();
  r.index = fs.index();
  r.tolerance = tol;

  std::vector<std::future<PointOutcome>> jobs;
  jobs.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != fs.dim()) invalid("sample point has " + std::to_string(p.size()) + " coordinates");
    jobs.push_back(std::async(std::launch::async, analyze_point, std::cref(fs), std::cref(p), tol));
  }
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    PointOutcome o = jobs[i].get();
    if (o.failure) {
      r.warnings.push_back("point " + std::to_string(i) + ": " + o.report.error);
      if (!r.failure || severity(*o.failure) > severity(*r.failure)) r.failure = o.failure;
    }
    r.per_point.push_back(std::move(o.report));
  }

  GlobalReport& g = r.global;
  g.thm1_bound = general_isometry_bound(r.dim_m, r.index);
  if (r.per_point.empty()) return r;

  const bool all_contact = std::all_of(r.per_point.begin(), r.per_point.end(), [](const PointReport& p) { return p.contact_ok; });
  const bool all_profiled = std::all_of(r.per_point.begin(), r.per_point.end(), [](const PointReport& p) { return p.profile.has_value(); });
  g.compatible = all_contact && std::all_of(r.per_point.begin(), r.per_point.end(),
                                            [](const PointReport& p) { return p.compatible.value_or(false); });

  if (all_contact) {
    std::size_t least = std::numeric_limits<std::size_t>::max();
    for (const auto& p : r.per_point) least = std::min(least, *p.dim_g0_exact);
    g.theorem6_bound = r.dim_m + least;

    const PointwiseData first = canonical_contact_data(fs, r.per_point.front().point);
    const ProlongationResult pr = first_prolongation(build_symbol(first.form_pair(fs.signature)));
    g.prolongation_trivial = pr.trivial;
    g.g1_dimension = pr.g1_dimension;
    g.v_a_vanishes = pr.v_a_vanishes;
    g.bracket_only_dimension = pr.bracket_only_dimension;
  }

  if (all_profiled) {
    const auto pattern = group_pattern(*r.per_point.front().profile);
    g.regular = true;
    std::set<std::size_t> ts;
    for (const auto& p : r.per_point) {
      const KroneckerProfile& prof = *p.profile;
      ts.insert(prof.t);
      if (!flags_from_profile(prof, tol).regular || group_pattern(prof) != pattern) g.regular = false;
      const BoundsReport b = dimension_bounds(prof, r.dim_m, r.index, *p.dim_g0_exact,
                                              BoundsFlags{*p.compatible, g.regular});
      auto keep_min = [](std::optional<std::size_t>& acc, std::size_t v) { acc = acc ? std::min(*acc, v) : v; };
      keep_min(g.lemma1_bound, b.lemma1_bound);
      keep_min(g.blockwise_dim, b.blockwise_dim);
      if (g.compatible && b.thm3_bound) keep_min(g.thm3_bound, *b.thm3_bound);
    }
    if (g.regular) {
      const auto& prof = *r.per_point.front().profile;
      g.thm4_bound = dimension_bounds(prof, r.dim_m, r.index, *r.per_point.front().dim_g0_exact, {false, true}).thm4_bound;
    }
    if (ts.size() == 1) g.est3_value = model_isometry_dimension(r.dim_m, r.index, *ts.begin());
  }
  return r;
}

json report_json(const AnalysisReport& r) {
  json doc;
  doc["name"] = r.name;
  doc["n"] = r.n;
  doc["dim_m"] = r.dim_m;
  doc["index"] = r.index;
  doc["tolerance"] = round12(r.tolerance);
  if (!r.model.is_null()) doc["model"] = r.model;
  doc["warnings"] = r.warnings;
  doc["status"] = r.failure ? error_code_name(*r.failure) : "OK";

  json pts = json::array();
  for (const auto& p : r.per_point) {
    json e;
    e["point"] = strings(p.point);
    e["contact_ok"] = p.contact_ok;
    if (!p.error.empty()) e["error"] = p.error;
    if (p.contact_ok) {
      e["pfaffian"] = to_string(*p.pfaffian);
      e["raw_pfaffian"] = to_string(*p.raw_pfaffian);
      e["scale"] = p.scale->to_string();
      e["alpha"] = strings(p.alpha);
      e["reeb"] = strings(p.reeb);
      e["compatible"] = *p.compatible;
      e["dim_g0_exact"] = *p.dim_g0_exact;
    }
    if (p.profile) {
      const KroneckerProfile& prof = *p.profile;
      e["s"] = prof.s;
      e["t"] = prof.t;
      e["semisimple"] = prof.semisimple;
      e["frequencies"] = doubles(prof.frequencies());
      e["para_values"] = doubles(prof.para_values());
      e["lemma1_bound"] = *p.lemma1_bound;
      e["blockwise_dim"] = *p.blockwise_dim;
      json blocks = json::array();
      for (const auto& b : prof.blocks) {
        json jb;
        jb["kind"] = block_kind_name(b.kind);
        jb["value"] = round12(b.value);
        jb["plane_count"] = b.plane_count;
        jb["multiplicity"] = b.multiplicity;
        jb["jordan_index"] = b.jordan_index;
        if (b.kind == BlockKind::Frequency) jb["definite_signs"] = b.definite_signs;
        if (b.kind == BlockKind::Generic) jb["imag"] = round12(b.imag);
        blocks.push_back(std::move(jb));
      }
      e["blocks"] = std::move(blocks);
      json groups = json::array();
      for (const auto& gr : prof.groups)
        groups.push_back({{"value", round12(gr.value)}, {"s", gr.s}, {"p", gr.p}, {"generic", gr.generic}});
      e["groups"] = std::move(groups);
    }
    pts.push_back(std::move(e));
  }
  doc["per_point"] = std::move(pts);

  const GlobalReport& g = r.global;
  json gl;
  gl["regular"] = g.regular;
  gl["compatible"] = g.compatible;
  gl["thm1_bound"] = g.thm1_bound;
  gl["sample_count"] = r.per_point.size();
  auto put = [&gl](const char* key, const auto& opt) {
    if (opt) gl[key] = *opt;
  };
  put("lemma1_bound", g.lemma1_bound);
  put("blockwise_dim", g.blockwise_dim);
  put("thm3_bound", g.thm3_bound);
  put("thm4_bound", g.thm4_bound);
  put("est3_value", g.est3_value);
  put("theorem6_bound", g.theorem6_bound);
  put("prolongation_trivial", g.prolongation_trivial);
  put("g1_dimension", g.g1_dimension);
  put("v_a_vanishes", g.v_a_vanishes);
  put("g1_bracket_only_dimension", g.bracket_only_dimension);
  doc["global"] = std::move(gl);
  return doc;
}

std::string emit_report(const AnalysisReport& r) { return report_json(r).dump(2) + "\n"; }

}  // namespace ciso
