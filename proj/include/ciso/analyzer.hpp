#pragma once

// Structure-spec files, the per-point analysis pipeline and canonical JSON
// reports.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ciso/errors.hpp"
#include "ciso/frame.hpp"
#include "ciso/heisenberg.hpp"

namespace ciso {

struct StructureSpec {
  FramedStructure structure;
  std::optional<std::vector<Point>> sample_points;
  std::optional<double> tolerance;
  /// Free-form description of where the structure came from; copied into
  /// reports unchanged.
  nlohmann::json model;
};

/// Throws PARSE_ERROR for malformed JSON or polynomial strings and
/// VALIDATION_ERROR for shape or signature problems.
StructureSpec parse_structure(std::string_view text);

/// A list of points, or an object with a "sample_points" list.
std::vector<Point> parse_points(std::string_view text, std::size_t dim);

std::string emit_structure(const StructureSpec& spec);

/// Spec file of a Heisenberg model, keeping the unnormalized frequencies.
StructureSpec model_structure_spec(const HeisenbergSpec& spec);

struct PointReport {
  Point point;
  bool contact_ok = false;
  std::optional<Rational> raw_pfaffian;
  std::optional<Rational> pfaffian;
  std::optional<Radical> scale;
  RationalVector alpha;
  RationalVector reeb;
  std::optional<bool> compatible;
  std::optional<std::size_t> dim_g0_exact;
  std::optional<KroneckerProfile> profile;
  std::optional<std::size_t> lemma1_bound;
  std::optional<std::size_t> blockwise_dim;
  std::string error;
};

struct GlobalReport {
  bool regular = false;
  bool compatible = false;
  std::optional<std::size_t> lemma1_bound;
  std::optional<std::size_t> blockwise_dim;
  std::size_t thm1_bound = 0;
  std::optional<std::size_t> thm3_bound;
  std::optional<std::size_t> thm4_bound;
  std::optional<std::size_t> est3_value;
  std::optional<std::size_t> theorem6_bound;
  std::optional<bool> prolongation_trivial;
  std::optional<std::size_t> g1_dimension;
  std::optional<bool> v_a_vanishes;
  std::optional<std::size_t> bracket_only_dimension;
};

struct AnalysisReport {
  std::string name;
  std::size_t n = 0;
  std::size_t dim_m = 0;
  std::size_t index = 0;
  double tolerance = kDefaultTolerance;
  std::vector<PointReport> per_point;
  GlobalReport global;
  std::vector<std::string> warnings;
  nlohmann::json model;
  /// Most severe failure met, if any: NOT_CONTACT before UNSUPPORTED_PENCIL.
  std::optional<ErrorCode> failure;
};

/// Runs the pointwise pipeline concurrently over the points and assembles the
/// global bounds. Failures at individual points are recorded, not thrown.
AnalysisReport analyze(const FramedStructure& fs, const std::vector<Point>& points, double tol = kDefaultTolerance);

nlohmann::json report_json(const AnalysisReport& r);

/// Sorted keys, rationals as "p/q" strings, floats rounded to 12 significant
/// digits, two-space indentation and a trailing newline.
std::string emit_report(const AnalysisReport& r);

/// Rounds to 12 significant digits.
double round12(double x);

}  // namespace ciso
