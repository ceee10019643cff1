#ifndef STATCERT_REPORT_HPP
#define STATCERT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "statcert/oracle.hpp"
#include "statcert/pivot.hpp"
#include "statcert/problem.hpp"
#include "statcert/second_order.hpp"

namespace statcert {

/**
 * One finished analysis, rendered twice: canonical JSON (sorted keys,
 * canonical rational strings, byte-deterministic for identical inputs and
 * seed) and a plain-text account.  All indices are reported 1-based.
 */
struct Report {
  std::string json_text;
  std::string text;
};

struct ClassifyOptions {
  std::vector<RVector> directions;  // extra probe directions
};

struct MultipliersOptions {
  std::optional<RVector> direction;                // default: the zero direction
  std::optional<std::vector<ConstraintRef>> core;  // default: non-affine constraints
};

struct SecondOrderOptions {
  std::vector<RVector> directions;  // default: critical-cone extreme rays
  SufficientMode mode = SufficientMode::Existence;
  bool use_limiting = false;
};

struct StrongMOptions {
  unsigned long long seed = 1;
};

struct OracleOptions {
  Rational radius = 1;
  long resolution = 8;
};

Report render_classify(const Problem& p, const ClassifyOptions& opts);
Report render_cones(const Problem& p);
Report render_multipliers(const Problem& p, const MultipliersOptions& opts);
Report render_second_order(const Problem& p, const SecondOrderOptions& opts);
Report render_strong_m(const Problem& p, const StrongMOptions& opts);
Report render_oracle(const Problem& p, const OracleOptions& opts);

/// The default direction set of the second-order report.
std::vector<RVector> critical_ray_directions(const MpecPoint& P);

/// The plain-text account of one pivot cycle, exactly as the strong-m
/// report prints it.
std::string trace_line(const MpecPoint& P, const PivotCycle& c);

}  // namespace statcert

#endif
