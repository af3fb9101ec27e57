#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zg/ball.hpp"
#include "zg/region.hpp"

namespace zg {

/// Sampling window used where a region edge is infinite.
struct Caps {
  double sigma_lo = -20;
  double sigma_hi = 20;
  double t_lo = 0.5;
  double t_hi = 1e4;
};

struct SamplePoint {
  mpq_class sigma;
  mpq_class t;
  /// Second parameter of the inequality (the cutoff x of the tail bounds).
  std::optional<mpq_class> aux;
};

/// One inequality instance: lhs <= rhs is claimed.
struct Check {
  RealBall lhs;
  RealBall rhs;
};

struct BoundCase {
  std::string id;
  /// Formula and hypotheses, named by role.
  std::string anchor;
  std::string formula;
  Region region;
  Caps caps;
  /// Hypotheses beyond the rectangle, e.g. |s| >= 1.
  std::function<Containment(const ComplexBall&)> extra;
  std::string extra_text;
  /// Draws the auxiliary parameter for a point, given a uniform in [0, 1).
  std::function<mpq_class(const ComplexBall&, double)> aux;
  std::function<RealBall(const ComplexBall&, const std::optional<RealBall>&)> rhs;
  std::function<std::vector<Check>(const ComplexBall&, const std::optional<RealBall>&, const Precision&)> checks;
};

/// The fixed catalogue of bound cases, in a stable order.
const std::vector<BoundCase>& registry();
/// Exact id, or a unique prefix of one. Throws NotFoundError.
const BoundCase& find_case(const std::string& id);

/// n reproducible points strictly inside r; 10% lie within 1e-3 of a finite edge.
std::vector<SamplePoint> sample_region(const Region& r, int n, std::uint64_t seed,
                                       const Caps& caps = Caps(), std::uint64_t stream = 0);

struct SampleRecord {
  SamplePoint point;
  bool skipped = false;
  bool violation = false;
  RealBall lhs;
  RealBall rhs;
  /// rhs - lhs for the tightest check; its lower end is rhs_lo - lhs_hi.
  RealBall margin;
  long prec_used = 0;
};

struct VerificationReport {
  std::string bound_id;
  std::string anchor;
  int samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  long prec_bits = 0;
  std::optional<RealBall> min_margin;
  std::optional<double> median_margin;
  std::vector<SampleRecord> records;
  int violations = 0;
  int skipped = 0;
  /// skipped / samples above 5%.
  bool needs_escalation = false;
};

VerificationReport verify_bound(const std::string& id, int n, std::uint64_t seed, const Precision& prec,
                                int jobs = 1);
/// Same for a case outside the registry.
VerificationReport verify_case(const BoundCase& c, std::uint64_t stream, int n, std::uint64_t seed,
                               const Precision& prec, int jobs = 1);

struct ReportOptions {
  bool timestamp = false;
  std::string target_error;
};

std::string report_json(const VerificationReport& r, const ReportOptions& opt = ReportOptions());
std::string report_csv(const VerificationReport& r);
/// Writes <dir>/<id>.json and <dir>/<id>.csv through a temporary file and rename.
void write_report_files(const VerificationReport& r, const std::string& dir,
                        const ReportOptions& opt = ReportOptions());

}  // namespace zg
