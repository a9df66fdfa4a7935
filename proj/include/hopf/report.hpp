#pragma once
// Deterministic sampling of exact rational sphere points, the verification
// suites, and rendering of reports (JSON or text) and golden CSV tables.
#include "hopf/linalg.hpp"
#include "hopf/vectorfields.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hopf {

struct SuiteConfig {
  std::string suite = "all";  // algebra, s3, s3-cr, s3-hopf, s7-frame,
                              // s7-cr, s7-quat, all
  int samples = 100;
  std::uint64_t seed = 0;
  std::string format = "json";  // json or text
  std::string output;           // empty = stdout
};

struct CheckResult {
  std::string id;
  std::string paper_ref;
  std::string status;  // pass, fail, skip
  std::string details;
  std::optional<RatVec> counterexample;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckResult> checks;  // sorted by id
  int total = 0, passed = 0, failed = 0;
};

// One step of the 64-bit mixing generator used for every random draw.
std::uint64_t splitmix64_next(std::uint64_t& state);

// `count` pseudo-random exact points via inverse stereographic projection of
// small rational vectors, then all 2*dim signed basis points, then (dim 8)
// the balanced witness point (1/2, 1/2, 0, 0, 1/2, 1/2, 0, 0).
std::vector<SpherePoint> sample_sphere_points(int dim, int count,
                                              std::uint64_t seed);

// Throws std::invalid_argument for an unknown suite name.
VerificationReport run_suite(const SuiteConfig& config);

std::string render_json(const VerificationReport& report);
std::string render_text(const VerificationReport& report);

// kind: "oct-mult" (9x9 basis-product table, header row and column) or
// "commutators" (21 rows: i, j, then the 64 matrix entries of Y_ij).
// Throws std::invalid_argument for an unknown kind.
std::string emit_table(const std::string& kind);

}  // namespace hopf
