#ifndef THETA_SUITES_HPP
#define THETA_SUITES_HPP

#include <string>
#include <vector>

#include "theta/simpletype.hpp"

namespace theta {

/// One verification record.  Only certified claims count toward failure;
/// observed (uncertified) values never affect the exit status.
struct CheckRecord {
  std::string check;
  std::string item;
  std::string values;
  bool is_claim = true;
  bool pass = true;
  double ms = 0.0;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckRecord> records;
  double ms = 0.0;

  int failures() const {
    int n = 0;
    for (const auto& r : records)
      if (r.is_claim && !r.pass) ++n;
    return n;
  }
  bool ok() const { return failures() == 0; }
};

struct SuiteOptions {
  unsigned long long seed = 20240817;
  int trials = 5;
  int max_rank = 0;   // 0 = suite default
  int max_order = 0;  // 0 = suite default
  int max_n = 0;      // matrix size bound, 0 = suite default
  bool verbose = false;
};

/// Suite names: jacobi, d-theta, semidir, collapse, index-sl, index-so,
/// index-sp, index-g2, index-m23, f4, nreg, friendly, ggs, sect7, vinberg,
/// pvklad.  "all" runs every suite.
std::vector<std::string> suite_names();

/// Runs one suite.  Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt);

/// Formats a record as a structured one-line text or a CSV row.  Timing is
/// omitted unless requested, so fixed-seed reports are byte-identical.
std::string format_record(const CheckRecord& r, bool csv, bool with_ms = false);
std::string csv_header(bool with_ms = false);

}  // namespace theta

#endif
