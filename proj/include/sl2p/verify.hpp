#pragma once

#include <string>
#include <vector>

#include "sl2p/latticeft.hpp"
#include "sl2p/projectors.hpp"

namespace sl2p {

struct CaseResult {
  std::string name;
  std::string expected;
  std::string got;
  bool pass = false;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool pass = true;
  double seconds = 0.0;

  void record(const std::string& name, const std::string& expected, const std::string& got) {
    bool ok = expected == got;
    cases.push_back({name, expected, got, ok});
    pass = pass && ok;
  }
  void record_bool(const std::string& name, bool ok, const std::string& detail = "") {
    cases.push_back({name, "pass", ok ? "pass" : ("FAIL " + detail), ok});
    pass = pass && ok;
  }
};

struct RunOptions {
  std::vector<long long> q_list = {3, 5, 7, 11, 13};
  std::vector<long long> p_list = {3, 5};
  HalfInt depth_max = HalfInt::whole(2);
  int ell_max = 2;
  long long point_budget = kDefaultPointBudget;
};

// named suites: gauss, chartab, ps-oracle, table1, induction, homogeneity,
// census, ft-vanish, kim
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const RunOptions& opt);

SuiteReport suite_gauss(const RunOptions& opt);
SuiteReport suite_chartab(const RunOptions& opt);
SuiteReport suite_ps_oracle(const RunOptions& opt);
SuiteReport suite_table1(const RunOptions& opt);
SuiteReport suite_induction(const RunOptions& opt);
SuiteReport suite_homogeneity(const RunOptions& opt);
SuiteReport suite_census(const RunOptions& opt);
SuiteReport suite_ft_vanish(const RunOptions& opt);
SuiteReport suite_kim(const RunOptions& opt);

std::string report_to_text(const SuiteReport& r, bool verbose);
std::string reports_to_json(const std::vector<SuiteReport>& rs);

}  // namespace sl2p
