#pragma once

#include "mlab/verifier.hpp"

#include <functional>
#include <vector>

namespace mlab {

using ReportJob = std::function<std::vector<VerificationReport>()>;

/// Runs jobs on a pool of `jobs` threads and returns all reports sorted.
/// The first exception thrown by a job is rethrown after the pool drains.
std::vector<VerificationReport> run_pool(const std::vector<ReportJob>& work, int jobs);

/// Cells d in d_values, every k | d with k > 1 (s = 1), m in [2,5], n in [1,4], degree <= degree_limit.
std::vector<FamilySpec> construction_grid(const std::vector<std::int64_t>& d_values = {2, 3, 4, 5},
                                          std::int64_t degree_limit = 512);
/// Non-prime-power cells exercised for skip routing and ident.support.
std::vector<FamilySpec> composite_grid();
/// d in {2,3}, m in [2,4], n in [1,3] with the default zeta.
std::vector<FamilySpec> conj_grid();
/// d = 2, n <= 3, m in [2,4], degree <= 64.
std::vector<FamilySpec> rabin_grid();
/// Prime-power d <= 5, n = 1, m in [2,4], every k | d with k > 1.
std::vector<FamilySpec> degree_bound_grid();

struct SuiteOptions {
  int jobs = 1;
  std::int64_t i_max = 0;
};

std::vector<VerificationReport> suite_construction(Verifier& v, const SuiteOptions& o);
std::vector<VerificationReport> suite_thm_1_1(Verifier& v, const SuiteOptions& o);
std::vector<VerificationReport> suite_thm_1_5(Verifier& v, const SuiteOptions& o);
std::vector<VerificationReport> suite_conj_1_6(Verifier& v, const SuiteOptions& o);
std::vector<VerificationReport> suite_lehmer(Verifier& v, const SuiteOptions& o);
std::vector<VerificationReport> suite_identities(Verifier& v, const SuiteOptions& o);
std::vector<VerificationReport> suite_newton(Verifier& v, const SuiteOptions& o);
std::vector<VerificationReport> suite_certificates(Verifier& v, const SuiteOptions& o);
/// Every suite above plus ident.support on the composite grid.
std::vector<VerificationReport> full_suite(Verifier& v, const SuiteOptions& o);

/// A report that always fails, used to exercise the failure exit path.
VerificationReport forced_failure();

}  // namespace mlab
