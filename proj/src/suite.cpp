#include "mlab/suite.hpp"

#include "mlab/number_theory.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace mlab {

namespace {

std::int64_t spec_degree(const FamilySpec& s) {
  return s.is_gleason() ? gleason_degree(s.d, s.n) : misiurewicz_degree(s.d, s.m, s.n);
}

std::vector<FamilySpec> all_zetas(std::int64_t d, std::int64_t m, std::int64_t n) {
  std::vector<FamilySpec> out;
  for (std::int64_t k : divisors(d))
    if (k > 1) out.push_back(misiurewicz_spec(d, m, n, ZetaDescriptor{k, 1}));
  return out;
}

template <class F>
void each_spec(std::vector<ReportJob>& work, const std::vector<FamilySpec>& specs, F f) {
  for (const auto& s : specs) work.push_back([s, f] { return f(s); });
}

std::vector<ReportJob> one(std::function<VerificationReport()> f) {
  return {[f] { return std::vector<VerificationReport>{f()}; }};
}

std::vector<FamilySpec> norm_specs() {
  auto grid = construction_grid();
  std::vector<FamilySpec> out;
  for (const auto& s : grid)
    if (prime_power(s.d)) out.push_back(s);
  for (const auto& s : composite_grid()) out.push_back(s);
  return out;
}

}  // namespace

std::vector<VerificationReport> run_pool(const std::vector<ReportJob>& work, int jobs) {
  std::vector<std::vector<VerificationReport>> results(work.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
      try {
        results[i] = work[i]();
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(work.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  std::vector<VerificationReport> out;
  for (auto& r : results)
    for (auto& x : r) out.push_back(std::move(x));
  sort_reports(out);
  return out;
}

std::vector<FamilySpec> construction_grid(const std::vector<std::int64_t>& d_values, std::int64_t degree_limit) {
  std::vector<FamilySpec> out;
  for (std::int64_t d : d_values)
    for (std::int64_t m = 2; m <= 5; ++m)
      for (std::int64_t n = 1; n <= 4; ++n) {
        if (misiurewicz_degree(d, m, n) > degree_limit) continue;
        for (auto& s : all_zetas(d, m, n)) out.push_back(s);
      }
  return out;
}

std::vector<FamilySpec> composite_grid() {
  std::vector<FamilySpec> out;
  for (std::int64_t m = 2; m <= 3; ++m)
    for (std::int64_t n = 1; n <= 2; ++n)
      for (auto& s : all_zetas(6, m, n)) out.push_back(s);
  return out;
}

std::vector<FamilySpec> conj_grid() {
  std::vector<FamilySpec> out;
  for (std::int64_t d : {2, 3})
    for (std::int64_t m = 2; m <= 4; ++m)
      for (std::int64_t n = 1; n <= 3; ++n) out.push_back(misiurewicz_spec(d, m, n));
  return out;
}

std::vector<FamilySpec> rabin_grid() {
  std::vector<FamilySpec> out;
  for (std::int64_t m = 2; m <= 4; ++m)
    for (std::int64_t n = 1; n <= 3; ++n) {
      const FamilySpec s = misiurewicz_spec(2, m, n);
      if (spec_degree(s) <= 64) out.push_back(s);
    }
  return out;
}

std::vector<FamilySpec> degree_bound_grid() {
  std::vector<FamilySpec> out;
  for (std::int64_t d : {2, 3, 4, 5})
    for (std::int64_t m = 2; m <= 4; ++m)
      for (auto& s : all_zetas(d, m, 1)) out.push_back(s);
  return out;
}

std::vector<VerificationReport> suite_construction(Verifier& v, const SuiteOptions& o) {
  std::vector<ReportJob> work;
  auto specs = construction_grid();
  for (const auto& s : composite_grid()) specs.push_back(s);
  each_spec(work, specs, [&v](const FamilySpec& s) { return std::vector<VerificationReport>{v.verify_construction(s)}; });
  return run_pool(work, o.jobs);
}

std::vector<VerificationReport> suite_thm_1_1(Verifier& v, const SuiteOptions& o) {
  std::vector<ReportJob> work;
  const std::int64_t i_max = o.i_max;
  each_spec(work, norm_specs(), [&v, i_max](const FamilySpec& s) { return v.verify_thm_1_1(s, i_max); });
  return run_pool(work, o.jobs);
}

std::vector<VerificationReport> suite_thm_1_5(Verifier& v, const SuiteOptions& o) {
  std::vector<ReportJob> work;
  each_spec(work, norm_specs(), [&v](const FamilySpec& s) {
    std::vector<VerificationReport> out;
    for (std::int64_t j = 2; j <= 4; ++j)
      for (std::int64_t l = 1; l <= 4; ++l) out.push_back(v.verify_thm_1_5(s, j, l));
    return out;
  });
  return run_pool(work, o.jobs);
}

std::vector<VerificationReport> suite_conj_1_6(Verifier& v, const SuiteOptions& o) {
  std::vector<ReportJob> work;
  each_spec(work, conj_grid(), [&v](const FamilySpec& s) { return v.scan_conj_1_6(s); });
  return run_pool(work, o.jobs);
}

std::vector<VerificationReport> suite_lehmer(Verifier& v, const SuiteOptions& o) {
  std::vector<ReportJob> work;
  for (std::int64_t m = 2; m <= 30; ++m)
    work.push_back([&v, m] {
      std::vector<VerificationReport> out;
      for (std::int64_t n = 1; n < m; ++n) out.push_back(v.verify_lehmer(m, n));
      return out;
    });
  return run_pool(work, o.jobs);
}

std::vector<VerificationReport> suite_identities(Verifier& v, const SuiteOptions& o) {
  std::vector<ReportJob> work;
  for (std::int64_t d : {2, 3, 4}) {
    IdentityBounds b;
    if (d == 4) {
      b.mobius_n_max = 0;
      b.gleason_n_max = 0;
    } else {
      b.w_m = 0;
    }
    work.push_back([&v, d, b] { return v.verify_identities(d, b); });
  }
  return run_pool(work, o.jobs);
}

std::vector<VerificationReport> suite_newton(Verifier& v, const SuiteOptions& o) {
  std::vector<ReportJob> work;
  for (std::int64_t p : {2, 3, 5, 7, 11, 13})
    for (std::int64_t e = 1; e <= 3; ++e) {
      if (checked_pow(p, e, 1 << 20) > 2197) continue;
      for (auto& j : one([&v, p, e] { return v.verify_newton(p, e); })) work.push_back(j);
    }
  return run_pool(work, o.jobs);
}

std::vector<VerificationReport> suite_certificates(Verifier& v, const SuiteOptions& o) {
  std::vector<ReportJob> work;
  each_spec(work, rabin_grid(), [&v](const FamilySpec& s) {
    return std::vector<VerificationReport>{v.certificate_report(s, CertificateKind::Rabin)};
  });
  each_spec(work, degree_bound_grid(), [&v](const FamilySpec& s) {
    return std::vector<VerificationReport>{v.certificate_report(s, CertificateKind::DegreeBound)};
  });
  return run_pool(work, o.jobs);
}

std::vector<VerificationReport> full_suite(Verifier& v, const SuiteOptions& o) {
  std::vector<VerificationReport> out;
  auto take = [&out](std::vector<VerificationReport> r) {
    for (auto& x : r) out.push_back(std::move(x));
  };
  take(suite_construction(v, o));
  take(suite_thm_1_1(v, o));
  take(suite_thm_1_5(v, o));
  take(suite_conj_1_6(v, o));
  take(suite_lehmer(v, o));
  take(suite_identities(v, o));
  take(suite_newton(v, o));
  take(suite_certificates(v, o));
  std::vector<ReportJob> work;
  each_spec(work, composite_grid(), [&v, &o](const FamilySpec& s) { return v.verify_support(s, o.i_max); });
  take(run_pool(work, o.jobs));
  sort_reports(out);
  return out;
}

VerificationReport forced_failure() {
  VerificationReport r;
  r.claim_id = "selftest.forced-fail";
  r.expected = "1";
  r.computed = "0";
  r.verdict = Verdict::Fail;
  r.reason = "synthetic failure requested";
  return r;
}

}  // namespace mlab
