#include "mlab/cli.hpp"

#include "mlab/report_io.hpp"
#include "mlab/suite.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <ostream>

namespace mlab {

namespace {

struct Globals {
  std::int64_t degree_cap = kDefaultDegreeCap;
  std::string cache_dir;
  int jobs = 1;
  std::string format = "text";
  std::int64_t q_max = kDefaultQMax;
  bool timings = false;
  std::string bundle_dir;
  std::string output;
  bool force_fail = false;
};

struct SpecArgs {
  std::int64_t d = 0, m = 0, n = 0, k = 0, s = 1;
  CLI::Option* d_opt = nullptr;
  CLI::Option* m_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* k_opt = nullptr;

  bool given() const { return d_opt->count() > 0; }

  FamilySpec spec(bool gleason_allowed = false) const {
    if (!d_opt->count() || !n_opt->count()) fail(ErrorKind::InvalidArgument, "--d and --n are required");
    if (!m_opt->count() || (gleason_allowed && m == 0)) {
      if (!gleason_allowed) fail(ErrorKind::InvalidArgument, "--m is required");
      return gleason_spec(d, n);
    }
    std::optional<ZetaDescriptor> zeta;
    if (k_opt->count()) zeta = ZetaDescriptor{k, s};
    return misiurewicz_spec(d, m, n, zeta);
  }
};

void add_globals(CLI::App* app, Globals& g) {
  app->add_option("--degree-cap", g.degree_cap, "Largest polynomial degree to construct")->check(CLI::PositiveNumber);
  app->add_option("--cache-dir", g.cache_dir, "Polynomial cache directory (default $MLAB_CACHE_DIR)");
  app->add_option("--jobs", g.jobs, "Worker threads for grid runs")->check(CLI::PositiveNumber);
  app->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--q-max", g.q_max, "Largest prime tried by certificates")->check(CLI::PositiveNumber);
  app->add_flag("--timings", g.timings, "Record elapsed_ms in reports");
  app->add_option("--bundle-dir", g.bundle_dir, "Directory for counterexample bundles");
  app->add_option("--output", g.output, "Write the report to this file instead of stdout");
  app->add_flag("--force-fail", g.force_fail, "Append a synthetic failing report");
}

void add_spec(CLI::App* app, SpecArgs& a) {
  a.d_opt = app->add_option("--d", a.d, "Degree d >= 2");
  a.m_opt = app->add_option("--m", a.m, "Preperiod m");
  a.n_opt = app->add_option("--n", a.n, "Period n");
  a.k_opt = app->add_option("--zeta-order", a.k, "Order k of zeta");
  app->add_option("--zeta-power", a.s, "Power s of zeta");
}

ReportFormat parse_format(const std::string& f) {
  if (f == "json") return ReportFormat::Json;
  if (f == "csv") return ReportFormat::Csv;
  return ReportFormat::Text;
}

std::string bundle_name(const VerificationReport& r) {
  std::string name = "bundle-" + r.claim_id;
  for (const auto& [k, v] : r.params) name += "-" + k + std::to_string(v);
  return name + ".json";
}

int emit(std::vector<VerificationReport> reports, const Globals& g, std::ostream& out, std::ostream& err) {
  if (g.force_fail) reports.push_back(forced_failure());
  sort_reports(reports);
  for (const auto& r : reports) {
    if (!r.bundle) continue;
    if (!g.bundle_dir.empty()) {
      std::filesystem::create_directories(g.bundle_dir);
      write_atomic(std::filesystem::path(g.bundle_dir) / bundle_name(r), r.bundle->dump(2) + "\n");
    } else {
      err << "counterexample: " << r.bundle->dump() << '\n';
    }
  }
  const std::string text = render_reports(reports, parse_format(g.format));
  if (g.output.empty()) out << text;
  else write_atomic(g.output, text);
  return exit_code_for(reports);
}

std::optional<std::filesystem::path> cache_dir(const Globals& g) {
  if (!g.cache_dir.empty()) return std::filesystem::path(g.cache_dir);
  if (const char* env = std::getenv("MLAB_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Misiurewicz polynomial laboratory", "mlab"};
  app.require_subcommand(1);
  Globals g;
  add_globals(&app, g);

  SpecArgs build_args;
  auto* build = app.add_subcommand("build", "Construct a Misiurewicz polynomial");
  add_spec(build, build_args);

  SpecArgs gleason_args;
  auto* gleason = app.add_subcommand("gleason", "Construct a Gleason polynomial");
  gleason_args.d_opt = gleason->add_option("--d", gleason_args.d, "Degree d >= 2")->required();
  gleason_args.n_opt = gleason->add_option("--n", gleason_args.n, "Period n")->required();

  SpecArgs verify_args;
  std::string claim;
  std::int64_t j = 0, l = 0, i_max = 0;
  auto* verify = app.add_subcommand("verify", "Verify a claim on one cell or on its grid");
  verify->add_option("claim", claim, "Claim")
      ->required()
      ->check(CLI::IsMember({"thm2-1", "thm1-1", "thm1-5", "lehmer", "identities", "all"}));
  add_spec(verify, verify_args);
  auto* j_opt = verify->add_option("--j", j, "Preperiod j of the second polynomial");
  auto* l_opt = verify->add_option("--l", l, "Period l of the second polynomial");
  verify->add_option("--i-max", i_max, "Largest orbit index for thm1-1 (default 3n)");

  SpecArgs scan_args;
  std::string scan_claim;
  bool beyond = false;
  auto* scan = app.add_subcommand("scan", "Scan the unit criterion at j = m");
  scan->add_option("claim", scan_claim, "Scan name")->required()->check(CLI::IsMember({"conj1-6"}));
  add_spec(scan, scan_args);
  scan->add_flag("--beyond-n", beyond, "Also compute l in (n, 2n], labelled unspecified-by-paper");

  SpecArgs cert_args;
  std::string kind = "all";
  auto* certify = app.add_subcommand("certify", "Search for irreducibility certificates");
  add_spec(certify, cert_args);
  certify->add_option("--kind", kind, "Certificate kind")->check(CLI::IsMember({"rabin", "degree-bound", "all"}));

  std::int64_t p = 0, e = 0;
  auto* newton = app.add_subcommand("newton", "Newton polygon of the binomial valuation points");
  auto* p_opt = newton->add_option("--p", p, "Prime p");
  auto* e_opt = newton->add_option("--e", e, "Exponent e");

  for (auto* sub : {build, gleason, verify, scan, certify, newton}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    VerifierOptions vo;
    vo.degree_cap = g.degree_cap;
    vo.q_max = g.q_max;
    vo.record_timing = g.timings;
    vo.conj_beyond_n = beyond;
    Verifier v(vo);
    SuiteOptions so;
    so.jobs = g.jobs;
    so.i_max = i_max;
    auto warn = [&err](const std::string& msg) { err << "warning: " << msg << '\n'; };

    if (*build || *gleason) {
      const FamilySpec spec = *build ? build_args.spec() : gleason_spec(gleason_args.d, gleason_args.n);
      const CycPoly poly = load_or_build(v.builder(), spec, cache_dir(g), warn);
      const std::string text = g.format == "text" ? render_poly(poly) + "\n" : serialize_poly(poly, spec);
      if (g.output.empty()) out << text;
      else write_atomic(g.output, text);
      return 0;
    }

    std::vector<VerificationReport> reports;
    if (*verify) {
      const bool one = verify_args.given();
      if (claim == "thm2-1") {
        reports = one ? std::vector{v.verify_construction(verify_args.spec())} : suite_construction(v, so);
      } else if (claim == "thm1-1") {
        reports = one ? v.verify_thm_1_1(verify_args.spec(), i_max) : suite_thm_1_1(v, so);
      } else if (claim == "thm1-5") {
        if (!one) {
          reports = suite_thm_1_5(v, so);
        } else if (j_opt->count() && l_opt->count()) {
          reports = {v.verify_thm_1_5(verify_args.spec(), j, l)};
        } else {
          for (std::int64_t jj = 2; jj <= 4; ++jj)
            for (std::int64_t ll = 1; ll <= 4; ++ll) reports.push_back(v.verify_thm_1_5(verify_args.spec(), jj, ll));
        }
      } else if (claim == "lehmer") {
        if (verify_args.m_opt->count() && verify_args.n_opt->count()) reports = {v.verify_lehmer(verify_args.m, verify_args.n)};
        else reports = suite_lehmer(v, so);
      } else if (claim == "identities") {
        reports = one ? v.verify_identities(verify_args.d) : suite_identities(v, so);
      } else {
        reports = full_suite(v, so);
      }
    } else if (*scan) {
      reports = scan_args.given() ? v.scan_conj_1_6(scan_args.spec()) : suite_conj_1_6(v, so);
    } else if (*certify) {
      if (!cert_args.given()) {
        reports = suite_certificates(v, so);
      } else {
        const FamilySpec spec = cert_args.spec(true);
        if (kind != "degree-bound") reports.push_back(v.certificate_report(spec, CertificateKind::Rabin));
        if (kind != "rabin") reports.push_back(v.certificate_report(spec, CertificateKind::DegreeBound));
      }
    } else if (*newton) {
      if (p_opt->count() != e_opt->count()) fail(ErrorKind::InvalidArgument, "--p and --e go together");
      reports = p_opt->count() ? std::vector{v.verify_newton(p, e)} : suite_newton(v, so);
    }
    return emit(std::move(reports), g, out, err);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
}

}  // namespace mlab
