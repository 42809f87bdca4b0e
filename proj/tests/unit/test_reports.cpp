#include "helpers.hpp"

#include "mlab/cli.hpp"
#include "mlab/report_io.hpp"
#include "mlab/serialize.hpp"
#include "mlab/suite.hpp"
#include "mlab/verifier.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace mlab;
using testing::cp;
using testing::Gen;

namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() / ("mlab-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("serialize") {
  TEST_CASE("canonical coefficient layout") {
    const CyclotomicRing r2(2);
    const Json a = poly_to_json(cp(r2, {2, 1}), misiurewicz_spec(2, 2, 1));
    CHECK(a["coeffs"].dump() == R"([["2"],["1"]])");
    const Json b = poly_to_json(cp(r2, {1, 0, 1}), misiurewicz_spec(2, 2, 2));
    CHECK(b["coeffs"].dump() == R"([["1"],["0"],["1"]])");
    CHECK(b["schema_version"] == "mlab-poly/1");
    CHECK(b["degree"] == 2);
    const std::string text = serialize_poly(cp(r2, {1, 0, 1}), misiurewicz_spec(2, 2, 2));
    CHECK(text.back() == '\n');
    CHECK(text == serialize_poly(cp(r2, {1, 0, 1}), misiurewicz_spec(2, 2, 2)));
  }

  TEST_CASE("round trip") {
    const FamilySpec s = misiurewicz_spec(2, 3, 1);
    const CycPoly G = misiurewicz_poly(s);
    const CacheEntry e = parse_cache_entry(serialize_poly(G, s));
    CHECK(e.poly == G);
    CHECK(e.spec == s);
    CHECK(e.degree == 3);
    Gen g(81);
    for (int iter = 0; iter < 20; ++iter) {
      const FamilySpec t = g.spec(120);
      const CycPoly P = misiurewicz_poly(t);
      CHECK(parse_cache_entry(serialize_poly(P, t)).poly == P);
    }
    const FamilySpec gl = gleason_spec(3, 3);
    const CycPoly GL = promote(gleason_poly(3, 3), CyclotomicRing(1));
    const CacheEntry ge = parse_cache_entry(serialize_poly(GL, gl));
    CHECK(ge.spec == gl);
    CHECK(ge.poly == GL);
  }

  TEST_CASE("malformed entries") {
    const FamilySpec s = misiurewicz_spec(2, 2, 2);
    const std::string good = serialize_poly(misiurewicz_poly(s), s);
    CHECK_THROWS_AS(parse_cache_entry(good.substr(0, good.size() / 2)), Error);
    CHECK_THROWS_AS(parse_cache_entry(""), Error);
    auto mutate = [&](auto f) {
      Json j = Json::parse(good);
      f(j);
      return j.dump();
    };
    CHECK_THROWS_AS(parse_cache_entry(mutate([](Json& j) { j["schema_version"] = "mlab-poly/0"; })), Error);
    CHECK_THROWS_AS(parse_cache_entry(mutate([](Json& j) { j["degree"] = 3; })), Error);
    CHECK_THROWS_AS(parse_cache_entry(mutate([](Json& j) { j["coeffs"].push_back(Json::array({"0"})); })), Error);
    CHECK_THROWS_AS(parse_cache_entry(mutate([](Json& j) { j["coeffs"][2][0] = "2"; })), Error);
    CHECK_THROWS_AS(parse_cache_entry(mutate([](Json& j) { j["coeffs"][0][0] = "x1"; })), Error);
    CHECK_THROWS_AS(parse_cache_entry(mutate([](Json& j) { j["coeffs"][0].push_back("1"); })), Error);
    CHECK_THROWS_AS(parse_cache_entry(mutate([](Json& j) { j["m"] = 1; })), Error);
  }

  TEST_CASE("rendering") {
    const CyclotomicRing r2(2);
    CHECK(render_poly(cp(r2, {1, 0, 1})) == "c^2 + 1");
    CHECK(render_poly(testing::ip({2, 2, 2, 1})) == "c^3 + 2*c^2 + 2*c + 2");
    CHECK(cache_path("/x", misiurewicz_spec(2, 3, 1)) == fs::path("/x/mlab-poly-d2-m3-n1-k2-s1.json"));
  }

  TEST_CASE("cache behaviour") {
    TempDir dir;
    const FamilySpec s = misiurewicz_spec(3, 3, 1);
    std::vector<std::string> warnings;
    auto warn = [&](const std::string& w) { warnings.push_back(w); };
    FamilyBuilder b1;
    const CycPoly cold = load_or_build(b1, s, dir.path, warn);
    CHECK(fs::exists(cache_path(dir.path, s)));
    FamilyBuilder b2;
    const CycPoly warm = load_or_build(b2, s, dir.path, warn);
    CHECK(warm == cold);
    CHECK(warnings.empty());
    const std::string text = slurp(cache_path(dir.path, s));
    std::ofstream(cache_path(dir.path, s)) << text.substr(0, text.size() / 3);
    FamilyBuilder b3;
    CHECK(load_or_build(b3, s, dir.path, warn) == cold);
    CHECK(warnings.size() == 1);
    CHECK(slurp(cache_path(dir.path, s)) == text);
    Json j = Json::parse(text);
    j["schema_version"] = "mlab-poly/0";
    std::ofstream(cache_path(dir.path, s)) << j.dump() << "\n";
    FamilyBuilder b4;
    CHECK(load_or_build(b4, s, dir.path, warn) == cold);
    CHECK(slurp(cache_path(dir.path, s)) == text);
    for (const auto& entry : fs::directory_iterator(dir.path))
      CHECK(entry.path().filename().string().rfind("mlab-poly-", 0) == 0);
    FamilyBuilder b5;
    CHECK(load_or_build(b5, s, std::nullopt) == cold);
  }
}

TEST_SUITE("verifier") {
  TEST_CASE("construction examples") {
    Verifier v;
    for (const auto& s : {misiurewicz_spec(2, 2, 2), misiurewicz_spec(2, 3, 1), misiurewicz_spec(3, 2, 1)}) {
      const auto r = v.verify_construction(s);
      CHECK(r.verdict == Verdict::Pass);
      CHECK(r.claim_id == "thm2.1");
    }
    CHECK(v.verify_construction(misiurewicz_spec(2, 3, 1)).computed == "monic;deg=3;squarefree");
    VerifierOptions small;
    small.degree_cap = 10;
    Verifier tight(small);
    CHECK(tight.verify_construction(misiurewicz_spec(3, 4, 1)).verdict == Verdict::Skipped);
  }

  TEST_CASE("orbit norm examples") {
    Verifier v;
    const auto a = v.verify_thm_1_1(misiurewicz_spec(2, 2, 1), 1);
    REQUIRE(a.size() == 1);
    CHECK(a[0].expected == "2");
    CHECK(a[0].computed == "2");
    const auto b = v.verify_thm_1_1(misiurewicz_spec(2, 2, 2));
    REQUIRE(b.size() == 6);
    CHECK(b[0].computed == "1");
    CHECK(b[1].computed == "2");
    for (const auto& r : b) CHECK(r.verdict == Verdict::Pass);
    const auto c = v.verify_thm_1_1(misiurewicz_spec(6, 2, 1));
    REQUIRE(c.size() == 1);
    CHECK(c[0].verdict == Verdict::Skipped);
    CHECK(c[0].computed == "skipped: d not a prime power");
    CHECK(v.verify_thm_1_1(misiurewicz_spec(5, 3, 2)).back().expected == "5^4");
  }

  TEST_CASE("pair norm examples") {
    Verifier v;
    const auto b = v.verify_thm_1_5(misiurewicz_spec(2, 3, 1), 2, 1);
    CHECK(b.claim_id == "thm1.5b");
    CHECK(b.computed == "2");
    CHECK(b.verdict == Verdict::Pass);
    const auto a = v.verify_thm_1_5(misiurewicz_spec(2, 3, 1), 2, 2);
    CHECK(a.claim_id == "thm1.5a");
    CHECK(a.computed == "1");
    const auto c = v.verify_thm_1_5(misiurewicz_spec(2, 2, 1), 3, 1);
    CHECK(c.claim_id == "thm1.5c");
    CHECK(c.computed == "2");
    CHECK(v.verify_thm_1_5(misiurewicz_spec(2, 3, 1), 3, 1).verdict == Verdict::Skipped);
    CHECK(v.verify_thm_1_5(misiurewicz_spec(6, 3, 1), 2, 1).verdict == Verdict::Skipped);
    CHECK(v.verify_thm_1_5(misiurewicz_spec(5, 4, 2), 3, 2).expected == "5^96");
  }

  TEST_CASE("unit scan examples") {
    Verifier v;
    const auto rows = v.scan_conj_1_6(misiurewicz_spec(2, 2, 2));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].computed == "nonunit");
    CHECK(rows[1].computed == "nonunit");
    for (const auto& r : rows) CHECK(r.verdict == Verdict::Pass);
    const auto r232 = v.scan_conj_1_6(misiurewicz_spec(2, 3, 2));
    CHECK(r232[0].verdict == Verdict::Pass);
    VerifierOptions o;
    o.conj_beyond_n = true;
    Verifier beyond(o);
    const auto extra = beyond.scan_conj_1_6(misiurewicz_spec(2, 2, 1));
    REQUIRE(extra.size() == 2);
    CHECK(extra[1].expected == "unspecified-by-paper");
    CHECK(extra[1].verdict == Verdict::Skipped);
  }

  TEST_CASE("lehmer examples") {
    Verifier v;
    CHECK(v.verify_lehmer(4, 1).computed == "nonunit");
    CHECK(v.verify_lehmer(6, 3).computed == "nonunit");
    CHECK(v.verify_lehmer(5, 3).computed == "unit");
    for (auto [m, n] : std::vector<std::pair<int, int>>{{4, 1}, {6, 3}, {5, 3}}) CHECK(v.verify_lehmer(m, n).verdict == Verdict::Pass);
    CHECK_THROWS_AS(v.verify_lehmer(3, 3), Error);
  }

  TEST_CASE("identity examples") {
    Verifier v;
    CHECK(v.verify_mobius_inversion(2, 4).verdict == Verdict::Pass);
    const auto res = v.verify_gleason_resultant(2, 2, 3);
    CHECK(res.computed == "1");
    CHECK(v.verify_bek10(2, 2, 1).computed == "congruent");
    CHECK(v.verify_bek10(6, 2, 1).verdict == Verdict::Skipped);
    const auto w = v.verify_w_independence(misiurewicz_spec(4, 3, 1), 2, 1);
    CHECK(w.computed == "identical");
    CHECK(v.verify_common_root(2, 3, 2, 2).computed == "zero");
    CHECK(v.verify_common_root(2, 3, 2, 1).computed == "nonzero");
    for (const auto& r : v.verify_identities(3)) CHECK(r.verdict == Verdict::Pass);
    for (const auto& r : v.verify_support(misiurewicz_spec(6, 2, 1))) CHECK(r.verdict == Verdict::Pass);
  }

  TEST_CASE("newton and certificates") {
    Verifier v;
    const auto n = v.verify_newton(2, 2);
    CHECK(n.expected == "(1,2) (2,1) (4,0) | -1 -1/2");
    CHECK(n.verdict == Verdict::Pass);
    const auto rabin = v.certificate_report(misiurewicz_spec(2, 2, 2), CertificateKind::Rabin);
    CHECK(rabin.verdict == Verdict::Pass);
    CHECK(rabin.param("q") == 3);
    CHECK(v.certificate_report(misiurewicz_spec(4, 3, 1), CertificateKind::DegreeBound).verdict == Verdict::Pass);
    CHECK(v.certificate_report(misiurewicz_spec(6, 3, 1), CertificateKind::DegreeBound).verdict == Verdict::Skipped);
  }

  TEST_CASE("report helpers") {
    CHECK(render_power(2, 0) == "1");
    CHECK(render_power(2, 1) == "2");
    CHECK(render_power(5, 20) == "5^20");
    CHECK(render_norm(0, 2) == "0");
    CHECK(render_norm(32, 2) == "2^5");
    CHECK(render_norm(12, 2) == "12");
    VerificationReport a, b;
    a.claim_id = b.claim_id = "thm1.1";
    a.params = {{"d", 2}, {"m", 3}, {"i", 1}};
    b.params = {{"d", 2}, {"m", 2}, {"i", 5}};
    CHECK(report_less(b, a));
    CHECK_FALSE(report_less(a, b));
    a.verdict = b.verdict = Verdict::Pass;
    CHECK(exit_code_for({a, b}) == 0);
    b.verdict = Verdict::Skipped;
    CHECK(exit_code_for({a, b}) == 0);
    CHECK(exit_code_for({a, b, forced_failure()}) == 1);
  }

  TEST_CASE("property: verdict pass iff renderings agree") {
    Verifier v;
    Gen g(91);
    for (int iter = 0; iter < 15; ++iter) {
      const FamilySpec s = g.spec(60);
      std::vector<VerificationReport> all = v.verify_thm_1_1(s);
      for (std::int64_t j = 2; j <= 4; ++j) all.push_back(v.verify_thm_1_5(s, j, g.range(1, 3)));
      for (auto& r : v.scan_conj_1_6(s)) all.push_back(r);
      for (const auto& r : all) {
        if (r.verdict == Verdict::Skipped) {
          CHECK_FALSE(r.reason.empty());
          continue;
        }
        CHECK((r.verdict == Verdict::Pass) == (r.expected == r.computed));
        CHECK(r.elapsed_ms == 0);
      }
    }
  }
}

TEST_SUITE("suite") {
  TEST_CASE("grids") {
    const auto grid = construction_grid();
    for (const auto& s : grid) {
      CHECK(misiurewicz_degree(s.d, s.m, s.n) <= 512);
      CHECK(s.zeta->power == 1);
    }
    CHECK(std::any_of(grid.begin(), grid.end(), [](const FamilySpec& s) { return s.d == 4 && s.zeta->order == 4; }));
    CHECK(conj_grid().size() == 18);
    for (const auto& s : rabin_grid()) CHECK(s.d == 2);
    for (const auto& s : degree_bound_grid()) CHECK(s.n == 1);
  }

  TEST_CASE("pool ordering is independent of the job count") {
    Verifier v;
    SuiteOptions one, four;
    four.jobs = 4;
    const auto a = render_json(suite_thm_1_1(v, one));
    const auto b = render_json(suite_thm_1_1(v, four));
    CHECK(a == b);
    std::vector<ReportJob> jobs{[]() -> std::vector<VerificationReport> { fail(ErrorKind::InvalidArgument, "boom"); }};
    CHECK_THROWS_AS(run_pool(jobs, 2), Error);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("documented invocations") {
    const Run a = run({"verify", "thm1-1", "--d", "2", "--m", "2", "--n", "1", "--i-max", "3", "--format", "json"});
    CHECK(a.code == 0);
    const Json j = Json::parse(a.out);
    REQUIRE(j.size() == 3);
    for (const auto& r : j) {
      CHECK(r["verdict"] == "pass");
      std::vector<std::string> keys;
      for (auto it = r.begin(); it != r.end(); ++it) keys.push_back(it.key());
      CHECK(keys == std::vector<std::string>{"claim", "params", "expected", "computed", "verdict", "elapsed_ms"});
    }
    const Run b = run({"build", "--d", "2", "--m", "2", "--n", "2", "--zeta-order", "2", "--zeta-power", "1"});
    CHECK(b.code == 0);
    CHECK(b.out == "c^2 + 1\n");
    const Run c = run({"verify", "thm1-1", "--d", "6", "--m", "2", "--n", "1"});
    CHECK(c.code == 0);
    CHECK(c.out.find("skipped") != std::string::npos);
    CHECK(c.out.find("d not a prime power") != std::string::npos);
  }

  TEST_CASE("formats and exit codes") {
    const Run csv = run({"--format", "csv", "verify", "lehmer", "--m", "6", "--n", "3"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("claim,params,expected,computed,verdict,elapsed_ms\n", 0) == 0);
    CHECK(run({"newton", "--p", "3", "--e", "2", "--force-fail"}).code == 1);
    CHECK(run({"verify", "lehmer", "--m", "2", "--n", "5"}).code == 2);
    CHECK(run({"verify", "nonsense"}).code == 2);
    CHECK(run({"build", "--d", "3", "--m", "9", "--n", "1"}).code == 2);
    CHECK(run({"build", "--d", "2", "--m", "1", "--n", "1"}).code == 2);
    CHECK(run({"--format", "xml", "newton"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    const Run g = run({"gleason", "--d", "2", "--n", "3", "--format", "json"});
    CHECK(g.code == 0);
    CHECK(parse_cache_entry(g.out).poly.degree() == 3);
  }

  TEST_CASE("grid commands") {
    const Run scan = run({"scan", "conj1-6", "--format", "csv"});
    CHECK(scan.code == 0);
    CHECK(count(scan.out, "\nconj1.6,") == 36);
    const Run cert = run({"certify", "--d", "2", "--m", "3", "--n", "1", "--format", "csv"});
    CHECK(cert.code == 0);
    CHECK(count(cert.out, ",pass,") == 2);
    const Run ident = run({"verify", "identities", "--d", "2", "--jobs", "2"});
    CHECK(ident.code == 0);
    const Run t15 = run({"verify", "thm1-5", "--d", "2", "--m", "3", "--n", "1"});
    CHECK(t15.code == 0);
    CHECK(count(t15.out, "pass  thm1.5") + count(t15.out, "skipped  thm1.5") == 12);
  }

  TEST_CASE("files, cache and bundles") {
    TempDir dir;
    const fs::path out = dir.path / "report.json";
    CHECK(run({"newton", "--format", "json", "--output", out.string()}).code == 0);
    CHECK(Json::parse(slurp(out)).size() == 18);
    CHECK(run({"build", "--d", "3", "--m", "2", "--n", "2", "--cache-dir", dir.path.string()}).code == 0);
    CHECK(fs::exists(cache_path(dir.path, misiurewicz_spec(3, 2, 2))));
    const Run timed = run({"verify", "thm1-1", "--d", "3", "--m", "3", "--n", "2", "--timings", "--format", "json"});
    CHECK(timed.code == 0);
  }
}
