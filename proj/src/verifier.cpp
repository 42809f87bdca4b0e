#include "mlab/verifier.hpp"

#include "mlab/finite_field.hpp"
#include "mlab/gcd.hpp"
#include "mlab/modular.hpp"
#include "mlab/newton.hpp"
#include "mlab/number_theory.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>

namespace mlab {

namespace {

using Clock = std::chrono::steady_clock;

const char* const kSortKeys[] = {"d", "m", "n", "k", "s", "j", "l", "i"};

class Recorder {
 public:
  Recorder(const VerifierOptions& o, std::string claim, Params params) : record_(o.record_timing), start_(Clock::now()) {
    r_.claim_id = std::move(claim);
    r_.params = std::move(params);
    r_.verdict = Verdict::Pass;
  }

  VerificationReport& report() { return r_; }

  VerificationReport finish() {
    if (r_.verdict != Verdict::Skipped) {
      r_.verdict = r_.expected == r_.computed ? Verdict::Pass : Verdict::Fail;
    }
    stamp();
    return std::move(r_);
  }

  VerificationReport skip(const std::string& reason) {
    r_.verdict = Verdict::Skipped;
    r_.reason = reason;
    if (r_.expected.empty()) r_.expected = "-";
    r_.computed = "skipped: " + reason;
    stamp();
    return std::move(r_);
  }

  VerificationReport error(const std::string& what) {
    r_.verdict = Verdict::Fail;
    r_.reason = what;
    if (r_.expected.empty()) r_.expected = "-";
    r_.computed = "error: " + what;
    stamp();
    return std::move(r_);
  }

 private:
  void stamp() {
    if (record_)
      r_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
  }

  bool record_;
  Clock::time_point start_;
  VerificationReport r_;
};

// Runs body, turning LimitExceeded into a skip and other library errors into a failure.
template <class Body>
VerificationReport guarded(Recorder& rec, Body&& body) {
  try {
    body(rec.report());
    return rec.finish();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::LimitExceeded) return rec.skip(e.what());
    return rec.error(e.what());
  }
}

Params with(Params p, std::initializer_list<std::pair<std::string, std::int64_t>> extra) {
  for (const auto& e : extra) p.push_back(e);
  return p;
}

std::string render_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_str(10);
}

// gcd(G, G') = 1 over Q(zeta): a degree-one prime with gcd 1 mod q, else the exact gcd.
bool squarefree(const CycPoly& G) {
  if (G.degree() <= 1) return true;
  const std::int64_t k = G.ring().order();
  const auto& field = G.ring().field();
  for (modp::u64 q : modp::primes_one_mod(k, 16)) {
    modp::MontField F(q);
    const modp::u64 w = modp::primitive_root_of_unity(F, k);
    std::vector<modp::u64> pw(field->degree());
    pw[0] = F.one();
    for (std::size_t t = 1; t < pw.size(); ++t) pw[t] = F.mul(pw[t - 1], w);
    const modp::ModPoly g = modp::image(F, G, pw);
    if (modp::gcd_monic(F, g, modp::derivative(F, g)).size() == 1) return true;
  }
  return poly_gcd_monic(G, derivative(G)).degree() == 0;
}

Json failure_bundle(const VerificationReport& r, const FamilySpec& spec, const CycPoly& G, const std::string& target,
                    const Integer& norm) {
  Json b;
  b["claim"] = r.claim_id;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  b["params"] = std::move(params);
  b["spec"] = spec.key();
  b["polynomial"] = poly_to_json(G, spec);
  b["target"] = target;
  b["expected"] = r.expected;
  b["computed"] = r.computed;
  b["norm"] = to_decimal(norm);
  return b;
}

constexpr std::int64_t kUncapped = std::numeric_limits<std::int64_t>::max();

// full_conjugate_product reduced mod p, built from the orbit mod p.
FpPoly conjugate_product_mod_p(const PrimeFieldRing& fp, std::int64_t d, std::int64_t j, std::int64_t l) {
  std::vector<FpPoly> a{FpPoly(fp, {})};
  const FpPoly c = FpPoly::variable(fp);
  while (static_cast<std::int64_t>(a.size()) <= j + l) a.push_back(add(pow(a.back(), static_cast<std::uint64_t>(d), kUncapped), c));
  FpPoly num = FpPoly::constant(fp, 1), den = FpPoly::constant(fp, 1);
  auto take = [&](const FpPoly& f, int mu) {
    if (mu == 1) num = mul(num, f, kUncapped);
    else den = mul(den, f, kUncapped);
  };
  for (std::int64_t k : divisors(l)) {
    const int mu = mobius(l / k);
    if (mu == 0) continue;
    take(sub(a[j + k], a[j]), mu);
    take(sub(a[j + k - 1], a[j - 1]), -mu);
    if ((j - 1) % l == 0) take(pow(a[k], static_cast<std::uint64_t>(d - 1), kUncapped), -mu);
  }
  return exact_div(num, den);
}

std::int64_t tail_multiplier(std::int64_t d, std::int64_t j, std::int64_t n) {
  const std::int64_t base = checked_pow(d, j - 1, std::numeric_limits<std::int64_t>::max());
  return (j - 1) % n == 0 ? base - 1 : base;
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::optional<std::int64_t> VerificationReport::param(const std::string& key) const {
  for (const auto& [k, v] : params)
    if (k == key) return v;
  return std::nullopt;
}

bool report_less(const VerificationReport& a, const VerificationReport& b) {
  if (a.claim_id != b.claim_id) return a.claim_id < b.claim_id;
  for (const char* key : kSortKeys) {
    const auto x = a.param(key).value_or(std::numeric_limits<std::int64_t>::min());
    const auto y = b.param(key).value_or(std::numeric_limits<std::int64_t>::min());
    if (x != y) return x < y;
  }
  auto rest = [](const VerificationReport& r) {
    Params out;
    for (const auto& p : r.params)
      if (std::find(std::begin(kSortKeys), std::end(kSortKeys), p.first) == std::end(kSortKeys)) out.push_back(p);
    return out;
  };
  return rest(a) < rest(b);
}

void sort_reports(std::vector<VerificationReport>& reports) { std::stable_sort(reports.begin(), reports.end(), report_less); }

Params spec_params(const FamilySpec& spec) {
  return {{"d", spec.d},
          {"m", spec.m},
          {"n", spec.n},
          {"k", spec.zeta ? spec.zeta->order : 1},
          {"s", spec.zeta ? spec.zeta->power : 0}};
}

std::string render_power(std::int64_t p, std::int64_t v) {
  if (v == 0) return "1";
  if (v == 1) return std::to_string(p);
  return std::to_string(p) + "^" + std::to_string(v);
}

std::string render_norm(const Integer& value, std::int64_t p) {
  if (value == 0 || value == 1) return to_decimal(value);
  try {
    return render_power(p, prime_power_decompose(value, p));
  } catch (const Error&) {
    return to_decimal(value);
  }
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.verdict == Verdict::Fail; }) ? 1 : 0;
}

Verifier::Verifier(VerifierOptions options) : options_(options), builder_(options.degree_cap) {}

VerificationReport Verifier::verify_construction(const FamilySpec& spec) {
  Recorder rec(options_, "thm2.1", spec_params(spec));
  return guarded(rec, [&](VerificationReport& r) {
    spec.validate();
    const std::int64_t D = spec.is_gleason() ? gleason_degree(spec.d, spec.n) : misiurewicz_degree(spec.d, spec.m, spec.n);
    r.expected = "monic;deg=" + std::to_string(D) + ";squarefree";
    if (D > options_.degree_cap) fail(ErrorKind::LimitExceeded, "degree " + std::to_string(D) + " exceeds cap");
    const CycPoly G = family_polynomial(builder_, spec);
    r.computed = std::string(G.is_monic() ? "monic" : "not-monic") + ";deg=" + std::to_string(G.degree()) + ";" +
                 (squarefree(G) ? "squarefree" : "repeated-root");
    if (r.computed != r.expected) r.bundle = failure_bundle(r, spec, G, "derivative", 0);
  });
}

std::vector<VerificationReport> Verifier::verify_thm_1_1(const FamilySpec& spec, std::int64_t i_max) {
  std::vector<VerificationReport> out;
  spec.validate();
  if (spec.is_gleason()) fail(ErrorKind::InvalidSpec, "thm1.1 needs a Misiurewicz spec");
  if (i_max <= 0) i_max = 3 * spec.n;
  const auto pp = prime_power(spec.d);
  if (!pp) {
    Recorder rec(options_, "thm1.1", spec_params(spec));
    out.push_back(rec.skip("d not a prime power"));
    return out;
  }
  const std::int64_t p = pp->first;
  std::optional<OrbitNormEngine> engine;
  try {
    if (misiurewicz_degree(spec.d, spec.m, spec.n) > options_.degree_cap)
      fail(ErrorKind::LimitExceeded, "degree exceeds cap");
    engine.emplace(orbit(spec.d), spec);
  } catch (const Error& e) {
    for (std::int64_t i = 1; i <= i_max; ++i) {
      Recorder rec(options_, "thm1.1", with(spec_params(spec), {{"i", i}}));
      out.push_back(e.kind() == ErrorKind::LimitExceeded ? rec.skip(e.what()) : rec.error(e.what()));
    }
    return out;
  }
  const std::int64_t D = engine->degree();
  const std::int64_t ratio = mobius_power_sum(spec.d, spec.n);
  const std::int64_t M = (spec.m - 1) % spec.n == 0 ? checked_pow(spec.d, spec.m - 1, INT64_MAX) - 1
                                                     : checked_pow(spec.d, spec.m - 1, INT64_MAX);
  for (std::int64_t i = 1; i <= i_max; ++i) {
    Recorder rec(options_, "thm1.1", with(spec_params(spec), {{"i", i}}));
    out.push_back(guarded(rec, [&](VerificationReport& r) {
      r.expected = i % spec.n == 0 ? render_power(p, ratio) : "1";
      if (D != M * ratio) {
        r.computed = "degree " + std::to_string(D) + " is not M * " + std::to_string(ratio);
        return;
      }
      NormResult norm = engine->orbit(i);
      r.computed = render_norm(norm.value, p);
      if (r.computed != r.expected) {
        const IntPoly& a = orbit(spec.d).get(i);
        norm = eval_norm(engine->polynomial(), a, NormMethod::Subresultant);
        r.computed = render_norm(norm.value, p);
        r.bundle = failure_bundle(r, spec, engine->polynomial(), "a_" + std::to_string(i), norm.value);
      }
    }));
  }
  return out;
}

VerificationReport Verifier::verify_thm_1_5(const FamilySpec& spec, std::int64_t j, std::int64_t l) {
  spec.validate();
  if (spec.is_gleason()) fail(ErrorKind::InvalidSpec, "thm1.5 needs a Misiurewicz spec");
  const std::string claim = j == spec.m ? "thm1.5" : l != spec.n ? "thm1.5a" : j < spec.m ? "thm1.5b" : "thm1.5c";
  Recorder rec(options_, claim, with(spec_params(spec), {{"j", j}, {"l", l}}));
  if (j == spec.m) return rec.skip("j = m is covered by the conj1.6 scan");
  const auto pp = prime_power(spec.d);
  if (!pp) return rec.skip("d not a prime power");
  const std::int64_t p = pp->first;
  return guarded(rec, [&](VerificationReport& r) {
    const FamilySpec target{spec.d, j, l, spec.zeta};
    target.validate();
    const std::int64_t D = misiurewicz_degree(spec.d, spec.m, spec.n);
    if (D > options_.degree_cap || misiurewicz_degree(spec.d, j, l) > options_.degree_cap)
      fail(ErrorKind::LimitExceeded, "degree exceeds cap");
    if (l != spec.n) r.expected = "1";
    else if (j < spec.m) r.expected = render_power(p, mobius_power_sum(spec.d, spec.n) * tail_multiplier(spec.d, j, spec.n));
    else r.expected = render_power(p, D);
    OrbitNormEngine engine(orbit(spec.d), spec);
    NormResult norm = engine.family(target);
    r.computed = render_norm(norm.value, p);
    if (r.computed != r.expected) {
      const CycPoly h = builder_.misiurewicz(target);
      norm = eval_norm(engine.polynomial(), h);
      r.computed = render_norm(norm.value, p);
      r.bundle = failure_bundle(r, spec, engine.polynomial(), target.key(), norm.value);
    }
  });
}

std::vector<VerificationReport> Verifier::scan_conj_1_6(const FamilySpec& spec) {
  std::vector<VerificationReport> out;
  spec.validate();
  if (spec.is_gleason()) fail(ErrorKind::InvalidSpec, "conj1.6 needs a Misiurewicz spec");
  const std::int64_t l_max = options_.conj_beyond_n ? 2 * spec.n : spec.n;
  auto params = [&](std::int64_t l) { return with(spec_params(spec), {{"j", spec.m}, {"l", l}}); };
  if (!prime_power(spec.d)) {
    for (std::int64_t l = 1; l <= l_max; ++l) {
      Recorder rec(options_, "conj1.6", params(l));
      out.push_back(rec.skip("d not a prime power"));
    }
    return out;
  }
  std::optional<OrbitNormEngine> engine;
  for (std::int64_t l = 1; l <= l_max; ++l) {
    Recorder rec(options_, "conj1.6", params(l));
    const bool beyond = l > spec.n;
    out.push_back(guarded(rec, [&](VerificationReport& r) {
      const FamilySpec target{spec.d, spec.m, l, spec.zeta};
      r.expected = beyond ? "unspecified-by-paper" : (spec.n % l != 0 ? "unit" : "nonunit");
      if (misiurewicz_degree(spec.d, spec.m, spec.n) > options_.degree_cap ||
          misiurewicz_degree(spec.d, spec.m, l) > options_.degree_cap)
        fail(ErrorKind::LimitExceeded, "degree exceeds cap");
      if (!engine) engine.emplace(orbit(spec.d), spec);
      NormResult norm = engine->family(target);
      r.computed = norm.value == 1 ? "unit" : "nonunit";
      if (beyond) {
        r.verdict = Verdict::Skipped;
        r.reason = "unspecified-by-paper (l > n)";
        return;
      }
      if (r.computed != r.expected) {
        norm = eval_norm(engine->polynomial(), builder_.misiurewicz(target), NormMethod::Subresultant);
        r.computed = norm.value == 1 ? "unit" : "nonunit";
        r.bundle = failure_bundle(r, spec, engine->polynomial(), target.key(), norm.value);
      }
    }));
  }
  return out;
}

VerificationReport Verifier::verify_lehmer(std::int64_t m, std::int64_t n) {
  if (!(m > n && n >= 1)) fail(ErrorKind::InvalidArgument, "lehmer needs m > n >= 1");
  Recorder rec(options_, "lehmer", {{"m", m}, {"n", n}});
  return guarded(rec, [&](VerificationReport& r) {
    const bool pk = m % n == 0 && prime_power(m / n).has_value();
    r.expected = pk ? "nonunit" : "unit";
    const CyclotomicRing ring(n);
    const IntPoly phi = cyclotomic_polynomial(m);
    CyclotomicElement value = ring.zero();
    for (std::size_t i = 0; i < phi.coeffs().size(); ++i)
      value = value + ring.zeta(static_cast<std::int64_t>(i)).scaled(phi.coeffs()[i]);
    const Integer norm = abs(cyc_norm(value));
    r.computed = norm == 1 ? "unit" : "nonunit";
  });
}

VerificationReport Verifier::verify_mobius_inversion(std::int64_t d, std::int64_t N) {
  Recorder rec(options_, "ident.mobius-inv", {{"d", d}, {"N", N}});
  return guarded(rec, [&](VerificationReport& r) {
    r.expected = "identity";
    IntPoly prod = IntPoly::constant(IntegerRing{}, 1);
    for (std::int64_t k : divisors(N)) prod = mul(prod, builder_.gleason(d, k), options_.degree_cap);
    r.computed = prod == orbit(d).get(N) ? "identity" : "mismatch";
  });
}

VerificationReport Verifier::verify_gleason_resultant(std::int64_t d, std::int64_t n1, std::int64_t n2) {
  Recorder rec(options_, "ident.gleason-res", {{"d", d}, {"n1", n1}, {"n2", n2}});
  return guarded(rec, [&](VerificationReport& r) {
    if (n1 == n2) fail(ErrorKind::InvalidArgument, "gleason-res needs n1 != n2");
    r.expected = "1";
    if (gleason_degree(d, n1) > options_.degree_cap || gleason_degree(d, n2) > options_.degree_cap)
      fail(ErrorKind::LimitExceeded, "degree exceeds cap");
    OrbitNormEngine engine(orbit(d), gleason_spec(d, n1));
    const NormResult res = engine.family(gleason_spec(d, n2));
    r.computed = to_decimal(res.value);
  });
}

VerificationReport Verifier::verify_bek10(std::int64_t d, std::int64_t j, std::int64_t l) {
  Recorder rec(options_, "ident.bek10", {{"d", d}, {"j", j}, {"l", l}});
  const auto pp = prime_power(d);
  if (!pp) return rec.skip("d not a prime power");
  return guarded(rec, [&](VerificationReport& r) {
    r.expected = "congruent";
    const std::int64_t p = pp->first;
    const std::int64_t N = tail_multiplier(d, j, l);
    if ((d - 1) * misiurewicz_degree(d, j, l) > options_.degree_cap) fail(ErrorKind::LimitExceeded, "degree exceeds cap");
    const PrimeFieldRing fp(static_cast<std::uint64_t>(p));
    const FpPoly lhs = conjugate_product_mod_p(fp, d, j, l);
    const IntPoly g = builder_.gleason(d, l);
    std::vector<std::uint64_t> gl;
    for (const auto& x : g.coeffs()) gl.push_back(fp.from_integer(x));
    const FpPoly rhs = pow(FpPoly(fp, std::move(gl)), static_cast<std::uint64_t>((d - 1) * N), kUncapped);
    if (lhs == rhs) {
      r.computed = "congruent";
      return;
    }
    std::size_t i = 0;
    while (i < std::max(lhs.coeffs().size(), rhs.coeffs().size()) && lhs.coeff(i) == rhs.coeff(i)) ++i;
    r.computed = "differs at c^" + std::to_string(i);
  });
}

VerificationReport Verifier::verify_w_independence(const FamilySpec& spec, std::int64_t j, std::int64_t l) {
  Recorder rec(options_, "ident.w-indep", with(spec_params(spec), {{"j", j}, {"l", l}}));
  if (!prime_power(spec.d)) return rec.skip("d not a prime power");
  return guarded(rec, [&](VerificationReport& r) {
    spec.validate();
    if (spec.is_gleason() || j < 2 || j > spec.m - 1 || l < 1)
      fail(ErrorKind::InvalidArgument, "w-indep needs a Misiurewicz spec, 2 <= j <= m - 1, l >= 1");
    r.expected = "identical";
    if (misiurewicz_degree(spec.d, spec.m, spec.n) > options_.degree_cap) fail(ErrorKind::LimitExceeded, "degree exceeds cap");
    const std::int64_t K = std::lcm(spec.zeta->order, spec.d);
    OrbitNormEngine engine(orbit(spec.d), spec, K);
    std::vector<Integer> values;
    for (std::int64_t t = K / spec.d; t < K; t += K / spec.d) values.push_back(engine.difference(j + l - 1, j - 1, t).value);
    const bool same = std::all_of(values.begin(), values.end(), [&](const Integer& v) { return v == values.front(); });
    if (same) {
      r.computed = "identical";
      return;
    }
    r.computed = "differs:";
    for (const auto& v : values) r.computed += " " + to_decimal(v);
  });
}

VerificationReport Verifier::verify_common_root(std::int64_t d, std::int64_t m, std::int64_t n, std::int64_t i,
                                                std::optional<ZetaDescriptor> zeta) {
  const FamilySpec spec = misiurewicz_spec(d, m, n, zeta);
  Recorder rec(options_, "ident.common-root", with(spec_params(spec), {{"i", i}}));
  return guarded(rec, [&](VerificationReport& r) {
    if ((m - 1) % n != 0 || n % i != 0) fail(ErrorKind::InvalidArgument, "common-root needs n | m - 1 and i | n");
    r.expected = i == n ? "zero" : "nonzero";
    if (gleason_degree(d, n) > options_.degree_cap) fail(ErrorKind::LimitExceeded, "degree exceeds cap");
    OrbitNormEngine engine(orbit(d), gleason_spec(d, n), spec.zeta->order);
    const NormResult res = engine.difference(m + i - 1, m - 1, spec.zeta->power);
    r.computed = res.zero ? "zero" : "nonzero";
  });
}

std::vector<VerificationReport> Verifier::verify_support(const FamilySpec& spec, std::int64_t i_max) {
  std::vector<VerificationReport> out;
  spec.validate();
  if (i_max <= 0) i_max = 3 * spec.n;
  std::optional<OrbitNormEngine> engine;
  const auto primes = prime_factors(spec.d);
  for (std::int64_t i = 1; i <= i_max; ++i) {
    Recorder rec(options_, "ident.support", with(spec_params(spec), {{"i", i}}));
    out.push_back(guarded(rec, [&](VerificationReport& r) {
      r.expected = "supported";
      if (misiurewicz_degree(spec.d, spec.m, spec.n) > options_.degree_cap) fail(ErrorKind::LimitExceeded, "degree exceeds cap");
      if (!engine) engine.emplace(orbit(spec.d), spec);
      Integer v = engine->orbit(i).value;
      if (v == 0) {
        r.computed = "zero";
        return;
      }
      for (std::int64_t p : primes)
        while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) v /= static_cast<unsigned long>(p);
      r.computed = v == 1 ? "supported" : "extra factor " + to_decimal(v);
    }));
  }
  return out;
}

std::vector<VerificationReport> Verifier::verify_identities(std::int64_t d, const IdentityBounds& b) {
  std::vector<VerificationReport> out;
  for (std::int64_t N = 1; N <= b.mobius_n_max; ++N) out.push_back(verify_mobius_inversion(d, N));
  for (std::int64_t n2 = 2; n2 <= b.gleason_n_max; ++n2)
    for (std::int64_t n1 = 1; n1 < n2; ++n1) out.push_back(verify_gleason_resultant(d, n1, n2));
  for (std::int64_t j = b.bek_j_min; j <= b.bek_j_max; ++j)
    for (std::int64_t l = 1; l <= b.bek_l_max; ++l) out.push_back(verify_bek10(d, j, l));
  if (b.w_m >= 3) {
    const FamilySpec spec = misiurewicz_spec(d, b.w_m, b.w_n);
    for (std::int64_t j = 2; j <= b.w_m - 1; ++j)
      for (std::int64_t l : b.w_l) out.push_back(verify_w_independence(spec, j, l));
  }
  for (std::int64_t m = 2; m <= b.common_m_max; ++m)
    for (std::int64_t n = 1; n <= b.common_n_max; ++n) {
      if ((m - 1) % n != 0) continue;
      for (std::int64_t i : divisors(n)) out.push_back(verify_common_root(d, m, n, i));
    }
  return out;
}

VerificationReport Verifier::verify_newton(std::int64_t p, std::int64_t e) {
  Recorder rec(options_, "newton.3.4", {{"p", p}, {"e", e}});
  return guarded(rec, [&](VerificationReport& r) {
    std::string expected;
    std::string slopes;
    std::int64_t pr = 1;
    for (std::int64_t k = 0; k <= e; ++k) {
      expected += (k ? " " : "") + std::string("(") + std::to_string(pr) + "," + std::to_string(e - k) + ")";
      if (k < e) slopes += " " + render_rational(Rational(-1, static_cast<unsigned long>(pr * p - pr)));
      pr *= p;
    }
    r.expected = expected + " |" + slopes;
    const NewtonPolygon poly = lower_hull(binomial_valuation_points(p, e));
    std::string computed;
    for (std::size_t k = 0; k < poly.vertices.size(); ++k)
      computed += (k ? " " : "") + std::string("(") + std::to_string(poly.vertices[k].x) + "," +
                  render_rational(poly.vertices[k].y) + ")";
    computed += " |";
    for (const auto& s : poly.slopes) computed += " " + render_rational(s.slope);
    r.computed = computed;
  });
}

VerificationReport Verifier::certificate_report(const FamilySpec& spec, CertificateKind kind) {
  Recorder rec(options_, kind == CertificateKind::Rabin ? "cert.rabin" : "cert.degree-bound", spec_params(spec));
  return guarded(rec, [&](VerificationReport& r) {
    r.expected = "Proven";
    const std::int64_t D = spec.is_gleason() ? gleason_degree(spec.d, spec.n) : misiurewicz_degree(spec.d, spec.m, spec.n);
    if (D > options_.degree_cap) fail(ErrorKind::LimitExceeded, "degree exceeds cap");
    IrreducibilityCertificate cert;
    if (kind == CertificateKind::Rabin) {
      cert = certify_irreducible(builder_, spec, options_.q_max);
    } else {
      if (spec.is_gleason() || spec.n != 1 || !prime_power(spec.d)) {
        r.verdict = Verdict::Skipped;
        r.computed = "not applicable";
        r.reason = "degree-bound certificate needs n = 1 and prime-power d";
        return;
      }
      cert = certify_degree_bound(builder_, spec);
    }
    if (cert.status == CertificateStatus::Proven) {
      if (cert.field) {
        r.params.push_back({"q", static_cast<std::int64_t>(cert.field->q)});
        r.params.push_back({"t", static_cast<std::int64_t>(cert.field->t)});
      }
      r.computed = recheck_certificate(cert, family_polynomial(builder_, spec)) ? "Proven" : "Proven (recheck failed)";
      r.reason = cert.note;
      return;
    }
    r.computed = "Inconclusive";
    r.reason = cert.note + " (" + std::to_string(cert.tried.size()) + " primes tried)";
    if (kind == CertificateKind::Rabin) r.verdict = Verdict::Skipped;
  });
}

}  // namespace mlab
