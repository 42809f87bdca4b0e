#pragma once

#include "mlab/certify.hpp"
#include "mlab/family.hpp"
#include "mlab/integer.hpp"
#include "mlab/norm.hpp"
#include "mlab/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlab {

enum class Verdict { Pass, Fail, Skipped };

const char* to_string(Verdict v);

using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct VerificationReport {
  std::string claim_id;
  Params params;
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::Skipped;
  std::int64_t elapsed_ms = 0;
  std::string reason;           // why a report was skipped, or a failure diagnostic
  std::optional<Json> bundle;   // counterexample data, present on fail

  /// Parameter value, or nullopt.
  std::optional<std::int64_t> param(const std::string& key) const;
};

/// Ordering: claim id, then d, m, n, k, s, j, l, i, then remaining params in order.
bool report_less(const VerificationReport& a, const VerificationReport& b);
void sort_reports(std::vector<VerificationReport>& reports);

/// Params d, m, n, k, s for a spec (k = 1, s = 0 for Gleason).
Params spec_params(const FamilySpec& spec);

/// "1" for v = 0, "p" for v = 1, otherwise "p^v".
std::string render_power(std::int64_t p, std::int64_t v);
/// "0", "1", "p^v" when value is a power of p > 1, else the decimal value.
std::string render_norm(const Integer& value, std::int64_t p);

struct VerifierOptions {
  std::int64_t degree_cap = kDefaultDegreeCap;
  std::int64_t q_max = kDefaultQMax;
  bool record_timing = false;      // elapsed_ms stays 0 unless set, keeping reports byte-stable
  bool conj_beyond_n = false;      // also scan l in (n, 2n] at j = m
};

struct IdentityBounds {
  std::int64_t mobius_n_max = 6;
  std::int64_t gleason_n_max = 6;
  std::int64_t bek_j_min = 2;
  std::int64_t bek_j_max = 3;
  std::int64_t bek_l_max = 4;
  std::int64_t w_m = 3;
  std::int64_t w_n = 1;
  std::vector<std::int64_t> w_l = {1, 2};
  std::int64_t common_m_max = 5;
  std::int64_t common_n_max = 4;
};

/// Executable claims. A Verifier owns a construction memo shared by its calls
/// and is safe to use from several threads.
class Verifier {
 public:
  explicit Verifier(VerifierOptions options = {});

  const VerifierOptions& options() const { return options_; }
  FamilyBuilder& builder() { return builder_; }

  /// thm2.1: zero remainders, monic, closed-form degree, gcd(G, G') = 1.
  VerificationReport verify_construction(const FamilySpec& spec);
  /// thm1.1 for 1 <= i <= i_max (0 selects 3n).
  std::vector<VerificationReport> verify_thm_1_1(const FamilySpec& spec, std::int64_t i_max = 0);
  /// thm1.5a/b/c for the pair (G^zeta_{d,m,n}, G^zeta_{d,j,l}).
  VerificationReport verify_thm_1_5(const FamilySpec& spec, std::int64_t j, std::int64_t l);
  /// conj1.6 rows for 1 <= l <= n at j = m.
  std::vector<VerificationReport> scan_conj_1_6(const FamilySpec& spec);
  /// lehmer: Phi_m(zeta_n) is a non-unit iff m = p^k n.
  VerificationReport verify_lehmer(std::int64_t m, std::int64_t n);

  VerificationReport verify_mobius_inversion(std::int64_t d, std::int64_t N);
  VerificationReport verify_gleason_resultant(std::int64_t d, std::int64_t n1, std::int64_t n2);
  VerificationReport verify_bek10(std::int64_t d, std::int64_t j, std::int64_t l);
  VerificationReport verify_w_independence(const FamilySpec& spec, std::int64_t j, std::int64_t l);
  VerificationReport verify_common_root(std::int64_t d, std::int64_t m, std::int64_t n, std::int64_t i,
                                        std::optional<ZetaDescriptor> zeta = {});
  /// ident.support: N(Res(G, a_i)) has no prime factor outside those of d.
  std::vector<VerificationReport> verify_support(const FamilySpec& spec, std::int64_t i_max = 0);
  /// Bundle of the sub-identities for one d.
  std::vector<VerificationReport> verify_identities(std::int64_t d, const IdentityBounds& bounds = {});

  /// newton.3.4: the hull of the binomial points is (p^r, e - r), r = 0..e.
  VerificationReport verify_newton(std::int64_t p, std::int64_t e);

  /// cert.rabin / cert.degree-bound rendered as reports; Inconclusive is skipped with a reason.
  VerificationReport certificate_report(const FamilySpec& spec, CertificateKind kind);

 private:
  OrbitCache& orbit(std::int64_t d) { return builder_.orbit(d); }

  VerifierOptions options_;
  FamilyBuilder builder_;
};

/// 0 when no report failed, else 1.
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace mlab
