#include "mlab/cyclotomic.hpp"

#include "mlab/number_theory.hpp"

#include <map>
#include <numeric>

namespace mlab {

Poly<IntegerRing> cyclotomic_polynomial(std::int64_t k) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "cyclotomic_polynomial requires k >= 1");
  IntegerRing zz;
  std::map<std::int64_t, IntPoly> table;
  for (std::int64_t j : divisors(k)) {
    std::vector<Integer> c(static_cast<std::size_t>(j) + 1, 0);
    c[0] = -1;
    c[static_cast<std::size_t>(j)] = 1;
    IntPoly phi(zz, std::move(c));
    for (auto& [i, phi_i] : table) {
      if (j % i == 0) phi = exact_div(phi, phi_i);
    }
    table.emplace(j, std::move(phi));
  }
  return table.at(k);
}

CyclotomicField::CyclotomicField(std::int64_t k)
    : order_(k), degree_(static_cast<std::size_t>(euler_phi(k))), modulus_(cyclotomic_polynomial(k)) {
  for (const auto& c : modulus_.coeffs()) {
    if (!c.fits_slong_p()) fail(ErrorKind::LimitExceeded, "cyclotomic modulus coefficient too large");
    modulus_small_.push_back(c.get_si());
  }
  for (std::int64_t s = 1; s <= k; ++s) {
    if (std::gcd(s, k) == 1) units_.push_back(s % k == 0 ? k : s);
  }
  if (k == 1) units_ = {1};
}

std::shared_ptr<const CyclotomicField> CyclotomicField::create(std::int64_t k) {
  if (k < 1) fail(ErrorKind::InvalidArgument, "cyclotomic order must be >= 1");
  return std::shared_ptr<const CyclotomicField>(new CyclotomicField(k));
}

void CyclotomicField::reduce(std::vector<Integer>& coords) const {
  const std::size_t phi = degree_;
  for (std::size_t i = coords.size(); i-- > phi;) {
    if (coords[i] == 0) continue;
    const std::size_t shift = i - phi;
    for (std::size_t j = 0; j < phi; ++j) {
      const long m = modulus_small_[j];
      if (m == 0) continue;
      if (m > 0) {
        mpz_submul_ui(coords[shift + j].get_mpz_t(), coords[i].get_mpz_t(), static_cast<unsigned long>(m));
      } else {
        mpz_addmul_ui(coords[shift + j].get_mpz_t(), coords[i].get_mpz_t(), static_cast<unsigned long>(-m));
      }
    }
    coords[i] = 0;
  }
  coords.resize(phi);
}

namespace {

const CyclotomicFieldPtr& rational_field() {
  static const CyclotomicFieldPtr field = CyclotomicField::create(1);
  return field;
}

void require_same_order(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.order() != b.order()) {
    fail(ErrorKind::OrderMismatch,
         "cyclotomic orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
}

}  // namespace

CyclotomicElement::CyclotomicElement() : CyclotomicElement(rational_field()) {}

CyclotomicElement::CyclotomicElement(CyclotomicFieldPtr field)
    : field_(std::move(field)), coords_(field_->degree(), 0) {}

CyclotomicElement::CyclotomicElement(CyclotomicFieldPtr field, std::vector<Integer> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() < field_->degree()) {
    coords_.resize(field_->degree(), 0);
  } else {
    field_->reduce(coords_);
  }
}

CyclotomicElement CyclotomicElement::from_integer(CyclotomicFieldPtr field, const Integer& value) {
  CyclotomicElement e(std::move(field));
  e.coords_[0] = value;
  return e;
}

CyclotomicElement CyclotomicElement::zeta_power(CyclotomicFieldPtr field, std::int64_t s) {
  const std::int64_t k = field->order();
  std::int64_t e = ((s % k) + k) % k;
  std::vector<Integer> c(static_cast<std::size_t>(e) + 1, 0);
  c[static_cast<std::size_t>(e)] = 1;
  return CyclotomicElement(std::move(field), std::move(c));
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational_integer() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (coords_[i] != 0) return false;
  }
  return true;
}

bool CyclotomicElement::is_one() const { return is_rational_integer() && coords_[0] == 1; }

Integer CyclotomicElement::content() const {
  Integer g = 0;
  for (const auto& c : coords_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CyclotomicElement CyclotomicElement::scaled(const Integer& s) const {
  CyclotomicElement r = *this;
  for (auto& c : r.coords_) c *= s;
  return r;
}

CyclotomicElement CyclotomicElement::conjugate(std::int64_t s) const {
  const std::int64_t k = order();
  if (std::gcd(s, k) != 1) fail(ErrorKind::InvalidArgument, "conjugation exponent must be coprime to the order");
  if (k <= 2) return *this;
  std::vector<Integer> c(static_cast<std::size_t>(k), 0);
  const std::int64_t step = ((s % k) + k) % k;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    c[static_cast<std::size_t>(static_cast<std::int64_t>(i) * step % k)] += coords_[i];
  }
  return CyclotomicElement(field_, std::move(c));
}

Poly<IntegerRing> CyclotomicElement::representative() const { return Poly<IntegerRing>(IntegerRing{}, coords_); }

bool CyclotomicElement::operator==(const CyclotomicElement& o) const {
  return order() == o.order() && coords_ == o.coords_;
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_order(a, b);
  CyclotomicElement r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += b.coords_[i];
  return r;
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_order(a, b);
  CyclotomicElement r = a;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] -= b.coords_[i];
  return r;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  CyclotomicElement r(a.field_);
  CyclotomicElement::addmul(r, a, b);
  return r;
}

void CyclotomicElement::addmul(CyclotomicElement& acc, const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_order(a, b);
  require_same_order(acc, a);
  const std::size_t phi = a.coords_.size();
  if (phi == 1) {
    mpz_addmul(acc.coords_[0].get_mpz_t(), a.coords_[0].get_mpz_t(), b.coords_[0].get_mpz_t());
    return;
  }
  std::vector<Integer> t(2 * phi - 1, 0);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      mpz_addmul(t[i + j].get_mpz_t(), a.coords_[i].get_mpz_t(), b.coords_[j].get_mpz_t());
    }
  }
  a.field_->reduce(t);
  for (std::size_t i = 0; i < phi; ++i) acc.coords_[i] += t[i];
}

CyclotomicElement cyc_arith(const CyclotomicElement& a, const CyclotomicElement& b, CycOp op) {
  switch (op) {
    case CycOp::Add: return a + b;
    case CycOp::Sub: return a - b;
    case CycOp::Mul: return a * b;
  }
  fail(ErrorKind::InvalidArgument, "unknown cyclotomic operation");
}

Integer cyc_norm(const CyclotomicElement& a) {
  if (a.field()->degree() == 1) return a.coeffs()[0];
  return resultant(a.field()->modulus(), a.representative());
}

CyclotomicElement cyc_adjugate(const CyclotomicElement& a) {
  CyclotomicElement r = CyclotomicElement::from_integer(a.field(), 1);
  for (std::int64_t s : a.field()->units()) {
    if (s == 1) continue;
    r = r * a.conjugate(s);
  }
  return r;
}

RationalCyclotomic cyc_invert(const CyclotomicElement& a) {
  if (a.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta)");
  const auto& field = a.field();
  RationalRing qq;
  auto to_q = [&](const IntPoly& p) { return map_coeffs(p, qq, [](const Integer& x) { return Rational(x); }); };
  auto eg = field_extended_gcd(to_q(a.representative()), to_q(field->modulus()));
  // eg.s * A + eg.t * Phi = 1, so eg.s is the inverse modulo Phi.
  Integer den = 1;
  for (const auto& c : eg.s.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> num;
  for (const auto& c : eg.s.coeffs()) num.push_back(Integer(c * den));
  return RationalCyclotomic(CyclotomicElement(field, std::move(num)), den);
}

CyclotomicElement cyc_exact_div(const CyclotomicElement& a, const CyclotomicElement& b) {
  require_same_order(a, b);
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "cyclotomic division by zero");
  if (b.is_one()) return a;
  Integer n;
  CyclotomicElement t(a.field());
  if (b.field()->degree() == 1) {
    n = b.coeffs()[0];
    t = a;
  } else {
    auto adj = cyc_adjugate(b);
    n = cyc_norm(b);
    t = a * adj;
  }
  std::vector<Integer> q(t.coeffs().size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!mpz_divisible_p(t.coeffs()[i].get_mpz_t(), n.get_mpz_t())) {
      fail(ErrorKind::NonZeroRemainder, "cyclotomic quotient is not integral");
    }
    mpz_divexact(q[i].get_mpz_t(), t.coeffs()[i].get_mpz_t(), n.get_mpz_t());
  }
  return CyclotomicElement(a.field(), std::move(q));
}

std::string to_string(const CyclotomicElement& a, const std::string& symbol) {
  std::string out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Integer& c = a.coeffs()[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += symbol;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

RationalCyclotomic::RationalCyclotomic(CyclotomicFieldPtr field) : numerator_(std::move(field)), denominator_(1) {}

RationalCyclotomic::RationalCyclotomic(CyclotomicElement numerator, Integer denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (denominator_ == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  normalize();
}

void RationalCyclotomic::normalize() {
  if (denominator_ < 0) {
    denominator_ = -denominator_;
    numerator_ = -numerator_;
  }
  if (numerator_.is_zero()) {
    denominator_ = 1;
    return;
  }
  Integer g = numerator_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), denominator_.get_mpz_t());
  if (g == 1) return;
  std::vector<Integer> c = numerator_.coeffs();
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  numerator_ = CyclotomicElement(numerator_.field(), std::move(c));
  mpz_divexact(denominator_.get_mpz_t(), denominator_.get_mpz_t(), g.get_mpz_t());
}

RationalCyclotomic RationalCyclotomic::inverse() const {
  if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero in Q(zeta)");
  // (n/d)^-1 = d * adj(n) / N(n)
  if (numerator_.field()->degree() == 1) {
    return RationalCyclotomic(CyclotomicElement::from_integer(numerator_.field(), denominator_),
                              numerator_.coeffs()[0]);
  }
  return RationalCyclotomic(cyc_adjugate(numerator_).scaled(denominator_), cyc_norm(numerator_));
}

RationalCyclotomic RationalCyclotomic::operator-() const { return RationalCyclotomic(-numerator_, denominator_); }

RationalCyclotomic operator+(const RationalCyclotomic& a, const RationalCyclotomic& b) {
  return RationalCyclotomic(a.numerator_.scaled(b.denominator_) + b.numerator_.scaled(a.denominator_),
                            a.denominator_ * b.denominator_);
}

RationalCyclotomic operator-(const RationalCyclotomic& a, const RationalCyclotomic& b) {
  return RationalCyclotomic(a.numerator_.scaled(b.denominator_) - b.numerator_.scaled(a.denominator_),
                            a.denominator_ * b.denominator_);
}

RationalCyclotomic operator*(const RationalCyclotomic& a, const RationalCyclotomic& b) {
  return RationalCyclotomic(a.numerator_ * b.numerator_, a.denominator_ * b.denominator_);
}

std::optional<CyclotomicElement> CyclotomicRing::unit_inverse(const CyclotomicElement& a) const {
  if (a.is_one()) return a;
  if (a.is_zero()) return std::nullopt;
  if (a.field()->degree() == 1) {
    const Integer& v = a.coeffs()[0];
    if (v == 1 || v == -1) return a;
    return std::nullopt;
  }
  Integer n = cyc_norm(a);
  if (n != 1 && n != -1) return std::nullopt;
  return cyc_adjugate(a).scaled(n);
}

CycPoly promote(const IntPoly& f, const CyclotomicRing& ring) {
  return map_coeffs(f, ring, [&](const Integer& x) { return ring.from_integer(x); });
}

CycPoly conjugate(const CycPoly& f, std::int64_t s) {
  return map_coeffs(f, f.ring(), [&](const CyclotomicElement& x) { return x.conjugate(s); });
}

}  // namespace mlab
