#include "braidkit/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "braidkit/error.hpp"

namespace braidkit {

namespace detail {

struct FieldTables {
  int n = 1;
  int phi = 1;
  std::vector<mpz_class> cyclo;  // monic, length phi + 1
};

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<long> compute_cyclotomic(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> num(static_cast<size_t>(n) + 1, 0);
  num[0] = -1;
  num[static_cast<size_t>(n)] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    std::vector<long> den = cyclotomic_polynomial(d);
    // exact division by a monic integer polynomial
    std::vector<long> quot(num.size() - den.size() + 1, 0);
    for (size_t shift = quot.size(); shift-- > 0;) {
      long c = num[shift + den.size() - 1];
      quot[shift] = c;
      for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
    num = std::move(quot);
  }
  return num;
}

std::mutex& tables_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const FieldTables* field(int n) {
  if (n < 1) throw Error("cyclotomic order must be positive, got " + std::to_string(n));
  static std::map<int, std::unique_ptr<FieldTables>> cache;
  {
    std::lock_guard<std::mutex> lock(tables_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second.get();
  }
  // Built outside the lock: the recursion asks for the divisors' tables.
  auto t = std::make_unique<FieldTables>();
  t->n = n;
  t->phi = euler_phi(n);
  for (long c : compute_cyclotomic(n)) t->cyclo.emplace_back(c);
  std::lock_guard<std::mutex> lock(tables_mutex());
  auto [it, inserted] = cache.emplace(n, std::move(t));
  (void)inserted;
  auto* raw = it->second.get();
  return raw;
}

namespace {

// In-place long division by the monic Phi_n; leaves phi coefficients.
void reduce(const FieldTables& f, Poly& p) {
  const size_t phi = static_cast<size_t>(f.phi);
  for (size_t k = p.size(); k-- > phi;) {
    if (p[k] == 0) continue;
    mpq_class c = p[k];
    size_t shift = k - phi;
    for (size_t i = 0; i < phi; ++i) {
      if (f.cyclo[i] != 0) p[shift + i] -= c * f.cyclo[i];
    }
    p[k] = 0;
  }
  p.resize(phi);
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

// a = q*b + r over Q[x]; b nonzero and trimmed.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class& lead = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    mpq_class c = r.back() / lead;
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
    trim(r);
  }
}

}  // namespace
}  // namespace detail

int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<long> cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic order must be positive");
  if (n == 1) return {-1, 1};
  std::vector<long> out;
  for (const auto& c : detail::field(n)->cyclo) out.push_back(c.get_si());
  return out;
}

CycScalar::CycScalar() : field_(detail::field(1)), coeffs_{mpq_class(0)} {}

CycScalar::CycScalar(long value) : field_(detail::field(1)), coeffs_{mpq_class(value)} {}

CycScalar::CycScalar(const mpq_class& value) : field_(detail::field(1)), coeffs_{value} {}

CycScalar::CycScalar(const detail::FieldTables* field, std::vector<mpq_class> coeffs)
    : field_(field), coeffs_(std::move(coeffs)) {}

CycScalar CycScalar::from_poly(int n, std::vector<mpq_class> poly) {
  const auto* f = detail::field(n);
  for (auto& c : poly) c.canonicalize();
  if (poly.size() < static_cast<size_t>(f->phi)) poly.resize(static_cast<size_t>(f->phi));
  detail::reduce(*f, poly);
  return CycScalar(f, std::move(poly));
}

CycScalar CycScalar::root_of_unity(int n, long k) {
  if (n < 1) throw Error("root_of_unity: order must be positive");
  long e = k % n;
  if (e < 0) e += n;
  std::vector<mpq_class> poly(static_cast<size_t>(e) + 1);
  poly[static_cast<size_t>(e)] = 1;
  return from_poly(n, std::move(poly));
}

int CycScalar::order() const { return field_->n; }

bool CycScalar::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

CycScalar CycScalar::embed(int N) const {
  if (N == field_->n) return *this;
  if (N % field_->n != 0) {
    throw OrderMismatch("cannot embed Q(zeta_" + std::to_string(field_->n) + ") into Q(zeta_" +
                        std::to_string(N) + ")");
  }
  const size_t step = static_cast<size_t>(N / field_->n);
  std::vector<mpq_class> poly((coeffs_.size() - 1) * step + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) poly[i * step] = coeffs_[i];
  return from_poly(N, std::move(poly));
}

namespace {

// Brings both operands to a common order.
int common_order(const CycScalar& a, const CycScalar& b) {
  if (a.order() == b.order()) return a.order();
  return std::lcm(a.order(), b.order());
}

}  // namespace

CycScalar& CycScalar::operator+=(const CycScalar& o) {
  if (o.field_ != field_) {
    int n = common_order(*this, o);
    if (n != order()) *this = embed(n);
    if (o.order() != n) return *this += o.embed(n);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (o.coeffs_[i] != 0) coeffs_[i] += o.coeffs_[i];
  }
  return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) {
  if (o.field_ != field_) {
    int n = common_order(*this, o);
    if (n != order()) *this = embed(n);
    if (o.order() != n) return *this -= o.embed(n);
  }
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (o.coeffs_[i] != 0) coeffs_[i] -= o.coeffs_[i];
  }
  return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
  *this = *this * o;
  return *this;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  if (a.field_ != b.field_) {
    int n = common_order(a, b);
    return a.embed(n) * b.embed(n);
  }
  if (a.coeffs_.size() == 1) return CycScalar(a.field_, {a.coeffs_[0] * b.coeffs_[0]});
  auto prod = detail::poly_mul(a.coeffs_, b.coeffs_);
  if (prod.size() < a.coeffs_.size()) prod.resize(a.coeffs_.size());
  detail::reduce(*a.field_, prod);
  return CycScalar(a.field_, std::move(prod));
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  if (a.field_ == b.field_) return a.coeffs_ == b.coeffs_;
  int n = common_order(a, b);
  return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

CycScalar CycScalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (coeffs_.size() == 1) return CycScalar(field_, {1 / coeffs_[0]});
  // Extended Euclid: find s with s*a + t*Phi = 1.
  using detail::Poly;
  Poly phi_poly;
  for (const auto& c : field_->cyclo) phi_poly.emplace_back(c);
  Poly r0 = phi_poly, r1 = coeffs_;
  detail::trim(r1);
  Poly s0, s1{mpq_class(1)};
  while (!(r1.size() == 1)) {
    Poly q, r;
    detail::poly_divmod(r0, r1, q, r);
    Poly s2 = detail::poly_sub(s0, detail::poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    if (r1.empty()) throw DivisionByZero();  // a shares a factor with Phi_n; impossible for a != 0
  }
  mpq_class c = r1[0];
  for (auto& x : s1) x /= c;
  return from_poly(field_->n, std::move(s1));
}

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  CycScalar result = CycScalar(1).embed(order());
  CycScalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string CycScalar::to_string() const {
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    bool negative = c < 0;
    mpq_class mag = negative ? mpq_class(-c) : c;
    std::string term;
    if (k == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += (k == 1) ? std::string("z") : "z^" + std::to_string(k);
    }
    if (out.empty()) {
      out = negative ? "-" + term : term;
    } else {
      out += negative ? " - " : " + ";
      out += term;
    }
  }
  return out.empty() ? "0" : out;
}

std::string CycScalar::to_string(int order) const { return embed(order).to_string(); }

CycScalar CycScalar::parse(std::string_view text, int order) {
  auto fail = [&](const std::string& why) {
    throw ParseError("bad scalar \"" + std::string(text) + "\": " + why);
  };
  std::vector<mpq_class> poly;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> std::string {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  skip_ws();
  if (i == text.size()) fail("empty");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    mpq_class coeff = 1;
    bool have_coeff = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = read_uint();
      std::string den = "1";
      if (i < text.size() && text[i] == '/') {
        ++i;
        den = read_uint();
        if (den.empty()) fail("missing denominator");
      }
      if (mpz_class(den) == 0) fail("zero denominator");
      coeff = mpq_class(mpz_class(num), mpz_class(den));
      coeff.canonicalize();
      have_coeff = true;
      skip_ws();
    }
    size_t power = 0;
    bool star = false;
    if (i < text.size() && text[i] == '*') {
      ++i;
      star = true;
      skip_ws();
    }
    if (i < text.size() && text[i] == 'z') {
      if (have_coeff && !star) fail("expected '*' before 'z'");
      ++i;
      power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string e = read_uint();
        if (e.empty()) fail("missing exponent");
        power = std::stoul(e);
      }
    } else if (star || !have_coeff) {
      fail("expected 'z'");
    }
    if (poly.size() <= power) poly.resize(power + 1);
    poly[power] += sign * coeff;
  }
  return from_poly(order, std::move(poly));
}

std::ostream& operator<<(std::ostream& os, const CycScalar& x) { return os << x.to_string(); }

}  // namespace braidkit
