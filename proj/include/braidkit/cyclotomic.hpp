#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace braidkit {

namespace detail {
struct FieldTables;
}

int euler_phi(int n);

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<long> cyclotomic_polynomial(int n);

/// Element of Q(zeta_n), stored as the residue of a rational polynomial in
/// zeta_n modulo Phi_n. The residue has exactly phi(n) coefficients, so two
/// elements of the same order are equal iff their coefficient lists are.
///
/// Binary operations between different orders first embed both operands
/// into Q(zeta_lcm).
class CycScalar {
 public:
  CycScalar();
  CycScalar(long value);  // NOLINT(google-explicit-constructor)
  CycScalar(const mpq_class& value);  // NOLINT(google-explicit-constructor)

  /// Reduces an arbitrary-length polynomial in zeta_n modulo Phi_n.
  static CycScalar from_poly(int n, std::vector<mpq_class> poly);
  static CycScalar root_of_unity(int n, long k);

  int order() const;
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  /// Same field element viewed in Q(zeta_N); requires order() | N.
  CycScalar embed(int N) const;

  CycScalar inv() const;
  CycScalar pow(long e) const;

  CycScalar& operator+=(const CycScalar& o);
  CycScalar& operator-=(const CycScalar& o);
  CycScalar& operator*=(const CycScalar& o);

  friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
  friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
  friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
  friend CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inv(); }
  CycScalar operator-() const;

  friend bool operator==(const CycScalar& a, const CycScalar& b);
  friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

  /// "c0 + c1*z + c2*z^2" with rational coefficients "p/q"; "0" for zero.
  std::string to_string() const;
  /// Formats after embedding into Q(zeta_order).
  std::string to_string(int order) const;
  static CycScalar parse(std::string_view text, int order);

 private:
  CycScalar(const detail::FieldTables* field, std::vector<mpq_class> coeffs);

  const detail::FieldTables* field_;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycScalar& x);

}  // namespace braidkit
