#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidkit/hopf.hpp"

namespace braidkit {

struct CatalogEntry {
  std::string name;  // "anyonic_line(3)"
  std::vector<int> parameters;
  std::shared_ptr<const BraidingSpec> spec;
  HopfData hopf;
  /// "algebra", "coalgebra", "bialgebra", "antipode", "symmetric-eval".
  std::map<std::string, bool> expected;
  std::string note;
};

/// kZ_n; `grading` is the degree code of g in Z_n. Any nonzero grading is
/// refused with DegreeError (Delta(g) = g (x) g forces 2|g| = |g|).
CatalogEntry group_algebra(int n, int grading = 0);
/// Functions on Z_n, basis delta_a, written down directly.
CatalogEntry function_algebra(int n);
/// C[xi]/(xi^n), |xi| = 1 in Z_n with chi = [1], v = zeta_n.
CatalogEntry anyonic_line(int n);
CatalogEntry super_line();
/// kZ_n placed in degree 0 of the Z_n, chi = [1] category (adjoint coaction).
CatalogEntry underline_group_algebra(int n);
/// The regular-coaction reading |g^a| = a; always refused for n >= 2.
CatalogEntry underline_group_algebra_regular(int n);
/// The 4-dimensional Sweedler algebra, trivially graded.
CatalogEntry sweedler();
/// anyonic_line(n) with the ordinary (unbraided) binomial coproduct.
/// Negative control: bialgebra fails for n >= 3.
CatalogEntry anyonic_line_unbraided(int n);

/// Closed form S(xi^k) = (-1)^k zeta^{k(k-1)/2} xi^k of the anyonic line.
CycScalar anyonic_antipode_coefficient(int n, int k);
/// Gaussian binomial [k; j]_q by the q-Pascal rule.
CycScalar gaussian_binomial(int k, int j, const CycScalar& q);

/// Runs the suites named in `expected`, keyed the same way.
std::map<std::string, bool> run_catalog_checks(const CatalogEntry& e, Report* out = nullptr);

struct CatalogInfo {
  std::string name;
  std::string params;
  std::string summary;
};
std::vector<CatalogInfo> catalog_list();

/// Resolves "super_line", "anyonic_line(3)" or "catalog:group_algebra(4)".
/// Throws ParseError for an unknown or malformed name.
CatalogEntry catalog_lookup(const std::string& uri);

}  // namespace braidkit
