#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidkit/graded.hpp"
#include "braidkit/report.hpp"

namespace braidkit {

struct AlgebraData {
  GradedSpace carrier;
  Mor m;    // carrier (x) carrier -> carrier
  Mor eta;  // I -> carrier
};

struct CoalgebraData {
  GradedSpace carrier;
  Mor delta;  // carrier -> carrier (x) carrier
  Mor eps;    // carrier -> I
};

struct HopfData {
  std::string name;
  AlgebraData algebra;
  CoalgebraData coalgebra;
  std::optional<Mor> antipode;
  std::optional<Mor> antipode_inv;

  HopfData(std::string name, Mor m, Mor eta, Mor delta, Mor eps, std::optional<Mor> s = std::nullopt,
           std::optional<Mor> s_inv = std::nullopt);

  const GradedSpace& carrier() const { return algebra.carrier; }
  const Mor& m() const { return algebra.m; }
  const Mor& eta() const { return algebra.eta; }
  const Mor& delta() const { return coalgebra.delta; }
  const Mor& eps() const { return coalgebra.eps; }
  /// Throws if no antipode is present.
  const Mor& S() const;
  /// Throws unless S^{-1} is present or S is invertible.
  const Mor& S_inv() const;
  bool has_antipode() const { return antipode.has_value(); }
};

struct PairingData {
  Mor tau;  // H (x) A -> I
  std::optional<Mor> tau_bar;
};

struct RMatrixData {
  Mor r;  // I -> H (x) H
  std::optional<Mor> r_inv;
};

Report check_algebra(const AlgebraData& a, const std::string& subject);
Report check_coalgebra(const CoalgebraData& c, const std::string& subject);
Report check_bialgebra(const BraidingSpec& spec, const HopfData& h);
/// m(S (x) id)Delta = eta eps = m(id (x) S)Delta, and S S^{-1} = S^{-1} S = id if S^{-1} is stored.
Report check_antipode(const HopfData& h);
/// Algebra, coalgebra, bialgebra and antipode checks.
Report hopf_suite(const BraidingSpec& spec, const HopfData& h);

/// A (x) B with (m_A (x) m_B)(id (x) C_{B,A} (x) id).
AlgebraData tensor_algebra(const BraidingSpec& spec, const AlgebraData& a, const AlgebraData& b);
/// A (x) B with (id (x) C_{A,B} (x) id)(Delta_A (x) Delta_B).
CoalgebraData tensor_coalgebra(const BraidingSpec& spec, const CoalgebraData& a, const CoalgebraData& b);
AlgebraData unit_algebra();
CoalgebraData unit_coalgebra();

/// Hom(X, Y) with f * g = m_Y (f (x) g) Delta_X.
struct ConvolutionContext {
  CoalgebraData source;
  AlgebraData target;
};

Mor convolve(const ConvolutionContext& ctx, const Mor& f, const Mor& g);
Mor convolution_unit(const ConvolutionContext& ctx);
/// Solves f * g = eta eps over Q(zeta_n) for degree-preserving g, then
/// confirms g * f = eta eps. Returns nullopt when f is not invertible.
std::optional<Mor> convolution_inverse(const ConvolutionContext& ctx, const Mor& f);

/// Convolution inverse of id_H, or nullopt.
std::optional<Mor> synthesize_antipode(const HopfData& h);

/// QT1-QT3 for (H, R, delta_bar) plus the coalgebra axioms of delta_bar and
/// convolution-invertibility of R in Hom(I, H (x) H).
Report check_quasitriangular(const BraidingSpec& spec, const HopfData& h, const RMatrixData& r, const Mor& delta_bar,
                             const std::string& subject);

/// SP1-SP4 for tau: H (x) A -> I.
Report check_skew_pairing(const BraidingSpec& spec, const Mor& tau, const HopfData& h, const HopfData& a,
                          const std::string& subject);
/// Convolution inverse of tau over the tensor coalgebra H (x) A.
std::optional<Mor> pairing_inverse(const BraidingSpec& spec, const Mor& tau, const HopfData& h, const HopfData& a);

/// The pairing symmetry identity for U = V and U = W.
Report check_symmetric_pairing(const BraidingSpec& spec, const Mor& tau, const GradedSpace& v, const GradedSpace& w,
                               const std::string& subject);

/// act: H (x) R -> R, braided left module algebra.
Report check_module_algebra(const BraidingSpec& spec, const HopfData& h, const AlgebraData& r, const Mor& act,
                            const std::string& subject);
/// act: R (x) H -> R, braided right module algebra.
Report check_right_module_algebra(const BraidingSpec& spec, const HopfData& h, const AlgebraData& r, const Mor& act,
                                  const std::string& subject);

/// All copies of f with exactly one nonzero entry negated, in column order.
std::vector<Mor> single_sign_mutations(const Mor& f);

/// Result of mutating one structure map of a Hopf algebra and rerunning the suite.
struct MutationOutcome {
  std::string map;  // "m", "eta", "delta", "eps" or "S"
  std::size_t index = 0;
  bool detected = false;
  std::vector<Witness> witnesses;
};
std::vector<MutationOutcome> mutation_test(const BraidingSpec& spec, const HopfData& h);

}  // namespace braidkit
