#pragma once

#include <optional>
#include <string>

#include "braidkit/hopf.hpp"

namespace braidkit {

/// alpha = (tau (x) id (x) tau_bar)(id (x) id (x) C_{H,A} (x) id)(id (x) C_{H,A} (x) Delta)(Delta (x) Delta): H (x) A -> A.
Mor alpha_action(const BraidingSpec& spec, const HopfData& h, const HopfData& a, const Mor& tau, const Mor& tau_bar);
/// beta = (tau (x) id (x) tau_bar)(id (x) C_{H,A} (x) id (x) id)(Delta (x) C_{H,A} (x) id)(Delta (x) Delta): H (x) A -> H.
Mor beta_action(const BraidingSpec& spec, const HopfData& h, const HopfData& a, const Mor& tau, const Mor& tau_bar);

/// (A, alpha) a left H-module coalgebra.
Report check_module_coalgebra(const BraidingSpec& spec, const HopfData& h, const HopfData& a, const Mor& alpha,
                              const std::string& subject);
/// (H, beta) a right A-module coalgebra.
Report check_right_module_coalgebra(const BraidingSpec& spec, const HopfData& h, const HopfData& a, const Mor& beta,
                                    const std::string& subject);

struct DoubleCrossProduct {
  GradedSpace carrier;  // A (x) H
  HopfData hopf;        // antipode present when the convolution inverse of id exists
  Mor alpha;
  Mor beta;
  PairingData pairing;
};

/// A bowtie_tau H. The coproduct is the braided tensor coalgebra
/// (id (x) C_{A,H} (x) id)(Delta_A (x) Delta_H). Rejects (PreconditionError)
/// when tau has no convolution inverse or the result is not an algebra and
/// a coalgebra, unless `validate` is false.
DoubleCrossProduct double_cross_product(const BraidingSpec& spec, const HopfData& a, const HopfData& h,
                                        const PairingData& tau, bool validate = true);

/// C_{A,H} C_{H,A} = id on H (x) A.
CheckRecord check_bialgebra_criterion(const BraidingSpec& spec, const GradedSpace& a, const GradedSpace& h);

struct DrinfeldDouble {
  HopfData a;  // (H*)^op
  DoubleCrossProduct dcp;
  RMatrixData rmatrix;  // eta_A (x) b (x) eta_H
};

/// A = (H*)^op, tau = d_H C_{H,A}. Refuses (PreconditionError) unless
/// C_{H,H} is involutive and tau is a symmetric skew pairing.
DrinfeldDouble drinfeld_double(const BraidingSpec& spec, const HopfData& h);

/// (j (x) C_{A,H} (x) i)(j (x) m_A (x) i (x) i)(C_{A,A} (x) C_{H,A} (x) i)(j (x) j (x) m_H (x) j (x) i)
///   (j (x) j (x) C_{H,H} (x) C_{H,A})(j (x) j (x) i (x) C_{H,H} (x) j)(Delta_A (x) Delta_H (x) b):
/// the expression both sides of QT3 reduce to.
Mor qt3_common(const BraidingSpec& spec, const HopfData& h, const HopfData& a);

/// SP1-SP4, symmetry of tau, tau_bar checks, the Hopf suite of D(H),
/// QT1-QT3 with delta_bar = Delta^cop (or Delta if !use_cop), and the QT3
/// common-expression comparison.
Report double_report(const BraidingSpec& spec, const HopfData& h, const DrinfeldDouble& d, bool use_cop = true);

}  // namespace braidkit
