#pragma once

#include <array>
#include <string>

#include "braidkit/hopf.hpp"

namespace braidkit {

/// m^op = m C_{H,H}. The antipode is kept if it still passes, otherwise
/// S^{-1} is tried; `note` receives which one was kept.
HopfData op(const BraidingSpec& spec, const HopfData& h, std::string* note = nullptr);
/// Delta^cop = C_{H,H} Delta, same antipode rule as op.
HopfData cop(const BraidingSpec& spec, const HopfData& h, std::string* note = nullptr);

/// H* with structure maps transposed, (H (x) H)* identified with H* (x) H*
/// by the second convention (d = d_H (id (x) d_H (x) id)).
HopfData dual_hopf(const BraidingSpec& spec, const HopfData& h);
/// ((H*)^op)^cop.
HopfData hat_star(const BraidingSpec& spec, const HopfData& h);

/// Throws PreconditionError unless C_{H,H} C_{H,H} = id.
void require_symmetric(const BraidingSpec& spec, const GradedSpace& h, const std::string& who);

/// H together with H^ = H^{hat*} and the four harpoon actions.
///   1: H^ (x) H -> H   left   (id (x) d)(C_{H^,H} (x) id)(id (x) Delta_H)
///   2: H (x) H^ -> H^  left   (id (x) d)(id (x) C_{H,H^})(C_{H,H^} (x) id)(id (x) Delta_H^)
///   3: H (x) H^ -> H   right  (d (x) id)(C_{H,H^} (x) id)(id (x) C_{H,H^})(Delta_H (x) id)
///   4: H^ (x) H -> H^  right  (d (x) id)(id (x) C_{H^,H})(Delta_H^ (x) id)
struct HatContext {
  BraidingSpec spec;
  HopfData h;
  HopfData hs;
  std::array<Mor, 4> harpoons;

  const Mor& harpoon(int variant) const { return harpoons.at(static_cast<std::size_t>(variant - 1)); }
};
HatContext make_hat_context(const BraidingSpec& spec, const HopfData& h);
/// Module-algebra reports for the four harpoons.
Report check_harpoons(const HatContext& ctx);

struct SmashProduct {
  GradedSpace carrier;
  AlgebraData algebra;
  std::string provenance;
};
/// R # H with m = (m_R (x) m_H)(id (x) act (x) id (x) id)(id (x) id (x) C_{H,R} (x) id)(id (x) Delta (x) id (x) id).
/// Refuses (PreconditionError) unless act makes R a left H-module algebra.
SmashProduct smash_product(const BraidingSpec& spec, const AlgebraData& r, const HopfData& h, const Mor& act,
                           const std::string& provenance = {});

struct BarTensorAlgebra {
  GradedSpace carrier;
  AlgebraData algebra;
};
/// H (x) H^ with m = id (x) d (x) id and unit b.
BarTensorAlgebra bar_tensor(const HatContext& ctx);

struct EndIso {
  Mor gamma;             // H (x) H^ -> End(H)
  AlgebraData end_algebra;
  Report report;
};
/// Gamma(h (x) f)(x) = h d(f (x) x), checked to be a unital algebra isomorphism
/// onto End(H) with composition of matrix units.
EndIso end_iso(const HatContext& ctx);

/// lambda: H # H^ -> H (x)bar H^.
Mor lambda(const HatContext& ctx);
/// rho: H^ # H -> H (x)bar H^.
Mor rho(const HatContext& ctx);
/// lambda multiplicative and unital, rho anti-multiplicative and unital.
Report check_lambda_rho(const HatContext& ctx);

/// Both sides of the lambda-rho exchange relation on H (x) H^ (x) H^ (x) H.
/// `mutate` drops the middle C_{H^,H^} of the right side (negative control).
std::pair<Mor, Mor> lambda_rho_relation(const HatContext& ctx, bool mutate = false);
Report check_lambda_rho_relation(const HatContext& ctx);

/// lambda^{-1} by exact inversion; a singular lambda with invertible S is a hard error.
Mor invert_lambda(const HatContext& ctx);
/// w = lambda^{-1} rho (S^{-1} (x) eta_H): H^ -> H # H^.
Mor build_w(const HatContext& ctx);

/// The braided adjoint action m(m (x) S)(id (x) C_{H,H})(Delta (x) id).
Mor adjoint_action(const BraidingSpec& spec, const HopfData& h);
/// h (x) r |-> eps(h) r.
Mor trivial_action(const HopfData& h, const GradedSpace& r);

struct DualityMaps {
  SmashProduct rh;   // R # H
  SmashProduct rhh;  // (R # H) # H^
  Mor act_prime;     // H^ (x) R (x) H -> R (x) H
  Mor w;
  Mor phi;           // R -> H^ (x) R
  Mor phi_alt;       // the same map assembled as (id (x) act)((C b) (x) id)
  Mor Phi;           // (R # H) # H^ -> R (x) (H # H^)
  Mor Psi;
  Mor xi;            // R -> R (x) (H (x)bar H^)
  Mor lam;
  BarTensorAlgebra bar;
};
DualityMaps duality_maps(const HatContext& ctx, const AlgebraData& r, const Mor& act);

/// Runs every identity of the duality isomorphism plus end_iso. Refuses
/// (PreconditionError) when C_{H,H} is not involutive or act is not a
/// module-algebra action.
Report verify_duality(const BraidingSpec& spec, const AlgebraData& r, const HopfData& h, const Mor& act,
                      const std::string& subject);

}  // namespace braidkit
