#include "braidkit/double.hpp"

#include "braidkit/constructions.hpp"
#include "braidkit/error.hpp"

namespace braidkit {

namespace {

void add_eq(Report& rep, const std::string& check, const std::string& subject, const Mor& lhs, const Mor& rhs) {
  Stopwatch sw;
  CheckRecord r = equate(check, subject, lhs, rhs);
  r.seconds = sw.seconds();
  rep.add(std::move(r));
}

const CheckRecord* first_failure(const Report& r) {
  for (const auto& rec : r.records()) {
    if (!rec.pass) return &rec;
  }
  return nullptr;
}

std::string witness_text(const CheckRecord& rec) {
  if (rec.witnesses.empty()) return rec.note;
  const Witness& w = rec.witnesses.front();
  return w.where + ": lhs = " + w.lhs + ", rhs = " + w.rhs;
}

}  // namespace

Mor alpha_action(const BraidingSpec& spec, const HopfData& h, const HopfData& a, const Mor& tau, const Mor& tau_bar) {
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();
  const Mor i = id(H), j = id(A), c = braid(spec, H, A);
  return compose(tensor(tau, j, tau_bar), tensor(i, j, c, j), tensor(i, c, a.delta()), tensor(h.delta(), a.delta()));
}

Mor beta_action(const BraidingSpec& spec, const HopfData& h, const HopfData& a, const Mor& tau, const Mor& tau_bar) {
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();
  const Mor i = id(H), j = id(A), c = braid(spec, H, A);
  return compose(tensor(tau, i, tau_bar), tensor(i, c, i, j), tensor(h.delta(), c, j), tensor(h.delta(), a.delta()));
}

Report check_module_coalgebra(const BraidingSpec& spec, const HopfData& h, const HopfData& a, const Mor& alpha,
                              const std::string& subject) {
  Report rep("left module coalgebra");
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();
  const Mor i = id(H), j = id(A);
  add_eq(rep, "module.assoc", subject, compose(alpha, tensor(h.m(), j)), compose(alpha, tensor(i, alpha)));
  add_eq(rep, "module.unit", subject, compose(alpha, tensor(h.eta(), j)), j);
  add_eq(rep, "module-coalgebra.delta", subject, compose(a.delta(), alpha),
         compose(tensor(alpha, alpha), tensor(i, braid(spec, H, A), j), tensor(h.delta(), a.delta())));
  add_eq(rep, "module-coalgebra.eps", subject, compose(a.eps(), alpha), tensor(h.eps(), a.eps()));
  return rep;
}

Report check_right_module_coalgebra(const BraidingSpec& spec, const HopfData& h, const HopfData& a, const Mor& beta,
                                    const std::string& subject) {
  Report rep("right module coalgebra");
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();
  const Mor i = id(H), j = id(A);
  add_eq(rep, "module.assoc", subject, compose(beta, tensor(beta, j)), compose(beta, tensor(i, a.m())));
  add_eq(rep, "module.unit", subject, compose(beta, tensor(i, a.eta())), i);
  add_eq(rep, "module-coalgebra.delta", subject, compose(h.delta(), beta),
         compose(tensor(beta, beta), tensor(i, braid(spec, H, A), j), tensor(h.delta(), a.delta())));
  add_eq(rep, "module-coalgebra.eps", subject, compose(h.eps(), beta), tensor(h.eps(), a.eps()));
  return rep;
}

DoubleCrossProduct double_cross_product(const BraidingSpec& spec, const HopfData& a, const HopfData& h,
                                        const PairingData& tau, bool validate) {
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();
  const std::string name = a.name + "⋈" + h.name;
  PairingData p = tau;
  if (!p.tau_bar) p.tau_bar = pairing_inverse(spec, tau.tau, h, a);
  if (!p.tau_bar) throw PreconditionError(name + ": τ has no convolution inverse", "tau-bar");

  Mor alpha = alpha_action(spec, h, a, p.tau, *p.tau_bar);
  Mor beta = beta_action(spec, h, a, p.tau, *p.tau_bar);
  const Mor i = id(H), j = id(A);
  Mor swap = compose(tensor(i, braid(spec, H, A), j), tensor(h.delta(), a.delta()));
  Mor m = compose(tensor(a.m(), h.m()), tensor(j, alpha, beta, i), tensor(j, swap, i));
  Mor eta = tensor(a.eta(), h.eta());
  Mor delta = compose(tensor(j, braid(spec, A, H), i), tensor(a.delta(), h.delta()));
  Mor eps = tensor(a.eps(), h.eps());

  HopfData d(name, m, eta, delta, eps);
  Report ac = check_algebra(d.algebra, name);
  ac.merge(check_coalgebra(d.coalgebra, name));
  const CheckRecord* bad = first_failure(ac);
  if (bad && validate) {
    throw PreconditionError(name + ": not an algebra and coalgebra (" + bad->check + ")", bad->check,
                            witness_text(*bad));
  }
  if (!bad) d = HopfData(name, m, eta, delta, eps, synthesize_antipode(d));
  GradedSpace carrier = d.carrier();
  return {carrier, std::move(d), std::move(alpha), std::move(beta), std::move(p)};
}

CheckRecord check_bialgebra_criterion(const BraidingSpec& spec, const GradedSpace& a, const GradedSpace& h) {
  Stopwatch sw;
  CheckRecord r = equate("bialgebra-criterion", a.name() + "," + h.name(),
                         compose(braid(spec, a, h), braid(spec, h, a)), id(tensor_space(h, a)));
  r.seconds = sw.seconds();
  return r;
}

DrinfeldDouble drinfeld_double(const BraidingSpec& spec, const HopfData& h) {
  require_symmetric(spec, h.carrier(), "drinfeld double");
  HopfData a = op(spec, dual_hopf(spec, h));
  a.name = "(" + h.name + "*)^op";
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();
  Mor tau = compose(ev(H), braid(spec, H, A));
  Report sp = check_skew_pairing(spec, tau, h, a, "τ");
  sp.merge(check_symmetric_pairing(spec, tau, H, A, "τ"));
  if (const CheckRecord* bad = first_failure(sp)) {
    throw PreconditionError("drinfeld double: τ = d C_{H,A} fails " + bad->check, bad->check, witness_text(*bad));
  }
  DoubleCrossProduct dcp = double_cross_product(spec, a, h, PairingData{tau, std::nullopt});
  dcp.hopf.name = "D(" + h.name + ")";
  Mor r = tensor(a.eta(), coev(H), h.eta());
  return {std::move(a), std::move(dcp), RMatrixData{std::move(r), std::nullopt}};
}

Mor qt3_common(const BraidingSpec& spec, const HopfData& h, const HopfData& a) {
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();
  const Mor i = id(H), j = id(A);
  const Mor c_ah = braid(spec, A, H), c_ha = braid(spec, H, A), c_hh = braid(spec, H, H), c_aa = braid(spec, A, A);
  return compose(tensor(j, c_ah, i), tensor(j, a.m(), i, i), tensor(c_aa, c_ha, i), tensor(j, j, h.m(), j, i),
                 tensor(j, j, c_hh, c_ha), tensor(j, j, i, c_hh, j), tensor(a.delta(), h.delta(), coev(H)));
}

Report double_report(const BraidingSpec& spec, const HopfData& h, const DrinfeldDouble& d, bool use_cop) {
  const std::string subject = d.dcp.hopf.name;
  Report rep("Drinfeld double " + subject);
  const Mor& tau = d.dcp.pairing.tau;
  const HopfData& a = d.a;
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();

  rep.merge(check_skew_pairing(spec, tau, h, a, "τ"));
  rep.merge(check_symmetric_pairing(spec, tau, H, A, "τ"));

  const Mor& tau_bar = *d.dcp.pairing.tau_bar;
  ConvolutionContext ctx{tensor_coalgebra(spec, h.coalgebra, a.coalgebra), unit_algebra()};
  const Mor unit = convolution_unit(ctx);
  Stopwatch sw;
  bool two_sided = convolve(ctx, tau, tau_bar) == unit && convolve(ctx, tau_bar, tau) == unit;
  CheckRecord ts = fact("tau-bar.convolution-inverse", "τ̄", two_sided);
  ts.seconds = sw.seconds();
  rep.add(ts);
  add_eq(rep, "tau-bar.equals-tau(S⊗id)", "τ̄", tau_bar, compose(tau, tensor(h.S(), id(A))));

  rep.merge(check_module_coalgebra(spec, h, a, d.dcp.alpha, "α"));
  rep.merge(check_right_module_coalgebra(spec, h, a, d.dcp.beta, "β"));
  rep.merge(hopf_suite(spec, d.dcp.hopf));

  const GradedSpace& D = d.dcp.carrier;
  const HopfData& dh = d.dcp.hopf;
  Mor delta_bar = use_cop ? compose(braid(spec, D, D), dh.delta()) : dh.delta();
  rep.merge(check_quasitriangular(spec, dh, d.rmatrix, delta_bar, subject));

  // R^{-1} candidate eta (x) (S (x) id) b (x) eta against the linear solve.
  {
    Stopwatch s2;
    ConvolutionContext rc{unit_coalgebra(), tensor_algebra(spec, dh.algebra, dh.algebra)};
    auto solved = convolution_inverse(rc, d.rmatrix.r);
    Mor candidate = tensor(a.eta(), compose(tensor(h.S(), id(A)), coev(H)), h.eta());
    CheckRecord rr = solved ? equate("R-inverse.candidate", subject, *solved, candidate)
                            : fact("R-inverse.candidate", subject, false, "R not convolution-invertible");
    rr.seconds = s2.seconds();
    rep.add(rr);
  }

  if (use_cop) {
    const Mor dd = id(D);
    const Mor mm = compose(tensor(dh.m(), dh.m()), tensor(dd, braid(spec, D, D), dd));
    const Mor common = qt3_common(spec, h, a);
    add_eq(rep, "QT3.lhs-common", subject, compose(mm, tensor(delta_bar, d.rmatrix.r)), common);
    add_eq(rep, "QT3.rhs-common", subject, compose(mm, tensor(d.rmatrix.r, dh.delta())), common);
  }
  return rep;
}

}  // namespace braidkit
