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

// Keeps S if the modified structure still passes, else swaps in S^{-1}.
HopfData with_antipode_rule(const HopfData& base, Mor m, Mor delta, const std::string& suffix, std::string* note) {
  const std::string name = base.name + suffix;
  HopfData out(name, m, base.eta(), delta, base.eps(), base.antipode, base.antipode_inv);
  if (!base.has_antipode()) {
    if (note) *note = "no antipode to carry over";
    return out;
  }
  if (check_antipode(out).all_pass()) {
    if (note) *note = "kept S";
    return out;
  }
  if (base.antipode_inv) {
    HopfData swapped(name, m, base.eta(), delta, base.eps(), base.antipode_inv, base.antipode);
    if (check_antipode(swapped).all_pass()) {
      if (note) *note = "S failed, kept S^-1";
      return swapped;
    }
  }
  if (note) *note = "neither S nor S^-1 passes; bialgebra only";
  return HopfData(name, m, base.eta(), delta, base.eps());
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

HopfData op(const BraidingSpec& spec, const HopfData& h, std::string* note) {
  const GradedSpace& H = h.carrier();
  return with_antipode_rule(h, compose(h.m(), braid(spec, H, H)), h.delta(), "^op", note);
}

HopfData cop(const BraidingSpec& spec, const HopfData& h, std::string* note) {
  const GradedSpace& H = h.carrier();
  return with_antipode_rule(h, h.m(), compose(braid(spec, H, H), h.delta()), "^cop", note);
}

HopfData dual_hopf(const BraidingSpec&, const HopfData& h) {
  const GradedSpace& H = h.carrier();
  const DualData one = simple_dual(H);
  const DualData two = tensor_dual_second(H, H);
  const DualData unit = simple_dual(GradedSpace::unit());
  Mor m = transpose(h.delta(), one, two);
  Mor delta = transpose(h.m(), two, one);
  Mor eta = transpose(h.eps(), one, unit);
  Mor eps = transpose(h.eta(), unit, one);
  std::optional<Mor> s, s_inv;
  if (h.antipode) s = transpose(*h.antipode, one, one);
  if (h.antipode_inv) s_inv = transpose(*h.antipode_inv, one, one);
  return HopfData(h.name + "*", m, eta, delta, eps, s, s_inv);
}

HopfData hat_star(const BraidingSpec& spec, const HopfData& h) {
  HopfData out = cop(spec, op(spec, dual_hopf(spec, h)));
  out.name = h.name + "^*";
  return out;
}

void require_symmetric(const BraidingSpec& spec, const GradedSpace& h, const std::string& who) {
  CheckRecord r = equate("symmetric-eval.iii", h.name(), compose(braid(spec, h, h), braid(spec, h, h)),
                         id(tensor_space(h, h)), 1);
  if (!r.pass) {
    throw PreconditionError(who + ": C_{H,H} is not its own inverse on " + h.name(), "symmetric-eval.iii",
                            witness_text(r));
  }
}

HatContext make_hat_context(const BraidingSpec& spec, const HopfData& h) {
  require_symmetric(spec, h.carrier(), "harpoon actions");
  HopfData hs = hat_star(spec, h);
  const GradedSpace& H = h.carrier();
  const GradedSpace& Hs = hs.carrier();
  const Mor i = id(H), j = id(Hs), d = ev(H);
  Mor v1 = compose(tensor(i, d), tensor(braid(spec, Hs, H), i), tensor(j, h.delta()));
  Mor v2 = compose(tensor(j, d), tensor(j, braid(spec, H, Hs)), tensor(braid(spec, H, Hs), j), tensor(i, hs.delta()));
  Mor v3 = compose(tensor(d, i), tensor(braid(spec, H, Hs), i), tensor(i, braid(spec, H, Hs)), tensor(h.delta(), j));
  Mor v4 = compose(tensor(d, j), tensor(j, braid(spec, Hs, H)), tensor(hs.delta(), i));
  return HatContext{spec, h, std::move(hs), {std::move(v1), std::move(v2), std::move(v3), std::move(v4)}};
}

Report check_harpoons(const HatContext& c) {
  Report rep("harpoon actions");
  auto tag = [&](Report r, const std::string& variant) {
    for (const auto& rec : r.records()) {
      CheckRecord x = rec;
      x.check = "harpoon" + variant + "." + rec.check;
      rep.add(std::move(x));
    }
  };
  tag(check_module_algebra(c.spec, c.hs, c.h.algebra, c.harpoon(1), c.h.name), "1");
  tag(check_module_algebra(c.spec, c.h, c.hs.algebra, c.harpoon(2), c.h.name), "2");
  tag(check_right_module_algebra(c.spec, c.hs, c.h.algebra, c.harpoon(3), c.h.name), "3");
  tag(check_right_module_algebra(c.spec, c.h, c.hs.algebra, c.harpoon(4), c.h.name), "4");
  return rep;
}

SmashProduct smash_product(const BraidingSpec& spec, const AlgebraData& r, const HopfData& h, const Mor& act,
                           const std::string& provenance) {
  Report ma = check_module_algebra(spec, h, r, act, provenance.empty() ? "smash" : provenance);
  if (const CheckRecord* bad = first_failure(ma)) {
    throw PreconditionError("smash product " + r.carrier.name() + " # " + h.carrier().name() +
                                ": action is not a module algebra action (" + bad->check + ")",
                            bad->check, witness_text(*bad));
  }
  const GradedSpace& R = r.carrier;
  const GradedSpace& H = h.carrier();
  const Mor k = id(R), i = id(H);
  Mor m = compose(tensor(r.m, h.m()), tensor(k, act, i, i), tensor(k, i, braid(spec, H, R), i),
                  tensor(k, h.delta(), k, i));
  GradedSpace carrier = tensor_space(R, H);
  return {carrier, AlgebraData{carrier, std::move(m), tensor(r.eta, h.eta())}, provenance};
}

BarTensorAlgebra bar_tensor(const HatContext& c) {
  const GradedSpace& H = c.h.carrier();
  const GradedSpace& Hs = c.hs.carrier();
  GradedSpace carrier = tensor_space(H, Hs);
  return {carrier, AlgebraData{carrier, tensor(id(H), ev(H), id(Hs)), coev(H)}};
}

EndIso end_iso(const HatContext& c) {
  const GradedSpace& H = c.h.carrier();
  const GroupSpec& G = c.spec.group();
  const std::size_t n = H.dim();
  std::vector<std::string> labels;
  std::vector<int> codes;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      labels.push_back("E(" + H.label(a) + "," + H.label(b) + ")");
      codes.push_back(G.add(H.degree(a), G.neg(H.degree(b))));
    }
  }
  GradedSpace end = GradedSpace::atom_from_codes("End(" + H.name() + ")", labels, codes, H.group());
  const GradedSpace ee = tensor_space(end, end);

  SparseMatrix em(end.dim(), ee.dim());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t d = 0; d < n; ++d) em.add(a * n + d, (a * n + b) * end.dim() + (b * n + d), CycScalar(1));
  SparseMatrix eu(end.dim(), 1);
  for (std::size_t a = 0; a < n; ++a) eu.add(a * n + a, 0, CycScalar(1));
  AlgebraData end_alg{end, Mor(ee, end, std::move(em)), Mor(GradedSpace::unit(), end, std::move(eu))};

  // Curry (id (x) d): (H (x) H^) (x) H -> H into H (x) H^ -> End(H).
  BarTensorAlgebra bar = bar_tensor(c);
  const Mor apply = tensor(id(H), ev(H));
  SparseMatrix g(end.dim(), bar.carrier.dim());
  for (std::size_t p = 0; p < bar.carrier.dim(); ++p) {
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& e : apply.matrix().column(p * n + k)) g.add(e.row * n + k, p, e.value);
    }
  }
  Mor gamma(bar.carrier, end, std::move(g));

  Report rep("end_iso");
  const std::string subject = "Γ: " + bar.carrier.name() + " → " + end.name();
  Stopwatch sw;
  CheckRecord bij = fact("end-iso.bijective", subject, kernels::inverse(gamma.matrix()).has_value());
  bij.seconds = sw.seconds();
  rep.add(bij);
  add_eq(rep, "end-iso.multiplicative", subject, compose(gamma, bar.algebra.m),
         compose(end_alg.m, tensor(gamma, gamma)));
  add_eq(rep, "end-iso.unital", subject, compose(gamma, bar.algebra.eta), end_alg.eta);
  return {std::move(gamma), std::move(end_alg), std::move(rep)};
}

Mor lambda(const HatContext& c) {
  const GradedSpace& H = c.h.carrier();
  const GradedSpace& Hs = c.hs.carrier();
  const Mor i = id(H), j = id(Hs);
  return compose(tensor(c.h.m(), ev(H), j), tensor(i, braid(c.spec, Hs, H), i, j), tensor(i, j, c.h.delta(), j),
                 tensor(i, j, coev(H)));
}

Mor rho(const HatContext& c) {
  const GradedSpace& H = c.h.carrier();
  const GradedSpace& Hs = c.hs.carrier();
  const Mor i = id(H), j = id(Hs);
  const Mor cc = braid(c.spec, H, H);
  return compose(tensor(ev(H), c.h.m(), j), tensor(j, i, cc, j), tensor(j, cc, i, j), tensor(j, i, c.h.delta(), j),
                 tensor(j, i, coev(H)));
}

Report check_lambda_rho(const HatContext& c) {
  Report rep("lambda and rho");
  const std::string& s = c.h.name;
  SmashProduct hhs = smash_product(c.spec, c.h.algebra, c.hs, c.harpoon(1), "H#H^");
  SmashProduct hsh = smash_product(c.spec, c.hs.algebra, c.h, c.harpoon(2), "H^#H");
  BarTensorAlgebra bar = bar_tensor(c);
  const Mor lam = lambda(c), rh = rho(c);
  add_eq(rep, "lambda.multiplicative", s, compose(lam, hhs.algebra.m), compose(bar.algebra.m, tensor(lam, lam)));
  add_eq(rep, "lambda.unital", s, compose(lam, hhs.algebra.eta), bar.algebra.eta);
  add_eq(rep, "rho.anti-multiplicative", s, compose(rh, hsh.algebra.m),
         compose(bar.algebra.m, braid(c.spec, bar.carrier, bar.carrier), tensor(rh, rh)));
  add_eq(rep, "rho.unital", s, compose(rh, hsh.algebra.eta), bar.algebra.eta);
  return rep;
}

std::pair<Mor, Mor> lambda_rho_relation(const HatContext& c, bool mutate) {
  const BraidingSpec& sp = c.spec;
  const GradedSpace& H = c.h.carrier();
  const GradedSpace& Hs = c.hs.carrier();
  const Mor i = id(H), j = id(Hs);
  const Mor mb = bar_tensor(c).algebra.m;
  const Mor lam = lambda(c), rh = rho(c);
  const Mor c_hh = braid(sp, H, H), c_hs = braid(sp, H, Hs), c_sh = braid(sp, Hs, H), c_ss = braid(sp, Hs, Hs);
  const Mor& dh = c.hs.delta();

  Mor lhs = compose(mb, tensor(lam, rh));
  Mor middle = mutate ? tensor(j, i, id(tensor_space(Hs, Hs)), i, j) : tensor(j, i, c_ss, i, j);
  Mor rhs = compose(mb, tensor(rh, lam), tensor(j, c.harpoon(1), c.harpoon(3), j), tensor(j, c_hs, c_sh, j), middle,
                    tensor(j, c_sh, c_hs, j), tensor(c_ss, i, i, c_ss), tensor(c.hs.S(), j, i, i, j, j),
                    tensor(dh, i, i, dh), tensor(j, c_hh, j), tensor(c_hs, c_sh), tensor(i, c_ss, i));
  return {std::move(lhs), std::move(rhs)};
}

Report check_lambda_rho_relation(const HatContext& c) {
  Report rep("lambda-rho exchange relation");
  auto [lhs, rhs] = lambda_rho_relation(c);
  add_eq(rep, "lambda-rho.exchange", c.h.name, lhs, rhs);
  return rep;
}

Mor invert_lambda(const HatContext& c) {
  Mor lam = lambda(c);
  auto inv = kernels::inverse(lam.matrix());
  if (!inv) {
    throw NotInvertible("lambda is singular on " + c.h.name + " although S is invertible");
  }
  return Mor(lam.cod(), lam.dom(), std::move(*inv));
}

Mor build_w(const HatContext& c) {
  return compose(invert_lambda(c), rho(c), tensor(c.hs.S_inv(), c.h.eta()));
}

Mor adjoint_action(const BraidingSpec& spec, const HopfData& h) {
  const GradedSpace& H = h.carrier();
  return compose(h.m(), tensor(h.m(), h.S()), tensor(id(H), braid(spec, H, H)), tensor(h.delta(), id(H)));
}

Mor trivial_action(const HopfData& h, const GradedSpace& r) { return tensor(h.eps(), id(r)); }

DualityMaps duality_maps(const HatContext& c, const AlgebraData& r, const Mor& act) {
  const BraidingSpec& sp = c.spec;
  const GradedSpace& R = r.carrier;
  const GradedSpace& H = c.h.carrier();
  const GradedSpace& Hs = c.hs.carrier();
  const Mor k = id(R), i = id(H), j = id(Hs);

  SmashProduct rh = smash_product(sp, r, c.h, act, "R#H");
  Mor act_prime = compose(tensor(k, c.harpoon(1)), tensor(braid(sp, Hs, R), i));
  SmashProduct rhh = smash_product(sp, rh.algebra, c.hs, act_prime, "(R#H)#H^");
  SmashProduct hhs = smash_product(sp, c.h.algebra, c.hs, c.harpoon(1), "H#H^");
  BarTensorAlgebra bar = bar_tensor(c);

  Mor w = build_w(c);
  Mor phi = compose(tensor(j, act), tensor(braid(sp, H, Hs), k), tensor(coev(H), k));
  Mor phi_alt = compose(tensor(j, act), tensor(compose(braid(sp, H, Hs), coev(H)), k));
  const Mor& mhh = hhs.algebra.m;
  const Mor c_sr = braid(sp, Hs, R);
  Mor Phi = compose(tensor(k, mhh), tensor(k, w, i, j), tensor(c_sr, i, j), tensor(phi, i, j));
  Mor Psi = compose(tensor(k, mhh), tensor(k, w, i, j), tensor(c_sr, i, j), tensor(c.hs.S(), k, i, j),
                    tensor(phi, i, j));
  Mor xi = compose(tensor(k, rho(c)), tensor(k, c.hs.S_inv(), c.h.eta()), c_sr, phi);
  return DualityMaps{std::move(rh), std::move(rhh), std::move(act_prime), std::move(w),   std::move(phi),
                     std::move(phi_alt), std::move(Phi), std::move(Psi), std::move(xi), lambda(c),
                     std::move(bar)};
}

Report verify_duality(const BraidingSpec& spec, const AlgebraData& r, const HopfData& h, const Mor& act,
                      const std::string& subject) {
  Report rep("duality: " + subject);
  HatContext c = make_hat_context(spec, h);
  Report ma = check_module_algebra(spec, h, r, act, subject);
  if (const CheckRecord* bad = first_failure(ma)) {
    throw PreconditionError("verify-duality " + subject + ": action is not a module algebra action (" + bad->check + ")",
                            bad->check, witness_text(*bad));
  }
  rep.add(fact("duality.module-algebra", subject, true));

  const GradedSpace& R = r.carrier;
  const GradedSpace& Hs = c.hs.carrier();
  const Mor k = id(R);
  {
    Mor act_prime = compose(tensor(k, c.harpoon(1)), tensor(braid(spec, Hs, R), id(h.carrier())));
    SmashProduct rh = smash_product(spec, r, h, act, "R#H");
    Report mp = check_module_algebra(spec, c.hs, rh.algebra, act_prime, subject);
    const CheckRecord* bad = first_failure(mp);
    CheckRecord rec = fact("duality.act-prime-module-algebra", subject, bad == nullptr);
    if (bad) {
      rec.witnesses = bad->witnesses;
      rec.note = bad->check;
      rep.add(rec);
      return rep;
    }
    rep.add(rec);
  }

  Stopwatch build;
  DualityMaps d = duality_maps(c, r, act);
  const double build_seconds = build.seconds();

  const std::size_t n = h.carrier().dim();
  const bool dims = d.rhh.carrier.dim() == R.dim() * n * n &&
                    tensor_space(R, d.bar.carrier).dim() == d.rhh.carrier.dim();
  rep.add(fact("duality.dims", subject, dims,
               "dim (R#H)#H^ = " + std::to_string(d.rhh.carrier.dim()) + " = " + std::to_string(R.dim()) + "·" +
                   std::to_string(n) + "², build " + std::to_string(build_seconds) + "s"));

  add_eq(rep, "duality.phi-forms-agree", subject, d.phi, d.phi_alt);

  SmashProduct hhs = smash_product(spec, h.algebra, c.hs, c.harpoon(1), "H#H^");
  add_eq(rep, "duality.w-multiplicative", subject, compose(d.w, c.hs.m()), compose(hhs.algebra.m, tensor(d.w, d.w)));
  add_eq(rep, "duality.w-unital", subject, compose(d.w, c.hs.eta()), hhs.algebra.eta);

  const Mor idt = id(d.rhh.carrier);
  add_eq(rep, "duality.PhiPsi", subject, compose(d.Phi, d.Psi), idt);
  add_eq(rep, "duality.PsiPhi", subject, compose(d.Psi, d.Phi), idt);

  AlgebraData target_hh = tensor_algebra(spec, r, hhs.algebra);
  add_eq(rep, "duality.Phi-multiplicative", subject, compose(d.Phi, d.rhh.algebra.m),
         compose(target_hh.m, tensor(d.Phi, d.Phi)));
  add_eq(rep, "duality.Phi-unital", subject, compose(d.Phi, d.rhh.algebra.eta), target_hh.eta);

  AlgebraData target = tensor_algebra(spec, r, d.bar.algebra);
  Mor phi_prime = compose(tensor(k, d.lam), d.Phi);
  add_eq(rep, "duality.Phi-prime-multiplicative", subject, compose(phi_prime, d.rhh.algebra.m),
         compose(target.m, tensor(phi_prime, phi_prime)));
  add_eq(rep, "duality.Phi-prime-unital", subject, compose(phi_prime, d.rhh.algebra.eta), target.eta);
  add_eq(rep, "duality.xi-multiplicative", subject, compose(d.xi, r.m), compose(target.m, tensor(d.xi, d.xi)));
  add_eq(rep, "duality.xi-unital", subject, compose(d.xi, r.eta), target.eta);
  add_eq(rep, "duality.Phi-prime-factorization", subject, phi_prime,
         compose(tensor(k, d.bar.algebra.m), tensor(d.xi, d.lam)));

  EndIso e = end_iso(c);
  rep.merge(e.report);
  if (rep.all_pass()) {
    rep.add(fact("duality.summary", subject, true,
                 "(R#H)#H^ ≅ R⊗(H⊗̄H^) ≅ M_" + std::to_string(n) + "(R), total dimension " +
                     std::to_string(d.rhh.carrier.dim())));
  }
  return rep;
}

}  // namespace braidkit
