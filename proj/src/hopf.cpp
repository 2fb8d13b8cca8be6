#include "braidkit/hopf.hpp"

#include <map>

#include "braidkit/error.hpp"

namespace braidkit {

namespace {

CheckRecord timed(CheckRecord r, const Stopwatch& sw) {
  r.seconds = sw.seconds();
  return r;
}

void add_eq(Report& rep, const std::string& check, const std::string& subject, const Mor& lhs, const Mor& rhs) {
  Stopwatch sw;
  rep.add(timed(equate(check, subject, lhs, rhs), sw));
}

std::optional<Mor> invert(const Mor& f) {
  auto inv = kernels::inverse(f.matrix());
  if (!inv) return std::nullopt;
  return Mor(f.cod(), f.dom(), std::move(*inv));
}

}  // namespace

HopfData::HopfData(std::string name_, Mor m, Mor eta, Mor delta, Mor eps, std::optional<Mor> s,
                   std::optional<Mor> s_inv)
    : name(std::move(name_)),
      algebra{m.cod(), std::move(m), std::move(eta)},
      coalgebra{delta.dom(), std::move(delta), std::move(eps)},
      antipode(std::move(s)),
      antipode_inv(std::move(s_inv)) {
  const GradedSpace& h = algebra.carrier;
  const GradedSpace hh = tensor_space(h, h);
  if (algebra.m.dom() != hh) throw TypeMismatch(name + ": m must be " + hh.name() + " → " + h.name());
  if (algebra.eta.dom() != GradedSpace::unit() || algebra.eta.cod() != h) throw TypeMismatch(name + ": bad unit type");
  if (coalgebra.carrier != h || coalgebra.delta.cod() != hh) throw TypeMismatch(name + ": bad coproduct type");
  if (coalgebra.eps.dom() != h || coalgebra.eps.cod() != GradedSpace::unit()) throw TypeMismatch(name + ": bad counit type");
  if (antipode && (antipode->dom() != h || antipode->cod() != h)) throw TypeMismatch(name + ": bad antipode type");
  if (antipode && !antipode_inv) antipode_inv = invert(*antipode);
}

const Mor& HopfData::S() const {
  if (!antipode) throw Error(name + " has no antipode");
  return *antipode;
}

const Mor& HopfData::S_inv() const {
  if (!antipode_inv) throw NotInvertible(name + ": antipode is not invertible");
  return *antipode_inv;
}

Report check_algebra(const AlgebraData& a, const std::string& subject) {
  Report rep("algebra");
  const Mor i = id(a.carrier);
  add_eq(rep, "associativity", subject, compose(a.m, tensor(a.m, i)), compose(a.m, tensor(i, a.m)));
  add_eq(rep, "left-unit", subject, compose(a.m, tensor(a.eta, i)), i);
  add_eq(rep, "right-unit", subject, compose(a.m, tensor(i, a.eta)), i);
  return rep;
}

Report check_coalgebra(const CoalgebraData& c, const std::string& subject) {
  Report rep("coalgebra");
  const Mor i = id(c.carrier);
  add_eq(rep, "coassociativity", subject, compose(tensor(c.delta, i), c.delta), compose(tensor(i, c.delta), c.delta));
  add_eq(rep, "left-counit", subject, compose(tensor(c.eps, i), c.delta), i);
  add_eq(rep, "right-counit", subject, compose(tensor(i, c.eps), c.delta), i);
  return rep;
}

Report check_bialgebra(const BraidingSpec& spec, const HopfData& h) {
  Report rep("bialgebra");
  const GradedSpace& H = h.carrier();
  const Mor i = id(H);
  add_eq(rep, "bialgebra.delta-m", h.name, compose(h.delta(), h.m()),
         compose(tensor(h.m(), h.m()), tensor(i, braid(spec, H, H), i), tensor(h.delta(), h.delta())));
  add_eq(rep, "bialgebra.delta-eta", h.name, compose(h.delta(), h.eta()), tensor(h.eta(), h.eta()));
  add_eq(rep, "bialgebra.eps-m", h.name, compose(h.eps(), h.m()), tensor(h.eps(), h.eps()));
  add_eq(rep, "bialgebra.eps-eta", h.name, compose(h.eps(), h.eta()), id(GradedSpace::unit()));
  return rep;
}

Report check_antipode(const HopfData& h) {
  Report rep("antipode");
  if (!h.antipode) {
    rep.add(fact("antipode.left", h.name, false, "no antipode"));
    rep.add(fact("antipode.right", h.name, false, "no antipode"));
    return rep;
  }
  const Mor i = id(h.carrier());
  const Mor unit = compose(h.eta(), h.eps());
  add_eq(rep, "antipode.left", h.name, compose(h.m(), tensor(h.S(), i), h.delta()), unit);
  add_eq(rep, "antipode.right", h.name, compose(h.m(), tensor(i, h.S()), h.delta()), unit);
  if (h.antipode_inv) {
    Stopwatch sw;
    CheckRecord a = equate("antipode.inverse", h.name, compose(h.S(), *h.antipode_inv), i);
    CheckRecord b = equate("antipode.inverse", h.name, compose(*h.antipode_inv, h.S()), i);
    rep.add(timed(a.pass ? b : a, sw));
  }
  return rep;
}

Report hopf_suite(const BraidingSpec& spec, const HopfData& h) {
  Report rep("hopf suite: " + h.name);
  rep.merge(check_algebra(h.algebra, h.name));
  rep.merge(check_coalgebra(h.coalgebra, h.name));
  rep.merge(check_bialgebra(spec, h));
  rep.merge(check_antipode(h));
  return rep;
}

AlgebraData tensor_algebra(const BraidingSpec& spec, const AlgebraData& a, const AlgebraData& b) {
  Mor m = compose(tensor(a.m, b.m), tensor(id(a.carrier), braid(spec, b.carrier, a.carrier), id(b.carrier)));
  return {tensor_space(a.carrier, b.carrier), std::move(m), tensor(a.eta, b.eta)};
}

CoalgebraData tensor_coalgebra(const BraidingSpec& spec, const CoalgebraData& a, const CoalgebraData& b) {
  Mor d = compose(tensor(id(a.carrier), braid(spec, a.carrier, b.carrier), id(b.carrier)), tensor(a.delta, b.delta));
  return {tensor_space(a.carrier, b.carrier), std::move(d), tensor(a.eps, b.eps)};
}

AlgebraData unit_algebra() {
  GradedSpace u = GradedSpace::unit();
  return {u, id(u), id(u)};
}

CoalgebraData unit_coalgebra() {
  GradedSpace u = GradedSpace::unit();
  return {u, id(u), id(u)};
}

Mor convolve(const ConvolutionContext& ctx, const Mor& f, const Mor& g) {
  return compose(ctx.target.m, tensor(f, g), ctx.source.delta);
}

Mor convolution_unit(const ConvolutionContext& ctx) { return compose(ctx.target.eta, ctx.source.eps); }

std::optional<Mor> convolution_inverse(const ConvolutionContext& ctx, const Mor& f) {
  const GradedSpace& X = ctx.source.carrier;
  const GradedSpace& Y = ctx.target.carrier;
  if (f.dom() != X || f.cod() != Y) throw TypeMismatch("convolution_inverse: " + f.signature() + " outside Hom(" + X.name() + ", " + Y.name() + ")");
  const std::size_t nx = X.dim(), ny = Y.dim();

  // unknowns g[a, b] with deg a == deg b
  std::vector<long> unknown(nx * ny, -1);
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t b = 0; b < nx; ++b) {
    for (std::size_t a = 0; a < ny; ++a) {
      if (Y.degree(a) == X.degree(b)) {
        unknown[a * nx + b] = static_cast<long>(slots.size());
        slots.emplace_back(a, b);
      }
    }
  }

  // (f * g)(x) = sum over Delta(x) = c x1 (x) x2 of m(f(x1) (x) g(x2)).
  const SparseMatrix& delta = ctx.source.delta.matrix();
  const SparseMatrix& fm = f.matrix();
  const SparseMatrix& mm = ctx.target.m.matrix();
  const Mor unit = convolution_unit(ctx);
  std::vector<kernels::SparseRow> rows;
  std::vector<CycScalar> rhs;
  for (std::size_t x = 0; x < nx; ++x) {
    std::map<std::uint32_t, std::map<std::uint32_t, CycScalar>> eqs;  // row r -> unknown -> coeff
    for (const auto& de : delta.column(x)) {
      const std::size_t x1 = de.row / nx, x2 = de.row % nx;
      for (const auto& fe : fm.column(x1)) {
        const CycScalar cf = de.value * fe.value;
        for (std::size_t a = 0; a < ny; ++a) {
          long u = unknown[a * nx + x2];
          if (u < 0) continue;
          for (const auto& me : mm.column(fe.row * ny + a)) {
            eqs[me.row][static_cast<std::uint32_t>(u)] += cf * me.value;
          }
        }
      }
    }
    for (const auto& ue : unit.matrix().column(x)) eqs[ue.row];
    for (auto& [r, coeffs] : eqs) {
      kernels::SparseRow row;
      for (auto& [u, c] : coeffs) {
        if (!c.is_zero()) row.emplace_back(u, std::move(c));
      }
      rows.push_back(std::move(row));
      rhs.push_back(unit.matrix().at(r, x));
    }
  }
  auto sol = kernels::solve(std::move(rows), std::move(rhs), slots.size());
  if (!sol) return std::nullopt;
  SparseMatrix g(ny, nx);
  for (std::size_t k = 0; k < slots.size(); ++k) g.add(slots[k].first, slots[k].second, (*sol)[k]);
  Mor gm(X, Y, std::move(g));
  if (convolve(ctx, f, gm) != unit || convolve(ctx, gm, f) != unit) return std::nullopt;
  return gm;
}

std::optional<Mor> synthesize_antipode(const HopfData& h) {
  return convolution_inverse({h.coalgebra, h.algebra}, id(h.carrier()));
}

Report check_quasitriangular(const BraidingSpec& spec, const HopfData& h, const RMatrixData& r, const Mor& delta_bar,
                             const std::string& subject) {
  Report rep("quasi-triangular");
  const GradedSpace& H = h.carrier();
  const Mor i = id(H);
  const Mor& R = r.r;
  const Mor& m = h.m();

  CoalgebraData bar{H, delta_bar, h.eps()};
  Report cb = check_coalgebra(bar, subject);
  CheckRecord rec = fact("qt.delta-bar-coalgebra", subject, cb.all_pass());
  for (const auto& x : cb.records()) {
    if (!x.pass) {
      rec.note = x.check;
      rec.witnesses = x.witnesses;
      break;
    }
  }
  rep.add(rec);

  {
    Stopwatch sw;
    ConvolutionContext ctx{unit_coalgebra(), tensor_algebra(spec, h.algebra, h.algebra)};
    std::optional<Mor> inv = r.r_inv;
    if (!inv) inv = convolution_inverse(ctx, R);
    bool ok = inv.has_value() && convolve(ctx, R, *inv) == convolution_unit(ctx) &&
              convolve(ctx, *inv, R) == convolution_unit(ctx);
    rep.add(timed(fact("qt.R-invertible", subject, ok), sw));
  }

  add_eq(rep, "QT1", subject, compose(tensor(delta_bar, i), R), compose(tensor(i, i, m), tensor(i, R, i), R));
  add_eq(rep, "QT2", subject, compose(tensor(i, h.delta()), R), compose(tensor(m, i, i), tensor(i, R, i), R));
  const Mor mc = compose(tensor(m, m), tensor(i, braid(spec, H, H), i));
  add_eq(rep, "QT3", subject, compose(mc, tensor(delta_bar, R)), compose(mc, tensor(R, h.delta())));
  return rep;
}

Report check_skew_pairing(const BraidingSpec& spec, const Mor& tau, const HopfData& h, const HopfData& a,
                          const std::string& subject) {
  Report rep("skew pairing");
  const GradedSpace& H = h.carrier();
  const GradedSpace& A = a.carrier();
  if (tau.dom() != tensor_space(H, A) || !tau.cod().is_unit()) {
    throw TypeMismatch("skew pairing must be " + H.name() + "⊗" + A.name() + " → I, got " + tau.signature());
  }
  const Mor i = id(H), j = id(A);
  add_eq(rep, "SP1", subject, compose(tau, tensor(h.m(), j)), compose(tau, tensor(i, tau, j), tensor(i, i, a.delta())));
  add_eq(rep, "SP2", subject, compose(tau, tensor(i, a.m())),
         compose(tensor(tau, tau), tensor(i, braid(spec, H, A), j), tensor(h.delta(), j, j)));
  add_eq(rep, "SP3", subject, compose(tau, tensor(i, a.eta())), h.eps());
  add_eq(rep, "SP4", subject, compose(tau, tensor(h.eta(), j)), a.eps());
  return rep;
}

std::optional<Mor> pairing_inverse(const BraidingSpec& spec, const Mor& tau, const HopfData& h, const HopfData& a) {
  ConvolutionContext ctx{tensor_coalgebra(spec, h.coalgebra, a.coalgebra), unit_algebra()};
  return convolution_inverse(ctx, tau);
}

Report check_symmetric_pairing(const BraidingSpec& spec, const Mor& tau, const GradedSpace& v, const GradedSpace& w,
                               const std::string& subject) {
  Report rep("symmetric pairing");
  Stopwatch sw;
  rep.add(timed(symmetric_pairing_identity(spec, tau, v, w, v, "symmetric-pairing.U=V", subject), sw));
  Stopwatch sw2;
  rep.add(timed(symmetric_pairing_identity(spec, tau, v, w, w, "symmetric-pairing.U=W", subject), sw2));
  return rep;
}

Report check_module_algebra(const BraidingSpec& spec, const HopfData& h, const AlgebraData& r, const Mor& act,
                            const std::string& subject) {
  Report rep("left module algebra");
  const GradedSpace& H = h.carrier();
  const GradedSpace& R = r.carrier;
  if (act.dom() != tensor_space(H, R) || act.cod() != R) {
    throw TypeMismatch("left action must be " + H.name() + "⊗" + R.name() + " → " + R.name() + ", got " + act.signature());
  }
  const Mor i = id(H), k = id(R);
  add_eq(rep, "module.assoc", subject, compose(act, tensor(h.m(), k)), compose(act, tensor(i, act)));
  add_eq(rep, "module.unit", subject, compose(act, tensor(h.eta(), k)), k);
  add_eq(rep, "module-algebra.mult", subject, compose(act, tensor(i, r.m)),
         compose(r.m, tensor(act, act), tensor(i, braid(spec, H, R), k), tensor(h.delta(), k, k)));
  add_eq(rep, "module-algebra.unit", subject, compose(act, tensor(i, r.eta)), compose(r.eta, h.eps()));
  return rep;
}

Report check_right_module_algebra(const BraidingSpec& spec, const HopfData& h, const AlgebraData& r, const Mor& act,
                                  const std::string& subject) {
  Report rep("right module algebra");
  const GradedSpace& H = h.carrier();
  const GradedSpace& R = r.carrier;
  if (act.dom() != tensor_space(R, H) || act.cod() != R) {
    throw TypeMismatch("right action must be " + R.name() + "⊗" + H.name() + " → " + R.name() + ", got " + act.signature());
  }
  const Mor i = id(H), k = id(R);
  add_eq(rep, "module.assoc", subject, compose(act, tensor(k, h.m())), compose(act, tensor(act, i)));
  add_eq(rep, "module.unit", subject, compose(act, tensor(k, h.eta())), k);
  add_eq(rep, "module-algebra.mult", subject, compose(act, tensor(r.m, i)),
         compose(r.m, tensor(act, act), tensor(k, braid(spec, R, H), i), tensor(k, k, h.delta())));
  add_eq(rep, "module-algebra.unit", subject, compose(act, tensor(r.eta, i)), compose(r.eta, h.eps()));
  return rep;
}

std::vector<Mor> single_sign_mutations(const Mor& f) {
  std::vector<Mor> out;
  const SparseMatrix& m = f.matrix();
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) {
      SparseMatrix c = m;
      c.add(e.row, j, CycScalar(-2) * e.value);
      out.emplace_back(f.dom(), f.cod(), std::move(c));
    }
  }
  return out;
}

std::vector<MutationOutcome> mutation_test(const BraidingSpec& spec, const HopfData& h) {
  std::vector<MutationOutcome> out;
  auto run = [&](const std::string& which, const HopfData& mutated, std::size_t index) {
    Report rep = hopf_suite(spec, mutated);
    MutationOutcome o{which, index, !rep.all_pass(), {}};
    for (const auto& r : rep.records()) {
      if (!r.pass) {
        o.witnesses = r.witnesses;
        if (o.witnesses.empty()) o.witnesses.push_back({r.check, "", ""});
        else o.witnesses[0].where = r.check + " at " + o.witnesses[0].where;
        break;
      }
    }
    out.push_back(std::move(o));
  };
  auto mutants = single_sign_mutations(h.m());
  for (std::size_t k = 0; k < mutants.size(); ++k)
    run("m", HopfData(h.name, mutants[k], h.eta(), h.delta(), h.eps(), h.antipode), k);
  mutants = single_sign_mutations(h.eta());
  for (std::size_t k = 0; k < mutants.size(); ++k)
    run("eta", HopfData(h.name, h.m(), mutants[k], h.delta(), h.eps(), h.antipode), k);
  mutants = single_sign_mutations(h.delta());
  for (std::size_t k = 0; k < mutants.size(); ++k)
    run("delta", HopfData(h.name, h.m(), h.eta(), mutants[k], h.eps(), h.antipode), k);
  mutants = single_sign_mutations(h.eps());
  for (std::size_t k = 0; k < mutants.size(); ++k)
    run("eps", HopfData(h.name, h.m(), h.eta(), h.delta(), mutants[k], h.antipode), k);
  if (h.antipode) {
    mutants = single_sign_mutations(h.S());
    for (std::size_t k = 0; k < mutants.size(); ++k)
      run("S", HopfData(h.name, h.m(), h.eta(), h.delta(), h.eps(), mutants[k]), k);
  }
  return out;
}

}  // namespace braidkit
