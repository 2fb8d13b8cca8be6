// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "braidkit/catalog.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/double.hpp"
#include "braidkit/dsl.hpp"
#include "braidkit/error.hpp"
#include "braidkit/kernels.hpp"

using namespace braidkit;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> problems;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      problems.push_back(what);
    }
  }
};

std::string first_failure(const Report& r) {
  for (const auto& c : r.records())
    if (!c.pass) return c.check + " on " + c.subject;
  return "";
}

// Brute-force expansion of (x + y)^k with y x = zeta_n x y.
CycScalar brute_binomial(int n, int k, int j) {
  CycScalar total(0);
  for (unsigned w = 0; w < (1u << k); ++w) {
    int xs = 0, inversions = 0, ys_seen = 0;
    for (int p = 0; p < k; ++p) {
      if (w & (1u << p)) {
        ++xs;
        inversions += ys_seen;
      } else {
        ++ys_seen;
      }
    }
    if (xs == j) total += CycScalar::root_of_unity(n, inversions);
  }
  return total;
}

// Textbook D(Z_n) on basis delta_x (x) g^a, index x*n + a.
struct ClassicalDouble {
  SparseMatrix m, eta, delta, eps, S, R;
};

ClassicalDouble classical_double(int n) {
  const auto N = static_cast<std::size_t>(n);
  const std::size_t d = N * N;
  auto ix = [&](int x, int a) { return static_cast<std::size_t>(((x % n + n) % n) * n + ((a % n + n) % n)); };
  ClassicalDouble c{SparseMatrix(d, d * d), SparseMatrix(d, 1), SparseMatrix(d * d, d),
                    SparseMatrix(1, d),     SparseMatrix(d, d), SparseMatrix(d * d, 1)};
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) c.m.add(ix(x, a + b), ix(x, a) * d + ix(x, b), CycScalar(1));
      for (int y = 0; y < n; ++y) c.delta.add(ix(y, a) * d + ix(x - y, a), ix(x, a), CycScalar(1));
      if (x == 0) c.eps.add(0, ix(x, a), CycScalar(1));
      c.S.add(ix(-x, -a), ix(x, a), CycScalar(1));
    }
  for (int x = 0; x < n; ++x) c.eta.add(ix(x, 0), 0, CycScalar(1));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) c.R.add(ix(y, x) * d + ix(x, 0), 0, CycScalar(1));
  return c;
}

std::string fixture(const std::string& name) {
  return dsl::read_file(std::string(BRAIDKIT_FIXTURE_DIR) + "/" + name);
}

Outcome symmetric_evaluation() {
  Outcome o;
  std::vector<CatalogEntry> entries = {super_line(), sweedler()};
  for (int n = 1; n <= 6; ++n) {
    entries.push_back(group_algebra(n));
    entries.push_back(function_algebra(n));
  }
  for (int n = 1; n <= 4; ++n) entries.push_back(underline_group_algebra(n));
  for (int n = 2; n <= 4; ++n) entries.push_back(anyonic_line_unbraided(n));
  for (int n = 2; n <= 6; ++n) entries.push_back(anyonic_line(n));
  for (const auto& e : entries) {
    SymmetricEvaluation s = check_symmetric_evaluation(*e.spec, e.hopf.carrier());
    o.require(s.consistent(), e.name + ": the six conditions disagree");
  }
  for (int n = 2; n <= 6; ++n) {
    CatalogEntry e = anyonic_line(n);
    SymmetricEvaluation s = check_symmetric_evaluation(*e.spec, e.hopf.carrier());
    // oracle: xi (x) xi braids by zeta_n, so the square is the identity iff zeta_n^2 = 1
    const bool oracle = CycScalar::root_of_unity(n, 2) == CycScalar(1);
    o.require(oracle == (n <= 2), "oracle disagrees with n <= 2 at n = " + std::to_string(n));
    o.require(s.verdict == oracle, e.name + ": verdict " + (s.verdict ? "symmetric" : "not symmetric"));
  }
  o.summary = std::to_string(entries.size()) + " entries consistent; anyonic_line(n) symmetric exactly for n = 2";
  return o;
}

Outcome hopf_suites() {
  Outcome o;
  std::vector<CatalogEntry> entries = {super_line()};
  for (int n = 1; n <= 6; ++n) {
    entries.push_back(group_algebra(n));
    entries.push_back(function_algebra(n));
  }
  for (int n = 2; n <= 5; ++n) entries.push_back(anyonic_line(n));
  for (int n = 1; n <= 4; ++n) entries.push_back(underline_group_algebra(n));
  std::size_t mutants = 0;
  for (const auto& e : entries) {
    Report r = hopf_suite(*e.spec, e.hopf);
    o.require(r.all_pass(), e.name + ": " + first_failure(r));
    for (const auto& m : mutation_test(*e.spec, e.hopf)) {
      ++mutants;
      o.require(m.detected && !m.witnesses.empty(),
                e.name + ": mutation of " + m.map + " #" + std::to_string(m.index) + " undetected or without witness");
    }
  }
  o.summary = std::to_string(entries.size()) + " Hopf algebras, " + std::to_string(mutants) + " mutants all caught";
  return o;
}

Outcome anyonic_binomials() {
  Outcome o;
  std::size_t coefficients = 0;
  for (int n = 2; n <= 5; ++n) {
    CatalogEntry e = anyonic_line(n);
    const auto N = static_cast<std::size_t>(n);
    const SparseMatrix& d = e.hopf.delta().matrix();
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
          CycScalar want = a + b == k ? brute_binomial(n, k, a) : CycScalar(0);
          ++coefficients;
          o.require(d.at(static_cast<std::size_t>(a) * N + static_cast<std::size_t>(b), static_cast<std::size_t>(k)) == want,
                    e.name + ": coefficient of xi^" + std::to_string(a) + "⊗xi^" + std::to_string(b) + " in Δ(xi^" +
                        std::to_string(k) + ")");
        }
    for (int j = 1; j < n; ++j)
      o.require(brute_binomial(n, n, j).is_zero(), e.name + ": middle term " + std::to_string(j) + " of Δ(xi^n)");
    // Delta(xi)^n computed in the braided tensor algebra
    AlgebraData hh = tensor_algebra(*e.spec, e.hopf.algebra, e.hopf.algebra);
    Mor p = e.hopf.delta();
    for (int k = 1; k < n; ++k) p = compose(hh.m, tensor(p, e.hopf.delta()));
    std::size_t col = 0;
    for (int k = 0; k < n; ++k) col = col * N + 1;
    o.require(p.matrix().column(col).empty(), e.name + ": Δ(xi)^n does not vanish");
  }
  o.summary = std::to_string(coefficients) + " coefficients match; Δ(xi)^n = 0 for n = 2..5";
  return o;
}

Outcome duality() {
  Outcome o;
  CatalogEntry s = super_line();
  CatalogEntry u = underline_group_algebra(2);
  const HopfData& h = s.hopf;
  struct Triple {
    std::string name;
    const CatalogEntry* base;
    AlgebraData r;
    const HopfData* h;
    Mor act;
  };
  std::vector<Triple> triples = {
      {"(super, super, trivial)", &s, h.algebra, &h, trivial_action(h, h.carrier())},
      {"(super, super, adjoint)", &s, h.algebra, &h, adjoint_action(*s.spec, h)},
      {"(C[ξ], underline CZ_2, trivial)", &u, h.algebra, &u.hopf, trivial_action(u.hopf, h.carrier())},
  };
  for (const auto& t : triples) {
    const BraidingSpec& spec = *t.base->spec;
    Report r = verify_duality(spec, t.r, *t.h, t.act, t.name);
    for (const char* k : {"duality.PhiPsi", "duality.PsiPhi", "duality.Phi-multiplicative", "duality.Phi-unital"})
      o.require(r.passed(k), t.name + ": " + k);
    o.require(r.all_pass(), t.name + ": " + first_failure(r));
    HatContext c = make_hat_context(spec, *t.h);
    DualityMaps d = duality_maps(c, t.r, t.act);
    o.require(d.rhh.carrier.dim() == 8, t.name + ": total dimension " + std::to_string(d.rhh.carrier.dim()));
    EndIso e = end_iso(c);
    o.require(e.report.all_pass(), t.name + ": end_iso " + first_failure(e.report));
  }
  o.summary = "three triples of total dimension 8: ΦΨ = id, ΨΦ = id, Φ unital algebra map, end_iso";
  return o;
}

Outcome lambda_rho() {
  Outcome o;
  std::vector<CatalogEntry> entries = {super_line()};
  for (int n = 1; n <= 4; ++n) entries.push_back(group_algebra(n));
  for (const auto& e : entries) {
    HatContext c = make_hat_context(*e.spec, e.hopf);
    Report r = check_lambda_rho(c);
    for (const char* k : {"lambda.multiplicative", "rho.anti-multiplicative"}) o.require(r.passed(k), e.name + ": " + k);
    o.require(r.all_pass(), e.name + ": " + first_failure(r));
    Report x = check_lambda_rho_relation(c);
    o.require(x.passed("lambda-rho.exchange"), e.name + ": exchange relation");
    Mor l = lambda(c);
    Mor li = invert_lambda(c);
    o.require(compose(l, li) == id(l.cod()), e.name + ": λλ⁻¹ ≠ id");
    o.require(compose(li, l) == id(l.dom()), e.name + ": λ⁻¹λ ≠ id");
  }
  o.summary = "super line and kZ_n, n = 1..4";
  return o;
}

Outcome quasitriangular_doubles() {
  Outcome o;
  std::vector<CatalogEntry> entries = {super_line()};
  for (int n = 1; n <= 4; ++n) entries.push_back(group_algebra(n));
  for (const auto& e : entries) {
    DrinfeldDouble d = drinfeld_double(*e.spec, e.hopf);
    Report r = double_report(*e.spec, e.hopf, d, true);
    for (const char* k : {"SP1", "SP2", "SP3", "SP4", "symmetric-pairing.U=V", "symmetric-pairing.U=W", "QT1", "QT2",
                          "QT3", "tau-bar.equals-tau(S⊗id)"})
      o.require(r.passed(k), "D(" + e.name + "): " + k);
    o.require(r.all_pass(), "D(" + e.name + "): " + first_failure(r));
  }
  o.summary = "D(super line), D(kZ_n) n = 1..4 with Δ^cop";
  return o;
}

Outcome bialgebra_criterion() {
  Outcome o;
  std::ostringstream s;
  auto probe = [&](const CatalogEntry& e, bool expected) {
    HopfData A = op(*e.spec, dual_hopf(*e.spec, e.hopf));
    Mor tau = compose(ev(e.hopf.carrier()), braid(*e.spec, e.hopf.carrier(), A.carrier()));
    CheckRecord crit = check_bialgebra_criterion(*e.spec, A.carrier(), e.hopf.carrier());
    DoubleCrossProduct dcp = double_cross_product(*e.spec, A, e.hopf, {tau, std::nullopt}, false);
    const bool bialg = check_bialgebra(*e.spec, dcp.hopf).all_pass();
    o.require(crit.pass == expected, e.name + ": criterion " + (crit.pass ? "holds" : "fails"));
    o.require(bialg == crit.pass, e.name + ": check_bialgebra " + (bialg ? "passes" : "fails") + " against the criterion");
    s << e.name << " " << (bialg ? "bialgebra" : "not a bialgebra") << "; ";
  };
  probe(super_line(), true);
  probe(anyonic_line(3), false);
  probe(group_algebra(3), true);
  o.summary = s.str();
  o.summary.resize(o.summary.size() - 2);
  return o;
}

Outcome textbook_double() {
  Outcome o;
  CatalogEntry g = group_algebra(3);
  DrinfeldDouble d = drinfeld_double(*g.spec, g.hopf);
  ClassicalDouble c = classical_double(3);
  o.require(d.dcp.hopf.m().matrix() == c.m, "multiplication");
  o.require(d.dcp.hopf.eta().matrix() == c.eta, "unit");
  o.require(d.dcp.hopf.delta().matrix() == c.delta, "coproduct");
  o.require(d.dcp.hopf.eps().matrix() == c.eps, "counit");
  o.require(d.dcp.hopf.S().matrix() == c.S, "antipode");
  o.require(d.rmatrix.r.matrix() == c.R, "R-matrix");
  o.summary = "m, η, Δ, ε, S and R agree entrywise with k^{Z_3} ⋈ kZ_3";
  return o;
}

Outcome dsl_fixtures() {
  Outcome o;
  {
    dsl::Environment env = dsl::super_line_env();
    CatalogEntry s = super_line();
    HatContext c = make_hat_context(*s.spec, s.hopf);
    DualityMaps dm = duality_maps(c, s.hopf.algebra, adjoint_action(*s.spec, s.hopf));
    auto [lhs, rhs] = lambda_rho_relation(c);
    const std::vector<std::pair<std::string, Mor>> cases = {
        {"lambda.mor", lambda(c)}, {"rho.mor", rho(c)}, {"exchange_lhs.mor", lhs}, {"exchange_rhs.mor", rhs},
        {"phi.mor", dm.phi},       {"xi.mor", dm.xi},   {"duality_Phi.mor", dm.Phi}};
    for (const auto& [file, want] : cases) o.require(dsl::elaborate(fixture(file), env) == want, file);
    o.require(dsl::elaborate(fixture("exchange_rhs_mutated.mor"), env) != rhs, "mutated exchange is not detected");
  }
  {
    dsl::Environment env = dsl::d_superline_env();
    CatalogEntry s = super_line();
    DrinfeldDouble d = drinfeld_double(*s.spec, s.hopf);
    const HopfData& D = d.dcp.hopf;
    const GradedSpace& X = D.carrier();
    const Mor i = id(X);
    const Mor& R = d.rmatrix.r;
    const Mor dcop = compose(braid(*s.spec, X, X), D.delta());
    const Mor mc = compose(tensor(D.m(), D.m()), tensor(i, braid(*s.spec, X, X), i));
    const std::vector<std::pair<std::string, Mor>> cases = {
        {"qt1_lhs.mor", compose(tensor(dcop, i), R)},
        {"qt1_rhs.mor", compose(tensor(i, i, D.m()), tensor(i, R, i), R)},
        {"qt2_lhs.mor", compose(tensor(i, D.delta()), R)},
        {"qt2_rhs.mor", compose(tensor(D.m(), i, i), tensor(i, R, i), R)},
        {"qt3_lhs.mor", compose(mc, tensor(dcop, R))},
        {"qt3_rhs.mor", compose(mc, tensor(R, D.delta()))}};
    for (const auto& [file, want] : cases) o.require(dsl::elaborate(fixture(file), env) == want, file);
  }
  o.summary = "λ, ρ, exchange, φ, ξ, Φ and QT1-3 fixtures elaborate to the programmatic maps";
  return o;
}

}  // namespace

int main() {
  kernels::configure_threads_from_env();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"symmetric evaluation", symmetric_evaluation},
      {"hopf suites and mutations", hopf_suites},
      {"anyonic binomials", anyonic_binomials},
      {"duality isomorphism", duality},
      {"lambda and rho", lambda_rho},
      {"quasi-triangular doubles", quasitriangular_doubles},
      {"bialgebra criterion", bialgebra_criterion},
      {"textbook double D(kZ_3)", textbook_double},
      {"dsl fixtures", dsl_fixtures},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.problems.push_back(std::string("exception: ") + e.what());
    }
    std::string detail = o.summary;
    if (!o.pass) {
      detail = o.problems.front();
      if (o.problems.size() > 1) detail += " (+" + std::to_string(o.problems.size() - 1) + " more)";
      ++failed;
    }
    std::printf("%s [%zu] %s: %s\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
