#include <doctest.h>

#include "braidkit/catalog.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/double.hpp"
#include "braidkit/dsl.hpp"

using namespace braidkit;
using namespace braidkit::dsl;

namespace {

std::string fixture(const std::string& name) { return read_file(std::string(BRAIDKIT_FIXTURE_DIR) + "/" + name); }

DslError::Kind error_kind(const std::string& src, const Environment& env) {
  try {
    elaborate(src, env);
  } catch (const DslError& e) {
    return e.kind;
  }
  FAIL("expected a DslError for " << src);
  return DslError::Kind::Syntax;
}

}  // namespace

TEST_CASE("parse shapes") {
  MorExpr t = parse("id(H) * d(H) * id(Hs)");
  CHECK(t.kind == MorExpr::Kind::Tensor);
  CHECK(t.children.size() == 3);
  CHECK(t.children[1].name == "d");

  MorExpr s = parse("cm(H)*id(F) ; id(H)*C(H,F) ; m(H)*id(F)");
  CHECK(s.kind == MorExpr::Kind::Seq);
  REQUIRE(s.children.size() == 3);
  CHECK(s.children[1].kind == MorExpr::Kind::Tensor);
  CHECK(s.children[1].children[1].args.size() == 2);

  MorExpr u = parse("id(I)");
  CHECK(u.args[0].factors.empty());
  CHECK(parse("id(H*Hs)").args[0].factors.size() == 2);
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse("id(H ;");
    FAIL("expected syntax error");
  } catch (const DslError& e) {
    CHECK(e.kind == DslError::Kind::Syntax);
    CHECK(e.span.line == 1);
    CHECK(e.span.column == 6);
    CHECK(e.span.offset == 5);
  }
  try {
    parse("id(H) ;\n  m(H, H)");
    FAIL("expected arity error");
  } catch (const DslError& e) {
    CHECK(e.span.line == 2);
    CHECK(e.span.column == 3);
  }
  CHECK_THROWS_AS(parse(""), DslError);
  CHECK_THROWS_AS(parse("id(H) id(H)"), DslError);
  CHECK_THROWS_AS(parse("S"), DslError);
  CHECK_THROWS_AS(parse("id(H) $ id(H)"), DslError);
  CHECK_THROWS_AS(parse("(id(H)"), DslError);
}

TEST_CASE("print then parse round trip") {
  const char* sources[] = {
      "id(H) * d(H) * id(Hs)",
      "cm(H)*id(F) ; id(H)*C(H,F) ; m(H)*id(F)",
      "(f ; g) * k ; (d(H) ; e)",
      "a ; (g ; k)",
      "a * (g * k) * id(I)",
      "C(H*Hs, R) ; Cinv(R, H*Hs)",
      "# comment\nlambda * rho ;\n  id(H) * d(H) * id(Hs)  # trailing\n",
  };
  for (const char* src : sources) {
    MorExpr e = parse(src);
    std::string p = print(e);
    INFO(src << " -> " << p);
    CHECK(parse(p) == e);
    CHECK(print(parse(p)) == p);
  }
  CHECK(print(parse("a;(f;g)")) == "a ; (f ; g)");
  CHECK(print(parse("(a;f);g")) == "(a ; f) ; g");
  CHECK(print(parse("((a))")) == "a");
}

TEST_CASE("elaboration is compositional") {
  Environment env = super_line_env();
  const BraidingSpec& sp = env.spec();
  const HopfData& h = *env.hopf("H");
  const GradedSpace& H = h.carrier();
  CHECK(elaborate("cm(H) ; m(H)", env) == compose(h.m(), h.delta()));
  CHECK(elaborate("cm(H) * S(H)", env) == tensor(h.delta(), h.S()));
  CHECK(elaborate("C(H, H) ; Cinv(H, H)", env) == id(tensor_space(H, H)));
  CHECK(elaborate("u(H) ; cu(H)", env) == id(GradedSpace::unit()));
  CHECK(elaborate("id(H*Hs)", env) == id(tensor_space(H, env.hopf("Hs")->carrier())));
  CHECK(elaborate("Sinv(H) ; S(H)", env) == id(H));
  CHECK(elaborate("id(I) * id(H)", env) == id(H));
  // a;b = b after a, a*b = tensor
  for (const char* a : {"cm(H)", "C(H, H)", "S(H) * id(H)"})
    for (const char* b : {"m(H)", "C(H, H) ; m(H)"}) {
      std::string src = std::string(a) + " ; " + b;
      if (elaborate(a, env).cod() != elaborate(b, env).dom()) continue;
      CHECK(elaborate(src, env) == compose(elaborate(b, env), elaborate(a, env)));
      CHECK(elaborate(std::string("(") + a + ") * (" + b + ")", env) ==
            tensor(elaborate(a, env), elaborate(b, env)));
    }
  // d on a matched pair gives 1
  Mor d = elaborate("d(H)", env);
  CHECK(d.matrix().at(0, 0) == CycScalar(1));
  CHECK(d.matrix().at(0, 3) == CycScalar(1));
  CHECK(d.matrix().at(0, 1).is_zero());
  (void)sp;
}

TEST_CASE("elaboration errors") {
  Environment env = super_line_env();
  CHECK(error_kind("nope", env) == DslError::Kind::Unbound);
  CHECK(error_kind("m(Q)", env) == DslError::Kind::Unbound);
  CHECK(error_kind("H", env) == DslError::Kind::Type);
  CHECK(error_kind("m(lambda)", env) == DslError::Kind::Type);
  try {
    elaborate("m(H) ;\n   cm(H) * id(H)", env);
    FAIL("expected type error");
  } catch (const DslError& e) {
    CHECK(e.kind == DslError::Kind::Type);
    CHECK(e.span.line == 2);
    CHECK(e.span.column == 4);
    CHECK(e.message.find("expects A2⊗A2") != std::string::npos);
    CHECK(e.message.find("receives A2") != std::string::npos);
  }
  CHECK_THROWS_AS(equate("m(H)", "id(H)", env), DslError);
}

TEST_CASE("environment names are unique") {
  Environment env = super_line_env();
  CHECK_THROWS_AS(env.bind("H", GradedSpace::unit()), Error);
  CHECK_THROWS_AS(env.bind("m", GradedSpace::unit()), Error);
  CHECK_THROWS_AS(named_env("nope"), ParseError);
  CHECK(env_directive(fixture("qt1_lhs.mor")) == "d_superline");
  CHECK(env_directive("id(H)").empty());
}

TEST_CASE("swapped C and Cinv differ off the symmetric case") {
  CatalogEntry a = anyonic_line(3);
  Environment env(a.spec, "anyonic3");
  env.bind("H", a.hopf);
  CheckRecord r = equate("C(H, H)", "Cinv(H, H)", env);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());
  CHECK(equate("C(H, H) ; C(H, H)", "id(H*H)", env).pass == false);
  CHECK(equate("C(H, H) ; Cinv(H, H)", "id(H*H)", env).pass);
}

TEST_CASE("fixtures elaborate to the programmatic constructions") {
  Environment env = super_line_env();
  CatalogEntry s = super_line();
  HatContext c = make_hat_context(*s.spec, s.hopf);
  DualityMaps dm = duality_maps(c, s.hopf.algebra, adjoint_action(*s.spec, s.hopf));

  CHECK(elaborate(fixture("lambda.mor"), env) == lambda(c));
  CHECK(elaborate(fixture("rho.mor"), env) == rho(c));
  auto [lhs, rhs] = lambda_rho_relation(c);
  CHECK(elaborate(fixture("exchange_lhs.mor"), env) == lhs);
  CHECK(elaborate(fixture("exchange_rhs.mor"), env) == rhs);
  CHECK(elaborate(fixture("exchange_rhs_mutated.mor"), env) == lambda_rho_relation(c, true).second);
  CHECK(elaborate(fixture("phi.mor"), env) == dm.phi);
  CHECK(elaborate(fixture("xi.mor"), env) == dm.xi);
  CHECK(elaborate(fixture("duality_Phi.mor"), env) == dm.Phi);
  CHECK(elaborate(fixture("snake_left.mor"), env) == id(s.hopf.carrier()));
  CHECK(elaborate(fixture("snake_right.mor"), env) == id(c.hs.carrier()));

  CHECK(equate(fixture("exchange_lhs.mor"), fixture("exchange_rhs.mor"), env).pass);
}

TEST_CASE("quasi-triangularity fixtures on D(super line)") {
  Environment env = d_superline_env();
  CatalogEntry s = super_line();
  DrinfeldDouble d = drinfeld_double(*s.spec, s.hopf);
  const HopfData& D = d.dcp.hopf;
  const Mor i = id(D.carrier());
  const Mor& R = d.rmatrix.r;
  const Mor dcop = compose(braid(*s.spec, D.carrier(), D.carrier()), D.delta());
  const Mor mc = compose(tensor(D.m(), D.m()), tensor(i, braid(*s.spec, D.carrier(), D.carrier()), i));

  CHECK(elaborate(fixture("qt1_lhs.mor"), env) == compose(tensor(dcop, i), R));
  CHECK(elaborate(fixture("qt1_rhs.mor"), env) == compose(tensor(i, i, D.m()), tensor(i, R, i), R));
  CHECK(elaborate(fixture("qt2_lhs.mor"), env) == compose(tensor(i, D.delta()), R));
  CHECK(elaborate(fixture("qt2_rhs.mor"), env) == compose(tensor(D.m(), i, i), tensor(i, R, i), R));
  CHECK(elaborate(fixture("qt3_lhs.mor"), env) == compose(mc, tensor(dcop, R)));
  CHECK(elaborate(fixture("qt3_rhs.mor"), env) == compose(mc, tensor(R, D.delta())));
  for (int k = 1; k <= 3; ++k) {
    std::string n = "qt" + std::to_string(k);
    CHECK(equate(fixture(n + "_lhs.mor"), fixture(n + "_rhs.mor"), env, n).pass);
  }
}
