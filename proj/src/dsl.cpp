#include "braidkit/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "braidkit/catalog.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/double.hpp"

namespace braidkit::dsl {

namespace {

std::string locate(const Span& s) { return std::to_string(s.line) + ":" + std::to_string(s.column); }

std::string kind_name(DslError::Kind k) {
  switch (k) {
    case DslError::Kind::Syntax:
      return "syntax error";
    case DslError::Kind::Unbound:
      return "unbound name";
    case DslError::Kind::Type:
      return "type error";
  }
  return "error";
}

int arity(const std::string& builtin) { return builtin == "C" || builtin == "Cinv" ? 2 : 1; }

bool is_builtin(const std::string& n) {
  const auto& b = builtins();
  return std::find(b.begin(), b.end(), n) != b.end();
}

enum class Tok { Name, LParen, RParen, Comma, Star, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::Name:
      return "'" + t.text + "'";
    case Tok::End:
      return "end of input";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  Span pos;
  auto advance = [&](char c) {
    ++pos.offset;
    if (c == '\n') {
      ++pos.line;
      pos.column = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++pos.column;
    }
  };
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(src[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(src[i++]);
      continue;
    }
    Span start = pos;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        name += src[i];
        advance(src[i++]);
      }
      out.push_back({Tok::Name, name, start});
      continue;
    }
    Tok k;
    switch (c) {
      case '(':
        k = Tok::LParen;
        break;
      case ')':
        k = Tok::RParen;
        break;
      case ',':
        k = Tok::Comma;
        break;
      case '*':
        k = Tok::Star;
        break;
      case ';':
        k = Tok::Semi;
        break;
      default:
        throw DslError(DslError::Kind::Syntax, start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), start});
    advance(src[i++]);
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  MorExpr parse_all() {
    if (peek().kind == Tok::End) throw DslError(DslError::Kind::Syntax, peek().span, "empty expression");
    MorExpr e = seq();
    if (peek().kind != Tok::End) {
      throw DslError(DslError::Kind::Syntax, peek().span, "expected ';', '*' or end of input, got " + describe(peek()));
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  Token take() { return toks_[pos_++]; }
  Token expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw DslError(DslError::Kind::Syntax, peek().span, "expected " + what + ", got " + describe(peek()));
    return take();
  }

  MorExpr seq() {
    MorExpr first = ten();
    if (peek().kind != Tok::Semi) return first;
    MorExpr s;
    s.kind = MorExpr::Kind::Seq;
    s.span = first.span;
    s.children.push_back(std::move(first));
    while (peek().kind == Tok::Semi) {
      take();
      s.children.push_back(ten());
    }
    return s;
  }

  MorExpr ten() {
    MorExpr first = atom();
    if (peek().kind != Tok::Star) return first;
    MorExpr t;
    t.kind = MorExpr::Kind::Tensor;
    t.span = first.span;
    t.children.push_back(std::move(first));
    while (peek().kind == Tok::Star) {
      take();
      t.children.push_back(atom());
    }
    return t;
  }

  MorExpr atom() {
    if (peek().kind == Tok::LParen) {
      take();
      MorExpr e = seq();
      expect(Tok::RParen, "')'");
      return e;
    }
    Token name = expect(Tok::Name, "a name, a builtin or '('");
    MorExpr e;
    e.span = name.span;
    e.name = name.text;
    if (!is_builtin(name.text)) {
      e.kind = MorExpr::Kind::Name;
      return e;
    }
    e.kind = MorExpr::Kind::Builtin;
    expect(Tok::LParen, "'(' after builtin " + name.text);
    e.args.push_back(space_arg());
    while (peek().kind == Tok::Comma) {
      take();
      e.args.push_back(space_arg());
    }
    expect(Tok::RParen, "')'");
    const int want = arity(name.text);
    if (static_cast<int>(e.args.size()) != want) {
      throw DslError(DslError::Kind::Syntax, name.span,
                     name.text + " takes " + std::to_string(want) + " argument" + (want == 1 ? "" : "s") + ", got " +
                         std::to_string(e.args.size()));
    }
    return e;
  }

  SpaceArg space_arg() {
    SpaceArg a;
    Token t = expect(Tok::Name, "a space name");
    auto push = [&](const Token& tok) {
      if (tok.text == "I") return;
      a.factors.push_back(tok.text);
      a.spans.push_back(tok.span);
    };
    push(t);
    while (peek().kind == Tok::Star) {
      take();
      push(expect(Tok::Name, "a space name"));
    }
    return a;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string print_space(const SpaceArg& a) {
  if (a.factors.empty()) return "I";
  std::string s;
  for (std::size_t k = 0; k < a.factors.size(); ++k) s += (k ? "*" : "") + a.factors[k];
  return s;
}

GradedSpace space_of(const SpaceArg& a, const Environment& env, const Span& where) {
  GradedSpace out = GradedSpace::unit();
  for (std::size_t k = 0; k < a.factors.size(); ++k) {
    const std::string& n = a.factors[k];
    const Span& s = k < a.spans.size() ? a.spans[k] : where;
    if (const GradedSpace* sp = env.space(n)) {
      out = tensor_space(out, *sp);
    } else if (const HopfData* h = env.hopf(n)) {
      out = tensor_space(out, h->carrier());
    } else if (env.mor(n)) {
      throw DslError(DslError::Kind::Type, s, "'" + n + "' is a morphism, expected a space");
    } else {
      throw DslError(DslError::Kind::Unbound, s, "'" + n + "' is not bound in environment " + env.name());
    }
  }
  return out;
}

const HopfData& hopf_of(const MorExpr& e, const Environment& env) {
  const SpaceArg& a = e.args.front();
  const Span& s = a.spans.empty() ? e.span : a.spans.front();
  if (a.factors.size() != 1) throw DslError(DslError::Kind::Type, s, e.name + " expects a single Hopf algebra name");
  const std::string& n = a.factors.front();
  if (const HopfData* h = env.hopf(n)) return *h;
  if (env.space(n) || env.mor(n)) {
    throw DslError(DslError::Kind::Type, s, "'" + n + "' is not a Hopf algebra");
  }
  throw DslError(DslError::Kind::Unbound, s, "'" + n + "' is not bound in environment " + env.name());
}

Mor elaborate_builtin(const MorExpr& e, const Environment& env) {
  const std::string& b = e.name;
  const BraidingSpec& spec = env.spec();
  if (b == "id") return id(space_of(e.args[0], env, e.span));
  if (b == "C") return braid(spec, space_of(e.args[0], env, e.span), space_of(e.args[1], env, e.span));
  if (b == "Cinv") return braid_inv(spec, space_of(e.args[0], env, e.span), space_of(e.args[1], env, e.span));
  if (b == "d") return ev(space_of(e.args[0], env, e.span));
  if (b == "b") return coev(space_of(e.args[0], env, e.span));
  const HopfData& h = hopf_of(e, env);
  if (b == "m") return h.m();
  if (b == "cm") return h.delta();
  if (b == "u") return h.eta();
  if (b == "cu") return h.eps();
  try {
    if (b == "S") return h.S();
    return h.S_inv();
  } catch (const Error& err) {
    throw DslError(DslError::Kind::Type, e.span, err.what());
  }
}

}  // namespace

DslError::DslError(Kind k, Span s, const std::string& msg)
    : Error(kind_name(k) + " at " + locate(s) + ": " + msg), kind(k), span(s), message(msg) {}

bool operator==(const MorExpr& a, const MorExpr& b) {
  if (a.kind != b.kind || a.name != b.name || a.args.size() != b.args.size() || a.children != b.children) return false;
  for (std::size_t k = 0; k < a.args.size(); ++k) {
    if (a.args[k].factors != b.args[k].factors) return false;
  }
  return true;
}

const std::vector<std::string>& builtins() {
  static const std::vector<std::string> names = {"id", "C", "Cinv", "d", "b", "m", "cm", "u", "cu", "S", "Sinv"};
  return names;
}

MorExpr parse(const std::string& source) { return Parser(lex(source)).parse_all(); }

std::string print(const MorExpr& e) {
  switch (e.kind) {
    case MorExpr::Kind::Name:
      return e.name;
    case MorExpr::Kind::Builtin: {
      std::string s = e.name + "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? ", " : "") + print_space(e.args[k]);
      return s + ")";
    }
    case MorExpr::Kind::Tensor: {
      std::string s;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const MorExpr& c = e.children[k];
        bool wrap = c.kind == MorExpr::Kind::Seq || c.kind == MorExpr::Kind::Tensor;
        s += (k ? " * " : "") + (wrap ? "(" + print(c) + ")" : print(c));
      }
      return s;
    }
    case MorExpr::Kind::Seq: {
      std::string s;
      for (std::size_t k = 0; k < e.children.size(); ++k) {
        const MorExpr& c = e.children[k];
        bool wrap = c.kind == MorExpr::Kind::Seq;
        s += (k ? " ; " : "") + (wrap ? "(" + print(c) + ")" : print(c));
      }
      return s;
    }
  }
  return {};
}

Environment::Environment(std::shared_ptr<const BraidingSpec> spec, std::string name)
    : spec_(std::move(spec)), name_(std::move(name)) {}

void Environment::claim(const std::string& n) {
  if (space(n) || mor(n) || hopf(n)) throw Error("environment " + name_ + ": '" + n + "' is already bound");
  if (is_builtin(n) || n == "I") throw Error("environment " + name_ + ": '" + n + "' is reserved");
}

Environment& Environment::bind(const std::string& n, GradedSpace s) {
  claim(n);
  spaces_.emplace(n, std::move(s));
  return *this;
}

Environment& Environment::bind(const std::string& n, Mor f) {
  claim(n);
  mors_.emplace(n, std::move(f));
  return *this;
}

Environment& Environment::bind(const std::string& n, HopfData h) {
  claim(n);
  hopfs_.emplace(n, std::move(h));
  return *this;
}

const GradedSpace* Environment::space(const std::string& n) const {
  auto it = spaces_.find(n);
  return it == spaces_.end() ? nullptr : &it->second;
}

const Mor* Environment::mor(const std::string& n) const {
  auto it = mors_.find(n);
  return it == mors_.end() ? nullptr : &it->second;
}

const HopfData* Environment::hopf(const std::string& n) const {
  auto it = hopfs_.find(n);
  return it == hopfs_.end() ? nullptr : &it->second;
}

std::vector<std::string> Environment::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : spaces_) out.push_back(k);
  for (const auto& [k, v] : hopfs_) out.push_back(k);
  for (const auto& [k, v] : mors_) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

Mor elaborate(const MorExpr& e, const Environment& env) {
  switch (e.kind) {
    case MorExpr::Kind::Name: {
      if (const Mor* f = env.mor(e.name)) return *f;
      if (env.space(e.name) || env.hopf(e.name)) {
        throw DslError(DslError::Kind::Type, e.span, "'" + e.name + "' is a space, use id(" + e.name + ")");
      }
      throw DslError(DslError::Kind::Unbound, e.span, "'" + e.name + "' is not bound in environment " + env.name());
    }
    case MorExpr::Kind::Builtin:
      return elaborate_builtin(e, env);
    case MorExpr::Kind::Tensor: {
      Mor out = elaborate(e.children.front(), env);
      for (std::size_t k = 1; k < e.children.size(); ++k) out = tensor(out, elaborate(e.children[k], env));
      return out;
    }
    case MorExpr::Kind::Seq: {
      Mor out = elaborate(e.children.front(), env);
      for (std::size_t k = 1; k < e.children.size(); ++k) {
        Mor next = elaborate(e.children[k], env);
        if (next.dom() != out.cod()) {
          throw DslError(DslError::Kind::Type, e.children[k].span,
                         "stage " + std::to_string(k + 1) + " expects " + next.dom().name() + " but receives " +
                             out.cod().name());
        }
        out = compose(next, out);
      }
      return out;
    }
  }
  throw Error("unreachable");
}

Mor elaborate(const std::string& source, const Environment& env) { return elaborate(parse(source), env); }

CheckRecord equate(const std::string& lhs_source, const std::string& rhs_source, const Environment& env,
                   const std::string& check) {
  MorExpr l = parse(lhs_source);
  MorExpr r = parse(rhs_source);
  Mor lm = elaborate(l, env);
  Mor rm = elaborate(r, env);
  if (lm.dom() != rm.dom() || lm.cod() != rm.cod()) {
    throw DslError(DslError::Kind::Type, r.span,
                   "sides differ in type: " + lm.signature() + " versus " + rm.signature());
  }
  Stopwatch sw;
  CheckRecord rec = braidkit::equate(check, env.name(), lm, rm);
  rec.seconds = sw.seconds();
  return rec;
}

Environment super_line_env() {
  CatalogEntry e = super_line();
  HatContext c = make_hat_context(*e.spec, e.hopf);
  Mor act = adjoint_action(*e.spec, e.hopf);
  DualityMaps dm = duality_maps(c, e.hopf.algebra, act);
  HopfData r = e.hopf;
  r.name = "R";

  Environment env(e.spec, "super_line");
  env.bind("H", e.hopf).bind("Hs", c.hs).bind("R", r);
  env.bind("act", act).bind("lambda", lambda(c)).bind("rho", rho(c));
  env.bind("lambda_inv", invert_lambda(c)).bind("w", dm.w).bind("phi", dm.phi);
  for (int v = 1; v <= 4; ++v) env.bind("v" + std::to_string(v), c.harpoon(v));
  return env;
}

Environment d_superline_env() {
  CatalogEntry e = super_line();
  DrinfeldDouble d = drinfeld_double(*e.spec, e.hopf);
  Environment env(e.spec, "d_superline");
  env.bind("H", e.hopf).bind("A", d.a).bind("D", d.dcp.hopf);
  env.bind("R", d.rmatrix.r).bind("tau", d.dcp.pairing.tau).bind("tau_bar", *d.dcp.pairing.tau_bar);
  env.bind("alpha", d.dcp.alpha).bind("beta", d.dcp.beta);
  return env;
}

Environment named_env(const std::string& name) {
  if (name == "super_line") return super_line_env();
  if (name == "d_superline") return d_superline_env();
  throw ParseError("unknown environment '" + name + "' (known: super_line, d_superline)");
}

std::vector<std::string> env_names() { return {"super_line", "d_superline"}; }

std::string env_directive(const std::string& source) {
  std::istringstream in(source);
  std::string line;
  while (std::getline(in, line)) {
    auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos) continue;
    if (line[p] != '#') break;
    auto k = line.find("env:", p);
    if (k == std::string::npos) continue;
    std::string rest = line.substr(k + 4);
    auto a = rest.find_first_not_of(" \t");
    auto b = rest.find_last_not_of(" \t\r");
    if (a != std::string::npos) return rest.substr(a, b - a + 1);
  }
  return {};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace braidkit::dsl
