#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "braidkit/error.hpp"
#include "braidkit/hopf.hpp"

namespace braidkit::dsl {

/// 1-based line and column, 0-based byte offset.
struct Span {
  int line = 1;
  int column = 1;
  std::size_t offset = 0;
};

/// A syntax, binding or typing error located in the source.
class DslError : public Error {
 public:
  enum class Kind { Syntax, Unbound, Type };
  DslError(Kind kind, Span span, const std::string& message);
  Kind kind;
  Span span;
  std::string message;  // without the location prefix
};

/// Tensor product of named spaces; no factors means the unit I.
struct SpaceArg {
  std::vector<std::string> factors;
  std::vector<Span> spans;
};

/// Seq children run left to right: f;g is g after f.
struct MorExpr {
  enum class Kind { Name, Builtin, Tensor, Seq };
  Kind kind = Kind::Name;
  std::string name;               // Name and Builtin
  std::vector<SpaceArg> args;     // Builtin
  std::vector<MorExpr> children;  // Tensor and Seq, at least two
  Span span;

  /// Structural equality, ignoring spans.
  friend bool operator==(const MorExpr& a, const MorExpr& b);
};

/// id C Cinv d b m cm u cu S Sinv
const std::vector<std::string>& builtins();

/// expr := seq; seq := ten (';' ten)*; ten := atom ('*' atom)*;
/// atom := NAME | builtin '(' args ')' | '(' expr ')'. '#' starts a comment.
MorExpr parse(const std::string& source);
/// Normalized source; parse(print(e)) == e.
std::string print(const MorExpr& e);

/// Immutable once built. Names are unique across spaces, morphisms and
/// Hopf algebras; a Hopf algebra name also denotes its carrier.
class Environment {
 public:
  explicit Environment(std::shared_ptr<const BraidingSpec> spec, std::string name = {});

  Environment& bind(const std::string& name, GradedSpace space);
  Environment& bind(const std::string& name, Mor mor);
  Environment& bind(const std::string& name, HopfData hopf);

  const BraidingSpec& spec() const { return *spec_; }
  std::shared_ptr<const BraidingSpec> spec_ptr() const { return spec_; }
  const std::string& name() const { return name_; }

  const GradedSpace* space(const std::string& n) const;
  const Mor* mor(const std::string& n) const;
  const HopfData* hopf(const std::string& n) const;
  std::vector<std::string> names() const;

 private:
  void claim(const std::string& n);
  std::shared_ptr<const BraidingSpec> spec_;
  std::string name_;
  std::map<std::string, GradedSpace> spaces_;
  std::map<std::string, Mor> mors_;
  std::map<std::string, HopfData> hopfs_;
};

Mor elaborate(const MorExpr& e, const Environment& env);
Mor elaborate(const std::string& source, const Environment& env);

/// Exact equality. Throws DslError (Type) when the sides have different
/// domain or codomain.
CheckRecord equate(const std::string& lhs_source, const std::string& rhs_source, const Environment& env,
                   const std::string& check = "equate");

/// Super line H with H^ (Hs), R = H acted on by the adjoint action `act`,
/// and lambda, rho, w, v1..v4 (harpoons).
Environment super_line_env();
/// D = D(super line) with A = (H*)^op, H, the R-matrix R and the pairing tau.
Environment d_superline_env();
/// "super_line" or "d_superline"; throws ParseError otherwise.
Environment named_env(const std::string& name);
std::vector<std::string> env_names();

/// The NAME of a leading "# env: NAME" comment line, or empty.
std::string env_directive(const std::string& source);

std::string read_file(const std::string& path);

}  // namespace braidkit::dsl
