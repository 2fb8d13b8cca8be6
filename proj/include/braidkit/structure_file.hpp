#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "braidkit/hopf.hpp"

namespace braidkit {

struct HopfEntry {
  HopfData data;
  std::optional<RMatrixData> rmatrix;
  /// "cop" (C Delta) or "plain" (Delta); the coproduct QT1-QT3 use.
  std::string delta_bar = "cop";
};

struct PairingEntry {
  std::string h;  // left argument, a key of `hopf`
  std::string a;  // right argument
  PairingData pairing;
  bool symmetric = true;  // whether the symmetric-pairing identities are expected
};

/// In-memory form of a structure file:
///   {"group": [orders], "chi": matrix, "root_order": n,
///    "spaces": {atom: {"labels": [..], "degrees": [[..], ..]} | {"dual_of": [atoms]}},
///    "morphisms": {name: {"dom": [atoms], "cod": [atoms], "matrix": [[scalar, ..], ..]}},
///    "hopf": {name: {"carrier": [atoms], "m": mor, "eta": mor, "delta": mor, "eps": mor,
///                    "S"?: mor, "S_inv"?: mor, "R"?: mor, "delta_bar"?: "cop"|"plain"}},
///    "pairings": {name: {"tau": mor, "tau_bar"?: mor, "left": hopf, "right": hopf, "symmetric"?: bool}},
///    "algebras"?: {name: {"carrier": [atoms], "m": mor, "eta": mor}},
///    "primary"?: name}
/// Scalars are strings "c0 + c1*z + ..." over Q(zeta_root_order), rationals "p/q".
struct Structure {
  std::shared_ptr<const BraidingSpec> spec;
  std::map<std::string, Mor> morphisms;
  std::map<std::string, HopfEntry> hopf;
  std::map<std::string, PairingEntry> pairings;
  std::map<std::string, AlgebraData> algebras;
  /// The hopf or algebra entry commands act on by default.
  std::string primary;
  std::string source;  // file name or catalog URI
};

/// Throws ParseError on malformed documents and construction errors
/// (DegreeError, TypeMismatch) when matrices violate their invariants.
Structure structure_from_json(const nlohmann::json& j);
nlohmann::json structure_to_json(const Structure& s);

/// IoError when the file cannot be read or written.
Structure load_structure(const std::string& path);
void save_structure(const Structure& s, const std::string& path);

/// A single Hopf algebra as a structure; its maps are stored as
/// name.m, name.eta, ... .
Structure structure_of(std::shared_ptr<const BraidingSpec> spec, const HopfEntry& h);

/// "catalog:..." goes to the catalog, anything else is read as a file.
Structure load_source(const std::string& source);

}  // namespace braidkit
