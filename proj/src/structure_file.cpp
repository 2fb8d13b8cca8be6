#include "braidkit/structure_file.hpp"

#include <fstream>
#include <functional>
#include <set>

#include "braidkit/catalog.hpp"
#include "braidkit/error.hpp"

namespace braidkit {

using nlohmann::json;

namespace {

const json& need(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing key \"" + key + "\"");
  return j.at(key);
}

std::string need_string(const json& j, const std::string& key, const std::string& where) {
  const json& v = need(j, key, where);
  if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of names");
  std::vector<std::string> out;
  for (const auto& x : j) {
    if (!x.is_string()) throw ParseError(where + ": expected an array of names");
    out.push_back(x.get<std::string>());
  }
  return out;
}

class AtomTable {
 public:
  /// Key for the atom, registering it (and, for duals, its source atoms).
  std::string key(const std::shared_ptr<const Atom>& a) {
    for (const auto& [k, v] : atoms_) {
      if (v.get() == a.get()) return k;
    }
    for (const auto& [k, v] : atoms_) {
      if (v->name == a->name && v->labels == a->labels && v->degrees == a->degrees && bool(v->dual_of) == bool(a->dual_of))
        return k;
    }
    std::string k = a->name;
    for (int n = 2; atoms_.count(k); ++n) k = a->name + "~" + std::to_string(n);
    atoms_.emplace(k, a);
    order_.push_back(k);
    if (a->dual_of) {
      std::vector<std::string> src;
      for (const auto& f : a->dual_of->factors()) src.push_back(key(f));
      dual_sources_[k] = src;
    }
    return k;
  }

  json names(const GradedSpace& s) {
    json out = json::array();
    for (const auto& f : s.factors()) out.push_back(key(f));
    return out;
  }

  json to_json(const GroupSpec& g) const {
    json out = json::object();
    for (const auto& k : order_) {
      const Atom& a = *atoms_.at(k);
      json e;
      if (k != a.name) e["name"] = a.name;
      if (a.dual_of) {
        e["dual_of"] = dual_sources_.at(k);
      } else {
        e["labels"] = a.labels;
        json degs = json::array();
        for (int c : a.degrees) degs.push_back(g.decode(c));
        e["degrees"] = degs;
      }
      out[k] = e;
    }
    return out;
  }

 private:
  std::map<std::string, std::shared_ptr<const Atom>> atoms_;
  std::vector<std::string> order_;
  std::map<std::string, std::vector<std::string>> dual_sources_;
};

json matrix_json(const SparseMatrix& m, int order) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(json::array());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<std::string> col(m.rows(), "0");
    for (const auto& e : m.column(j)) col[e.row] = e.value.to_string(order);
    for (std::size_t i = 0; i < m.rows(); ++i) rows[i].push_back(col[i]);
  }
  return rows;
}

CycScalar scalar(const json& v, int order, const std::string& where) {
  if (v.is_number_integer()) return CycScalar(v.get<long>()).embed(order);
  if (!v.is_string()) throw ParseError(where + ": scalars must be strings");
  try {
    return CycScalar::parse(v.get<std::string>(), order);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

class Loader {
 public:
  explicit Loader(const json& doc) : doc_(doc) {
    if (!doc.is_object()) throw ParseError("structure file must be a JSON object");
    std::vector<int> orders = need(doc, "group", "structure").get<std::vector<int>>();
    auto chi = need(doc, "chi", "structure").get<std::vector<std::vector<long>>>();
    int n = need(doc, "root_order", "structure").get<int>();
    if (orders.empty() || n < 1) throw ParseError("structure: empty group or bad root_order");
    for (int o : orders)
      if (o < 1) throw ParseError("structure: group orders must be positive");
    if (chi.size() != orders.size()) throw ParseError("structure: chi must be " + std::to_string(orders.size()) + " square");
    for (const auto& row : chi)
      if (row.size() != orders.size()) throw ParseError("structure: chi must be square");
    spec_ = BraidingSpec::make(orders, chi, n);
  }

  std::shared_ptr<const BraidingSpec> spec() const { return spec_; }

  GradedSpace atom(const std::string& k) {
    if (auto it = atoms_.find(k); it != atoms_.end()) return it->second;
    if (resolving_.count(k)) throw ParseError("spaces." + k + ": cyclic dual_of");
    const json& spaces = need(doc_, "spaces", "structure");
    if (!spaces.contains(k)) throw ParseError("unknown space \"" + k + "\"");
    const json& e = spaces.at(k);
    const std::string where = "spaces." + k;
    resolving_.insert(k);
    GradedSpace out;
    if (e.contains("dual_of")) {
      out = dual_space(space(e.at("dual_of"), where + ".dual_of"));
    } else {
      auto labels = string_list(need(e, "labels", where), where + ".labels");
      std::vector<Degree> degs;
      for (const auto& d : need(e, "degrees", where)) {
        if (d.is_number_integer()) {
          degs.push_back({d.get<int>()});
        } else {
          degs.push_back(d.get<Degree>());
        }
        if (degs.back().size() != spec_->group().orders().size()) throw ParseError(where + ": degree has wrong arity");
      }
      std::string name = e.contains("name") ? e.at("name").get<std::string>() : k;
      try {
        out = GradedSpace::atom(name, labels, degs, spec_->group_ptr());
      } catch (const ParseError&) {
        throw;
      } catch (const Error& err) {
        throw ParseError(where + ": " + err.what());
      }
    }
    resolving_.erase(k);
    atoms_.emplace(k, out);
    return out;
  }

  GradedSpace space(const json& names, const std::string& where) {
    GradedSpace s = GradedSpace::unit();
    for (const auto& k : string_list(names, where)) s = tensor_space(s, atom(k));
    return s;
  }

  Mor mor(const std::string& name) {
    if (auto it = mors_.find(name); it != mors_.end()) return it->second;
    const json& all = need(doc_, "morphisms", "structure");
    if (!all.contains(name)) throw ParseError("unknown morphism \"" + name + "\"");
    const json& e = all.at(name);
    const std::string where = "morphisms." + name;
    GradedSpace dom = space(need(e, "dom", where), where + ".dom");
    GradedSpace cod = space(need(e, "cod", where), where + ".cod");
    SparseMatrix m(cod.dim(), dom.dim());
    const int n = spec_->root_order();
    if (e.contains("matrix")) {
      const json& rows = e.at("matrix");
      if (!rows.is_array() || rows.size() != cod.dim()) {
        throw ParseError(where + ".matrix: expected " + std::to_string(cod.dim()) + " rows");
      }
      for (std::size_t i = 0; i < cod.dim(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != dom.dim()) {
          throw ParseError(where + ".matrix: row " + std::to_string(i) + " needs " + std::to_string(dom.dim()) + " entries");
        }
        for (std::size_t j = 0; j < dom.dim(); ++j) {
          CycScalar v = scalar(rows[i][j], n, where);
          if (!v.is_zero()) m.add(i, j, v);
        }
      }
    } else {
      for (const auto& t : need(e, "entries", where)) {
        if (!t.is_array() || t.size() != 3) throw ParseError(where + ".entries: expected [row, col, scalar]");
        auto i = t[0].get<std::size_t>(), j = t[1].get<std::size_t>();
        if (i >= cod.dim() || j >= dom.dim()) throw ParseError(where + ".entries: index out of range");
        m.add(i, j, scalar(t[2], n, where));
      }
    }
    Mor f(dom, cod, std::move(m));
    mors_.emplace(name, f);
    return f;
  }

  std::optional<Mor> optional_mor(const json& e, const std::string& key, const std::string& where) {
    if (!e.contains(key) || e.at(key).is_null()) return std::nullopt;
    return mor(need_string(e, key, where));
  }

  Structure load() {
    Structure s;
    s.spec = spec_;
    if (doc_.contains("spaces"))
      for (const auto& [k, v] : doc_.at("spaces").items()) atom(k);
    std::set<std::string> referenced;
    auto ref = [&](const json& e, std::initializer_list<const char*> keys) {
      for (const char* k : keys)
        if (e.contains(k) && e.at(k).is_string()) referenced.insert(e.at(k).get<std::string>());
    };
    for (const char* section : {"hopf", "pairings", "algebras"}) {
      if (!doc_.contains(section)) continue;
      for (const auto& [k, e] : doc_.at(section).items())
        ref(e, {"m", "eta", "delta", "eps", "S", "S_inv", "R", "R_inv", "tau", "tau_bar"});
    }
    if (doc_.contains("morphisms"))
      for (const auto& [k, v] : doc_.at("morphisms").items()) {
        Mor f = mor(k);
        if (!referenced.count(k)) s.morphisms.emplace(k, std::move(f));
      }
    if (doc_.contains("hopf")) {
      for (const auto& [k, e] : doc_.at("hopf").items()) {
        const std::string where = "hopf." + k;
        HopfData h(k, mor(need_string(e, "m", where)), mor(need_string(e, "eta", where)),
                   mor(need_string(e, "delta", where)), mor(need_string(e, "eps", where)), optional_mor(e, "S", where),
                   optional_mor(e, "S_inv", where));
        if (e.contains("carrier") && space(e.at("carrier"), where + ".carrier") != h.carrier()) {
          throw ParseError(where + ": carrier does not match the structure maps");
        }
        HopfEntry entry{std::move(h), std::nullopt, "cop"};
        if (auto r = optional_mor(e, "R", where)) entry.rmatrix = RMatrixData{*r, optional_mor(e, "R_inv", where)};
        if (e.contains("delta_bar")) {
          entry.delta_bar = need_string(e, "delta_bar", where);
          if (entry.delta_bar != "cop" && entry.delta_bar != "plain") {
            throw ParseError(where + ".delta_bar: expected \"cop\" or \"plain\"");
          }
        }
        s.hopf.emplace(k, std::move(entry));
      }
    }
    if (doc_.contains("pairings")) {
      for (const auto& [k, e] : doc_.at("pairings").items()) {
        const std::string where = "pairings." + k;
        PairingEntry p{need_string(e, "left", where), need_string(e, "right", where),
                       PairingData{mor(need_string(e, "tau", where)), optional_mor(e, "tau_bar", where)},
                       e.value("symmetric", true)};
        for (const auto& side : {p.h, p.a}) {
          if (!s.hopf.count(side)) throw ParseError(where + ": unknown Hopf algebra \"" + side + "\"");
        }
        s.pairings.emplace(k, std::move(p));
      }
    }
    if (doc_.contains("algebras")) {
      for (const auto& [k, e] : doc_.at("algebras").items()) {
        const std::string where = "algebras." + k;
        Mor m = mor(need_string(e, "m", where));
        Mor eta = mor(need_string(e, "eta", where));
        GradedSpace c = m.cod();
        if (m.dom() != tensor_space(c, c) || eta.cod() != c || !eta.dom().is_unit()) {
          throw ParseError(where + ": m and eta do not form an algebra signature on " + c.name());
        }
        s.algebras.emplace(k, AlgebraData{c, std::move(m), std::move(eta)});
      }
    }
    if (doc_.contains("primary")) {
      s.primary = doc_.at("primary").get<std::string>();
      if (!s.hopf.count(s.primary) && !s.algebras.count(s.primary)) {
        throw ParseError("primary: unknown entry \"" + s.primary + "\"");
      }
    }
    return s;
  }

 private:
  const json& doc_;
  std::shared_ptr<const BraidingSpec> spec_;
  std::map<std::string, GradedSpace> atoms_;
  std::map<std::string, Mor> mors_;
  std::set<std::string> resolving_;
};

}  // namespace

Structure structure_from_json(const json& j) {
  try {
    return Loader(j).load();
  } catch (const json::exception& e) {
    throw ParseError(std::string("structure file: ") + e.what());
  }
}

json structure_to_json(const Structure& s) {
  const BraidingSpec& spec = *s.spec;
  const int n = spec.root_order();
  AtomTable atoms;
  json doc;
  doc["group"] = spec.group().orders();
  doc["chi"] = spec.chi().matrix();
  doc["root_order"] = n;

  // Each distinct matrix gets one name; structure maps reuse explicit morphisms.
  json mors = json::object();
  std::vector<std::pair<std::string, const Mor*>> named;
  // Free morphisms are never shared with structure maps, so loading can tell them apart.
  auto add = [&](const std::string& name, const Mor& f) -> std::string {
    for (const auto& [k, p] : named) {
      if (*p == f && !s.morphisms.count(k)) return k;
    }
    if (mors.contains(name)) throw Error("structure: morphism name clash on " + name);
    json e;
    e["dom"] = atoms.names(f.dom());
    e["cod"] = atoms.names(f.cod());
    e["matrix"] = matrix_json(f.matrix(), n);
    mors[name] = e;
    named.emplace_back(name, &f);
    return name;
  };
  for (const auto& [k, f] : s.morphisms) add(k, f);

  json hopf = json::object();
  for (const auto& [k, e] : s.hopf) {
    const HopfData& h = e.data;
    json o;
    o["carrier"] = atoms.names(h.carrier());
    o["m"] = add(k + ".m", h.m());
    o["eta"] = add(k + ".eta", h.eta());
    o["delta"] = add(k + ".delta", h.delta());
    o["eps"] = add(k + ".eps", h.eps());
    if (h.antipode) o["S"] = add(k + ".S", *h.antipode);
    if (h.antipode_inv) o["S_inv"] = add(k + ".S_inv", *h.antipode_inv);
    if (e.rmatrix) {
      o["R"] = add(k + ".R", e.rmatrix->r);
      if (e.rmatrix->r_inv) o["R_inv"] = add(k + ".R_inv", *e.rmatrix->r_inv);
    }
    o["delta_bar"] = e.delta_bar;
    hopf[k] = o;
  }
  json pairs = json::object();
  for (const auto& [k, p] : s.pairings) {
    json o;
    o["left"] = p.h;
    o["right"] = p.a;
    o["tau"] = add(k + ".tau", p.pairing.tau);
    if (p.pairing.tau_bar) o["tau_bar"] = add(k + ".tau_bar", *p.pairing.tau_bar);
    o["symmetric"] = p.symmetric;
    pairs[k] = o;
  }
  json algs = json::object();
  for (const auto& [k, a] : s.algebras) {
    json o;
    o["carrier"] = atoms.names(a.carrier);
    o["m"] = add(k + ".m", a.m);
    o["eta"] = add(k + ".eta", a.eta);
    algs[k] = o;
  }
  doc["spaces"] = atoms.to_json(spec.group());
  doc["morphisms"] = mors;
  doc["hopf"] = hopf;
  doc["pairings"] = pairs;
  if (!algs.empty()) doc["algebras"] = algs;
  if (!s.primary.empty()) doc["primary"] = s.primary;
  return doc;
}

Structure load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  Structure s = structure_from_json(j);
  s.source = path;
  return s;
}

void save_structure(const Structure& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << structure_to_json(s).dump(1) << "\n";
  if (!out) throw IoError("write failed for " + path);
}

Structure structure_of(std::shared_ptr<const BraidingSpec> spec, const HopfEntry& h) {
  Structure s;
  s.spec = std::move(spec);
  s.hopf.emplace(h.data.name, h);
  s.primary = h.data.name;
  s.source = h.data.name;
  return s;
}

Structure load_source(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) {
    CatalogEntry e = catalog_lookup(source);
    Structure s = structure_of(e.spec, HopfEntry{e.hopf, std::nullopt, "cop"});
    s.source = source;
    return s;
  }
  return load_structure(source);
}

}  // namespace braidkit
