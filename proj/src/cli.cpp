#include "braidkit/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "braidkit/catalog.hpp"
#include "braidkit/constructions.hpp"
#include "braidkit/double.hpp"
#include "braidkit/dsl.hpp"
#include "braidkit/error.hpp"
#include "braidkit/structure_file.hpp"

namespace braidkit {

namespace {

using nlohmann::json;

/// Usage-level failure inside a command (exit 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

struct Output {
  std::ostream& out;
  std::ostream& err;
  bool as_json = false;
};

int verdict_code(const Report& r) { return r.all_pass() ? 0 : 1; }

void emit(const Output& o, const std::string& command, const Report& r, json extra = json::object()) {
  if (o.as_json) {
    json j = r.json();
    j["command"] = command;
    for (auto& [k, v] : extra.items()) j[k] = v;
    o.out << j.dump(2) << "\n";
  } else {
    o.out << r.text();
    if (extra.contains("summary")) o.out << extra["summary"].get<std::string>() << "\n";
    o.out << (r.all_pass() ? "verdict: pass" : "verdict: fail") << "\n";
  }
}

int refused(const Output& o, const std::string& command, const PreconditionError& e) {
  Report r("refused");
  CheckRecord rec = fact(e.where.empty() ? "precondition" : e.where, command, false, e.what());
  if (!e.witness.empty()) rec.witnesses.push_back({e.witness, "", ""});
  r.add(rec);
  emit(o, command, r, {{"refused", true}});
  o.err << "refused: " << e.what() << "\n";
  return 1;
}

const HopfEntry& pick_hopf(const Structure& s, const std::string& name) {
  std::string key = name.empty() ? s.primary : name;
  if (key.empty() && s.hopf.size() == 1) key = s.hopf.begin()->first;
  auto it = s.hopf.find(key);
  if (it == s.hopf.end()) {
    throw UsageError(s.source + ": " + (key.empty() ? "several Hopf algebras, choose one with --hopf" : "no Hopf algebra \"" + key + "\""));
  }
  return it->second;
}

AlgebraData pick_algebra(const Structure& s, const std::string& name) {
  std::string key = name.empty() ? s.primary : name;
  if (auto it = s.algebras.find(key); it != s.algebras.end()) return it->second;
  return pick_hopf(s, name).data.algebra;
}

std::string pair_witness(const CheckRecord& r) {
  if (r.witnesses.empty()) return {};
  const std::string& w = r.witnesses.front().where;
  std::string src = w.substr(0, w.find(" ↦ "));
  const std::string sep = "⊗";
  auto p = src.find(sep);
  if (p == std::string::npos) return src;
  return "(" + src.substr(0, p) + "," + src.substr(p + sep.size()) + ")";
}

Report symmetric_eval_suite(const BraidingSpec& spec, const HopfData& h) {
  Report rep("symmetric evaluation " + h.name);
  SymmetricEvaluation s = check_symmetric_evaluation(spec, h.carrier());
  for (const auto& r : s.records) rep.add(r);
  CheckRecord summary = fact("symmetric-eval", h.name, s.verdict && s.consistent());
  if (!s.consistent()) summary.note = "conditions disagree";
  if (!s.verdict) {
    const CheckRecord& iii = s.records.at(2);
    std::string w = pair_witness(iii);
    summary.note = "C_{H,H}^2 != id, witness " + w;
    summary.witnesses.push_back({w, iii.witnesses.empty() ? "" : iii.witnesses.front().lhs,
                                 iii.witnesses.empty() ? "" : iii.witnesses.front().rhs});
  }
  rep.add(summary);
  return rep;
}

Report qt_suite(const BraidingSpec& spec, const HopfEntry& e) {
  const HopfData& h = e.data;
  Mor delta_bar = e.delta_bar == "plain" ? h.delta() : compose(braid(spec, h.carrier(), h.carrier()), h.delta());
  return check_quasitriangular(spec, h, *e.rmatrix, delta_bar, h.name);
}

Report pairing_suite(const Structure& s, const std::string& name, const PairingEntry& p) {
  const HopfData& h = s.hopf.at(p.h).data;
  const HopfData& a = s.hopf.at(p.a).data;
  Report rep = check_skew_pairing(*s.spec, p.pairing.tau, h, a, name);
  if (p.symmetric) rep.merge(check_symmetric_pairing(*s.spec, p.pairing.tau, h.carrier(), a.carrier(), name));
  return rep;
}

Report run_suite(const Structure& s, const std::string& suite) {
  const BraidingSpec& spec = *s.spec;
  Report rep("check " + s.source + " --suite=" + suite);
  const bool all = suite == "all";
  if (suite == "algebra") {
    for (const auto& [k, e] : s.hopf) {
      rep.merge(check_algebra(e.data.algebra, k));
      rep.merge(check_coalgebra(e.data.coalgebra, k));
    }
  }
  if (suite == "hopf" || all) {
    for (const auto& [k, e] : s.hopf) rep.merge(hopf_suite(spec, e.data));
  }
  if (suite == "algebra" || suite == "hopf" || all) {
    for (const auto& [k, a] : s.algebras) rep.merge(check_algebra(a, k));
  }
  if (suite == "symmetric-eval" || all) {
    for (const auto& [k, e] : s.hopf) rep.merge(symmetric_eval_suite(spec, e.data));
  }
  if (suite == "qt" || all) {
    bool any = false;
    for (const auto& [k, e] : s.hopf) {
      if (!e.rmatrix) continue;
      any = true;
      rep.merge(qt_suite(spec, e));
    }
    if (!any && !all) throw UsageError(s.source + ": no Hopf algebra with an R-matrix");
  }
  if (suite == "pairing" || all) {
    if (s.pairings.empty() && !all) throw UsageError(s.source + ": no pairings");
    for (const auto& [k, p] : s.pairings) rep.merge(pairing_suite(s, k, p));
  }
  if (rep.records().empty()) throw UsageError(s.source + ": nothing to check for suite " + suite);
  return rep;
}

Mor resolve_action(const std::string& action, const BraidingSpec& spec, const AlgebraData& r, const HopfData& h,
                   const Structure& rs, const Structure& hs) {
  if (action == "trivial") return trivial_action(h, r.carrier);
  if (action == "adjoint") {
    if (r.carrier != h.carrier()) throw UsageError("the adjoint action needs R = H");
    return adjoint_action(spec, h);
  }
  for (const Structure* s : {&rs, &hs}) {
    if (auto it = s->morphisms.find(action); it != s->morphisms.end()) return it->second;
  }
  throw UsageError("unknown action \"" + action + "\" (trivial, adjoint or a morphism of the R file)");
}

CheckRecord same_matrix(const std::string& check, const std::string& subject, const Mor& a, const Mor& b) {
  bool ok = a.matrix() == b.matrix() && a.dom().degrees() == b.dom().degrees() && a.cod().degrees() == b.cod().degrees();
  return fact(check, subject, ok);
}

Report compare_hopf(const HopfData& a, const HopfData& b) {
  Report rep("comparison " + a.name + " vs " + b.name);
  const std::string subj = a.name + " vs " + b.name;
  rep.add(same_matrix("matches.m", subj, a.m(), b.m()));
  rep.add(same_matrix("matches.eta", subj, a.eta(), b.eta()));
  rep.add(same_matrix("matches.delta", subj, a.delta(), b.delta()));
  rep.add(same_matrix("matches.eps", subj, a.eps(), b.eps()));
  if (a.has_antipode() && b.has_antipode()) rep.add(same_matrix("matches.S", subj, a.S(), b.S()));
  return rep;
}

std::string fixture_path(const std::string& name) {
  if (std::filesystem::exists(name)) return name;
  for (const std::string& cand : {std::string(BRAIDKIT_FIXTURE_DIR) + "/" + name,
                                  std::string(BRAIDKIT_FIXTURE_DIR) + "/" + name + ".mor"}) {
    if (std::filesystem::exists(cand)) return cand;
  }
  throw IoError("cannot read " + name);
}

dsl::Environment env_for(const std::string& flag, const std::string& source) {
  std::string name = flag;
  if (name.empty()) name = dsl::env_directive(source);
  if (name.empty()) name = "super_line";
  try {
    return dsl::named_env(name);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

json matrix_rows(const Mor& f) {
  json rows = json::array();
  for (std::size_t i = 0; i < f.cod().dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.dom().dim(); ++j) row.push_back(f.matrix().at(i, j).to_string());
    rows.push_back(row);
  }
  return rows;
}

std::string matrix_text(const Mor& f) {
  const std::size_t rows = f.cod().dim(), cols = f.dom().dim();
  std::vector<std::vector<std::string>> cells(rows + 1, std::vector<std::string>(cols + 1));
  for (std::size_t j = 0; j < cols; ++j) cells[0][j + 1] = f.dom().label(j);
  for (std::size_t i = 0; i < rows; ++i) {
    cells[i + 1][0] = f.cod().label(i);
    for (std::size_t j = 0; j < cols; ++j) cells[i + 1][j + 1] = f.matrix().at(i, j).to_string();
  }
  auto width = [](const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s) w += (c & 0xC0) != 0x80;
    return w;
  };
  std::vector<std::size_t> wd(cols + 1, 0);
  for (const auto& r : cells)
    for (std::size_t j = 0; j <= cols; ++j) wd[j] = std::max(wd[j], width(r[j]));
  std::ostringstream os;
  for (const auto& r : cells) {
    for (std::size_t j = 0; j <= cols; ++j) {
      os << r[j] << std::string(wd[j] - width(r[j]) + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------- commands

int cmd_check(const Output& o, const std::string& source, const std::string& suite) {
  Structure s = load_source(source);
  Report r = run_suite(s, suite);
  json extra = {{"source", source}, {"suite", suite}};
  if (const CheckRecord* se = r.find("symmetric-eval"); se && !se->pass) extra["summary"] = se->note;
  emit(o, "check", r, extra);
  return verdict_code(r);
}

struct BuildOptions {
  std::string kind;
  std::vector<std::string> inputs;
  std::string output;
  std::string action = "trivial";
  std::string hopf;
  std::string pairing;
  std::string expect;
  bool force = false;
};

void need_inputs(const BuildOptions& b, std::size_t n) {
  if (b.inputs.size() != n) {
    throw UsageError("build " + b.kind + " takes " + std::to_string(n) + " input" + (n == 1 ? "" : "s"));
  }
}

int cmd_build(const Output& o, const BuildOptions& b) {
  Report rep("build " + b.kind);
  Structure result;
  if (b.kind == "dual" || b.kind == "hatstar") {
    need_inputs(b, 1);
    Structure s = load_source(b.inputs[0]);
    const HopfData& h = pick_hopf(s, b.hopf).data;
    HopfData d = b.kind == "dual" ? dual_hopf(*s.spec, h) : hat_star(*s.spec, h);
    if (b.kind == "dual") d.name = h.name + "*";
    rep.merge(hopf_suite(*s.spec, d));
    if (!b.expect.empty()) rep.merge(compare_hopf(d, pick_hopf(load_source(b.expect), "").data));
    result = structure_of(s.spec, HopfEntry{d, std::nullopt, "cop"});
  } else if (b.kind == "smash") {
    need_inputs(b, 2);
    Structure rs = load_source(b.inputs[0]);
    Structure hs = load_source(b.inputs[1]);
    const HopfData& h = pick_hopf(hs, b.hopf).data;
    AlgebraData r = pick_algebra(rs, "");
    Mor act = resolve_action(b.action, *hs.spec, r, h, rs, hs);
    SmashProduct sp = smash_product(*hs.spec, r, h, act, "R#H");
    rep.merge(check_algebra(sp.algebra, "R#H"));
    result.spec = hs.spec;
    result.algebras.emplace("R#H", sp.algebra);
    result.morphisms.emplace("act", act);
    result.primary = "R#H";
  } else if (b.kind == "bartensor") {
    need_inputs(b, 1);
    Structure s = load_source(b.inputs[0]);
    HatContext c = make_hat_context(*s.spec, pick_hopf(s, b.hopf).data);
    BarTensorAlgebra bar = bar_tensor(c);
    rep.merge(check_algebra(bar.algebra, "H⊗̄H^"));
    rep.merge(end_iso(c).report);
    result.spec = s.spec;
    result.algebras.emplace("bar", bar.algebra);
    result.primary = "bar";
  } else if (b.kind == "double") {
    need_inputs(b, 1);
    Structure s = load_source(b.inputs[0]);
    const HopfData& h = pick_hopf(s, b.hopf).data;
    DrinfeldDouble d = drinfeld_double(*s.spec, h);
    rep.merge(double_report(*s.spec, h, d));
    result.spec = s.spec;
    const std::string dn = d.dcp.hopf.name;
    result.hopf.emplace(dn, HopfEntry{d.dcp.hopf, d.rmatrix, "cop"});
    result.hopf.emplace("A", HopfEntry{d.a, std::nullopt, "cop"});
    result.hopf.emplace("H", HopfEntry{h, std::nullopt, "cop"});
    result.hopf.at("A").data.name = "A";
    result.hopf.at("H").data.name = "H";
    result.pairings.emplace("tau", PairingEntry{"H", "A", d.dcp.pairing, true});
    result.primary = dn;
  } else if (b.kind == "dcp") {
    need_inputs(b, 1);
    Structure s = load_source(b.inputs[0]);
    std::string pname = b.pairing;
    if (pname.empty() && s.pairings.size() == 1) pname = s.pairings.begin()->first;
    auto it = s.pairings.find(pname);
    if (it == s.pairings.end()) throw UsageError(s.source + ": choose a pairing with --pairing");
    const PairingEntry& p = it->second;
    const HopfData& h = s.hopf.at(p.h).data;
    const HopfData& a = s.hopf.at(p.a).data;
    rep.add(check_bialgebra_criterion(*s.spec, a.carrier(), h.carrier()));
    DoubleCrossProduct dcp = double_cross_product(*s.spec, a, h, p.pairing);
    rep.merge(hopf_suite(*s.spec, dcp.hopf));
    result.spec = s.spec;
    result.hopf.emplace(dcp.hopf.name, HopfEntry{dcp.hopf, std::nullopt, "cop"});
    result.primary = dcp.hopf.name;
  } else {
    throw UsageError("unknown build kind \"" + b.kind + "\" (dual, hatstar, smash, bartensor, double, dcp)");
  }
  result.source = b.output;

  const bool ok = rep.all_pass();
  json extra = {{"kind", b.kind}, {"written", false}};
  if (ok || b.force) {
    if (!b.output.empty()) {
      save_structure(result, b.output);
      extra["written"] = true;
      extra["output"] = b.output;
    } else if (!o.as_json) {
      o.err << rep.text();
      o.out << structure_to_json(result).dump(1) << "\n";
      return ok ? 0 : 1;
    } else {
      extra["structure"] = structure_to_json(result);
    }
  } else {
    o.err << "refused: checks failed for " << b.kind << ", nothing written (use --force to override)\n";
  }
  emit(o, "build", rep, extra);
  return ok ? 0 : 1;
}

int cmd_verify_duality(const Output& o, const std::string& rsrc, const std::string& hsrc, const std::string& action,
                       const std::string& hopf) {
  Structure rs = load_source(rsrc);
  Structure hs = load_source(hsrc);
  const HopfData& h = pick_hopf(hs, hopf).data;
  AlgebraData r = pick_algebra(rs, "");
  if (!(rs.spec->group() == hs.spec->group())) throw UsageError("R and H are graded by different groups");
  Mor act = resolve_action(action, *hs.spec, r, h, rs, hs);
  Report rep = verify_duality(*hs.spec, r, h, act, rsrc + " / " + hsrc + " / " + action);
  json extra = json::object();
  if (const CheckRecord* s = rep.find("duality.summary")) extra["summary"] = s->note;
  emit(o, "verify-duality", rep, extra);
  return verdict_code(rep);
}

int cmd_eval(const Output& o, const std::string& file, const std::string& env_name) {
  std::string src = dsl::read_file(fixture_path(file));
  dsl::Environment env = env_for(env_name, src);
  Mor f = dsl::elaborate(src, env);
  const bool identity = f.dom() == f.cod() && f == id(f.dom());
  if (o.as_json) {
    json j = {{"command", "eval"}, {"file", file}, {"env", env.name()}, {"dom", f.dom().name()},
              {"cod", f.cod().name()}, {"matrix", matrix_rows(f)}, {"identity", identity}};
    o.out << j.dump(2) << "\n";
  } else {
    o.out << env.name() << ": " << f.signature() << "\n" << matrix_text(f);
    if (identity) o.out << "= identity\n";
  }
  return 0;
}

int cmd_equate(const Output& o, const std::string& lhs, const std::string& rhs, const std::string& env_name) {
  std::string ls = dsl::read_file(fixture_path(lhs));
  std::string rs = dsl::read_file(fixture_path(rhs));
  dsl::Environment env = env_for(env_name, ls);
  CheckRecord rec = dsl::equate(ls, rs, env, "equate");
  rec.subject = env.name() + ": " + lhs + " = " + rhs;
  Report r("equate");
  r.add(rec);
  emit(o, "equate", r);
  return verdict_code(r);
}

int cmd_catalog_list(const Output& o) {
  auto list = catalog_list();
  if (o.as_json) {
    json j = json::array();
    for (const auto& c : list) j.push_back({{"name", c.name}, {"params", c.params}, {"summary", c.summary}});
    o.out << json{{"command", "catalog list"}, {"entries", j}}.dump(2) << "\n";
  } else {
    for (const auto& c : list) {
      std::string head = "catalog:" + c.name + (c.params.empty() ? "" : "(" + c.params + ")");
      o.out << std::left << std::setw(36) << head << c.summary << "\n";
    }
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  kernels::configure_threads_from_env();
  CLI::App app{"braidkit: exact braided Hopf algebra checks", "braidkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "print machine-readable records");

  std::string source, suite = "all", env_name, hopf_name;
  auto* check = app.add_subcommand("check", "run a checker suite on a structure file or catalog:NAME");
  check->add_option("source", source, "FILE or catalog:NAME")->required();
  check->add_option("--suite", suite, "all|algebra|hopf|symmetric-eval|qt|pairing")
      ->check(CLI::IsMember({"all", "algebra", "hopf", "symmetric-eval", "qt", "pairing"}));
  check->add_flag("--json", as_json);

  BuildOptions b;
  auto* build = app.add_subcommand("build", "construct a structure and write it after its axiom suite passes");
  build->add_option("kind", b.kind, "dual|hatstar|smash|bartensor|double|dcp")->required();
  build->add_option("inputs", b.inputs, "input sources")->required();
  build->add_option("-o,--output", b.output, "output structure file (stdout if absent)");
  build->add_option("--action", b.action, "smash: trivial|adjoint|MORPHISM");
  build->add_option("--hopf", b.hopf, "Hopf algebra entry of a multi-entry file");
  build->add_option("--pairing", b.pairing, "dcp: pairing entry");
  build->add_option("--expect", b.expect, "compare the result with this source");
  build->add_flag("--force", b.force, "write even when checks fail");
  build->add_flag("--json", as_json);

  std::string rsrc, hsrc, action = "trivial";
  auto* vd = app.add_subcommand("verify-duality", "check (R#H)#H^ against R (x) (H (x)bar H^)");
  vd->add_option("R", rsrc, "algebra source")->required();
  vd->add_option("H", hsrc, "Hopf algebra source")->required();
  vd->add_option("--action", action, "trivial|adjoint|MORPHISM");
  vd->add_option("--hopf", hopf_name, "Hopf algebra entry of H");
  vd->add_flag("--json", as_json);

  std::string file, file2;
  auto* ev = app.add_subcommand("eval", "elaborate a .mor file");
  ev->add_option("file", file, ".mor file or fixture name")->required();
  ev->add_option("--env", env_name, "super_line|d_superline");
  ev->add_flag("--json", as_json);

  auto* eq = app.add_subcommand("equate", "compare two .mor files exactly");
  eq->add_option("lhs", file, ".mor file or fixture name")->required();
  eq->add_option("rhs", file2, ".mor file or fixture name")->required();
  eq->add_option("--env", env_name, "super_line|d_superline");
  eq->add_flag("--json", as_json);

  std::string what;
  auto* cat = app.add_subcommand("catalog", "catalog operations");
  cat->add_option("what", what, "list")->required()->check(CLI::IsMember({"list"}));
  cat->add_flag("--json", as_json);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Output o{out, err, as_json};
  try {
    if (*check) return cmd_check(o, source, suite);
    if (*build) {
      try {
        return cmd_build(o, b);
      } catch (const PreconditionError& e) {
        return refused(o, "build " + b.kind, e);
      }
    }
    if (*vd) {
      try {
        return cmd_verify_duality(o, rsrc, hsrc, action, hopf_name);
      } catch (const PreconditionError& e) {
        return refused(o, "verify-duality", e);
      }
    }
    if (*ev) return cmd_eval(o, file, env_name);
    if (*eq) return cmd_equate(o, file, file2, env_name);
    if (*cat) return cmd_catalog_list(o);
  } catch (const PreconditionError& e) {
    return refused(o, "check", e);
  } catch (const dsl::DslError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace braidkit
