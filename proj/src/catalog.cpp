#include "braidkit/catalog.hpp"

#include <cctype>
#include <functional>

#include "braidkit/error.hpp"

namespace braidkit {

namespace {

using Fill = std::function<void(SparseMatrix&)>;

Mor make(const GradedSpace& dom, const GradedSpace& cod, const Fill& fill) {
  SparseMatrix m(cod.dim(), dom.dim());
  fill(m);
  return Mor(dom, cod, std::move(m));
}

std::string power_label(const std::string& g, int k) {
  if (k == 0) return "1";
  if (k == 1) return g;
  return g + "^" + std::to_string(k);
}

int mod(int a, int n) { return ((a % n) + n) % n; }

std::map<std::string, bool> full_pass(bool symmetric) {
  return {{"algebra", true}, {"coalgebra", true}, {"bialgebra", true}, {"antipode", true}, {"symmetric-eval", symmetric}};
}

// kZ_n structure maps on a carrier whose basis is g^0 .. g^{n-1}.
HopfData cyclic_group_hopf(const std::string& name, const GradedSpace& h, int n) {
  const GradedSpace hh = tensor_space(h, h), I = GradedSpace::unit();
  const auto N = static_cast<std::size_t>(n);
  Mor m = make(hh, h, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) s.add(static_cast<std::size_t>(mod(a + b, n)), a * N + b, CycScalar(1));
  });
  Mor eta = make(I, h, [&](SparseMatrix& s) { s.add(0, 0, CycScalar(1)); });
  Mor delta = make(h, hh, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a) s.add(a * N + a, a, CycScalar(1));
  });
  Mor eps = make(h, I, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a) s.add(0, a, CycScalar(1));
  });
  Mor S = make(h, h, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a) s.add(static_cast<std::size_t>(mod(-a, n)), a, CycScalar(1));
  });
  return HopfData(name, m, eta, delta, eps, S);
}

std::vector<std::string> cyclic_labels(const std::string& g, int n) {
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back(power_label(g, a));
  return labels;
}

// C[xi]/(xi^n) with Delta(xi^k) = sum_j coeff(k, j) xi^j (x) xi^{k-j}.
CatalogEntry truncated_line(const std::string& name, const std::string& atom, int n,
                            const std::function<CycScalar(int, int)>& coeff, bool closed_form_antipode) {
  if (n < 2) throw Error(name + ": needs n >= 2");
  auto spec = BraidingSpec::make({n}, {{1}}, n);
  std::vector<int> codes;
  for (int k = 0; k < n; ++k) codes.push_back(k);
  GradedSpace h = GradedSpace::atom_from_codes(atom, cyclic_labels("ξ", n), codes, spec->group_ptr());
  const GradedSpace hh = tensor_space(h, h), I = GradedSpace::unit();
  const auto N = static_cast<std::size_t>(n);
  Mor m = make(hh, h, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; a + b < n; ++b) s.add(static_cast<std::size_t>(a + b), a * N + b, CycScalar(1));
  });
  Mor eta = make(I, h, [&](SparseMatrix& s) { s.add(0, 0, CycScalar(1)); });
  Mor delta = make(h, hh, [&](SparseMatrix& s) {
    for (int k = 0; k < n; ++k)
      for (int j = 0; j <= k; ++j) s.add(j * N + (k - j), k, coeff(k, j));
  });
  Mor eps = make(h, I, [&](SparseMatrix& s) { s.add(0, 0, CycScalar(1)); });
  std::optional<Mor> S;
  if (closed_form_antipode) {
    S = make(h, h, [&](SparseMatrix& s) {
      for (int k = 0; k < n; ++k) s.add(k, k, anyonic_antipode_coefficient(n, k));
    });
  }
  CatalogEntry e{name, {n}, spec, HopfData(name, m, eta, delta, eps, S), full_pass(n <= 2), ""};
  return e;
}

}  // namespace

CycScalar gaussian_binomial(int k, int j, const CycScalar& q) {
  if (j < 0 || j > k) return CycScalar(0);
  std::vector<CycScalar> row{CycScalar(1)};
  for (int r = 1; r <= k; ++r) {
    std::vector<CycScalar> next(static_cast<std::size_t>(r + 1), CycScalar(0));
    next[0] = CycScalar(1);
    next[static_cast<std::size_t>(r)] = CycScalar(1);
    for (int i = 1; i < r; ++i) {
      next[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)] + q.pow(i) * row[static_cast<std::size_t>(i)];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(j)];
}

CycScalar anyonic_antipode_coefficient(int n, int k) {
  CycScalar z = CycScalar::root_of_unity(n, k * (k - 1) / 2);
  return k % 2 ? -z : z;
}

CatalogEntry group_algebra(int n, int grading) {
  if (n < 1) throw Error("group_algebra: needs n >= 1");
  const std::string name = "group_algebra(" + std::to_string(n) + ")";
  if (mod(grading, n) != 0) {
    throw DegreeError(name + ": grading |g| = " + std::to_string(mod(grading, n)) +
                      " violates |Δ(g)| = |g⊗g|, i.e. 2|g| = |g| in Z_" + std::to_string(n));
  }
  auto spec = BraidingSpec::trivial();
  GradedSpace h = GradedSpace::atom_from_codes("kZ" + std::to_string(n), cyclic_labels("g", n),
                                               std::vector<int>(static_cast<std::size_t>(n), 0), spec->group_ptr());
  return {name, {n}, spec, cyclic_group_hopf(name, h, n), full_pass(true), ""};
}

CatalogEntry function_algebra(int n) {
  if (n < 1) throw Error("function_algebra: needs n >= 1");
  const std::string name = "function_algebra(" + std::to_string(n) + ")";
  auto spec = BraidingSpec::trivial();
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back("δ" + std::to_string(a));
  GradedSpace h = GradedSpace::atom_from_codes("FunZ" + std::to_string(n), labels,
                                               std::vector<int>(static_cast<std::size_t>(n), 0), spec->group_ptr());
  const GradedSpace hh = tensor_space(h, h), I = GradedSpace::unit();
  const auto N = static_cast<std::size_t>(n);
  Mor m = make(hh, h, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a) s.add(a, a * N + a, CycScalar(1));
  });
  Mor eta = make(I, h, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a) s.add(a, 0, CycScalar(1));
  });
  Mor delta = make(h, hh, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) s.add(b * N + static_cast<std::size_t>(mod(a - b, n)), a, CycScalar(1));
  });
  Mor eps = make(h, I, [&](SparseMatrix& s) { s.add(0, 0, CycScalar(1)); });
  Mor S = make(h, h, [&](SparseMatrix& s) {
    for (int a = 0; a < n; ++a) s.add(static_cast<std::size_t>(mod(-a, n)), a, CycScalar(1));
  });
  return {name, {n}, spec, HopfData(name, m, eta, delta, eps, S), full_pass(true), ""};
}

CatalogEntry anyonic_line(int n) {
  const CycScalar q = CycScalar::root_of_unity(n, 1);
  CatalogEntry e = truncated_line("anyonic_line(" + std::to_string(n) + ")", "A" + std::to_string(n), n,
                                  [&](int k, int j) { return gaussian_binomial(k, j, q); }, true);
  return e;
}

CatalogEntry super_line() {
  CatalogEntry e = anyonic_line(2);
  e.name = "super_line";
  e.hopf.name = "super_line";
  e.parameters.clear();
  return e;
}

CatalogEntry anyonic_line_unbraided(int n) {
  const CycScalar one(1);
  CatalogEntry e = truncated_line("anyonic_line_unbraided(" + std::to_string(n) + ")", "B" + std::to_string(n), n,
                                  [&](int k, int j) { return gaussian_binomial(k, j, one); }, false);
  const HopfData& h = e.hopf;
  e.hopf = HopfData(h.name, h.m(), h.eta(), h.delta(), h.eps(), synthesize_antipode(h));
  if (n >= 3) {
    e.expected["bialgebra"] = false;
    e.note = "ordinary binomials ignore the braiding scalar ζ^{χ(1,1)}";
  }
  e.expected["antipode"] = e.hopf.has_antipode();
  return e;
}

CatalogEntry underline_group_algebra(int n) {
  if (n < 1) throw Error("underline_group_algebra: needs n >= 1");
  const std::string name = "underline_group_algebra(" + std::to_string(n) + ")";
  auto spec = BraidingSpec::make({n}, {{1}}, n);
  GradedSpace h = GradedSpace::atom_from_codes("uZ" + std::to_string(n), cyclic_labels("g", n),
                                               std::vector<int>(static_cast<std::size_t>(n), 0), spec->group_ptr());
  CatalogEntry e{name, {n}, spec, cyclic_group_hopf(name, h, n), full_pass(true),
                 "adjoint coaction: all grouplikes in degree 0"};
  return e;
}

CatalogEntry underline_group_algebra_regular(int n) {
  if (n >= 2) {
    throw DegreeError("underline_group_algebra_regular(" + std::to_string(n) +
                      "): |g^a| = a violates |Δ(g)| = |g⊗g|, i.e. 2 = 1 in Z_" + std::to_string(n));
  }
  return underline_group_algebra(n);
}

CatalogEntry sweedler() {
  auto spec = BraidingSpec::trivial();
  GradedSpace h = GradedSpace::atom_from_codes("H4", {"1", "g", "x", "gx"}, {0, 0, 0, 0}, spec->group_ptr());
  const GradedSpace hh = tensor_space(h, h), I = GradedSpace::unit();
  auto idx = [](int gp, int xp) { return static_cast<std::size_t>(gp + 2 * xp); };
  Mor m = make(hh, h, [&](SparseMatrix& s) {
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c)
          for (int d = 0; d < 2; ++d) {
            if (b + d >= 2) continue;
            // g^a x^b g^c x^d = (-1)^{bc} g^{a+c} x^{b+d}
            s.add(idx((a + c) % 2, b + d), idx(a, b) * 4 + idx(c, d), CycScalar(b * c != 0 ? -1 : 1));
          }
  });
  Mor eta = make(I, h, [&](SparseMatrix& s) { s.add(0, 0, CycScalar(1)); });
  Mor delta = make(h, hh, [&](SparseMatrix& s) {
    s.add(0, 0, CycScalar(1));
    s.add(idx(1, 0) * 4 + idx(1, 0), idx(1, 0), CycScalar(1));
    s.add(idx(0, 1) * 4 + idx(0, 0), idx(0, 1), CycScalar(1));
    s.add(idx(1, 0) * 4 + idx(0, 1), idx(0, 1), CycScalar(1));
    s.add(idx(1, 1) * 4 + idx(1, 0), idx(1, 1), CycScalar(1));
    s.add(idx(0, 0) * 4 + idx(1, 1), idx(1, 1), CycScalar(1));
  });
  Mor eps = make(h, I, [&](SparseMatrix& s) {
    s.add(0, 0, CycScalar(1));
    s.add(0, 1, CycScalar(1));
  });
  Mor S = make(h, h, [&](SparseMatrix& s) {
    s.add(0, 0, CycScalar(1));
    s.add(1, 1, CycScalar(1));
    s.add(idx(1, 1), idx(0, 1), CycScalar(-1));
    s.add(idx(0, 1), idx(1, 1), CycScalar(1));
  });
  return {"sweedler", {}, spec, HopfData("sweedler", m, eta, delta, eps, S), full_pass(true), ""};
}

std::map<std::string, bool> run_catalog_checks(const CatalogEntry& e, Report* out) {
  Report rep("catalog " + e.name);
  std::map<std::string, bool> got;
  for (const auto& [key, want] : e.expected) {
    (void)want;
    Report r;
    if (key == "algebra") r = check_algebra(e.hopf.algebra, e.name);
    else if (key == "coalgebra") r = check_coalgebra(e.hopf.coalgebra, e.name);
    else if (key == "bialgebra") r = check_bialgebra(*e.spec, e.hopf);
    else if (key == "antipode") r = check_antipode(e.hopf);
    else if (key == "symmetric-eval") {
      SymmetricEvaluation s = check_symmetric_evaluation(*e.spec, e.hopf.carrier());
      for (auto& rec : s.records) r.add(rec);
      got[key] = s.verdict;
      rep.merge(r);
      continue;
    } else {
      throw Error("unknown catalog check " + key);
    }
    got[key] = r.all_pass();
    rep.merge(r);
  }
  if (out) out->merge(rep);
  return got;
}

std::vector<CatalogInfo> catalog_list() {
  return {
      {"group_algebra", "n", "kZ_n, trivially graded"},
      {"function_algebra", "n", "functions on Z_n, trivially graded"},
      {"anyonic_line", "n", "C[ξ]/(ξ^n), |ξ| = 1, braiding ζ_n"},
      {"super_line", "", "anyonic_line(2)"},
      {"underline_group_algebra", "n", "kZ_n in degree 0 of the Z_n category"},
      {"sweedler", "", "4-dimensional Sweedler algebra, trivially graded"},
      {"anyonic_line_unbraided", "n", "negative control: unbraided binomial coproduct"},
  };
}

CatalogEntry catalog_lookup(const std::string& uri) {
  std::string s = uri;
  if (s.rfind("catalog:", 0) == 0) s = s.substr(8);
  std::string name = s;
  std::vector<int> args;
  auto open = s.find('(');
  if (open != std::string::npos) {
    if (s.back() != ')') throw ParseError("malformed catalog name '" + uri + "'");
    name = s.substr(0, open);
    std::string inner = s.substr(open + 1, s.size() - open - 2);
    std::size_t pos = 0;
    while (pos <= inner.size() && !inner.empty()) {
      auto comma = inner.find(',', pos);
      std::string tok = inner.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      try {
        std::size_t used = 0;
        args.push_back(std::stoi(tok, &used));
        while (used < tok.size() && std::isspace(static_cast<unsigned char>(tok[used]))) ++used;
        if (used != tok.size()) throw ParseError("");
      } catch (const std::exception&) {
        throw ParseError("bad catalog argument '" + tok + "' in '" + uri + "'");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  auto need = [&](std::size_t k) {
    if (args.size() != k) {
      throw ParseError(name + " takes " + std::to_string(k) + " argument(s), got " + std::to_string(args.size()));
    }
  };
  if (name == "group_algebra") {
    if (args.size() == 2) return group_algebra(args[0], args[1]);
    need(1);
    return group_algebra(args[0]);
  }
  if (name == "function_algebra") return need(1), function_algebra(args[0]);
  if (name == "anyonic_line") return need(1), anyonic_line(args[0]);
  if (name == "super_line") return need(0), super_line();
  if (name == "underline_group_algebra") return need(1), underline_group_algebra(args[0]);
  if (name == "underline_group_algebra_regular") return need(1), underline_group_algebra_regular(args[0]);
  if (name == "sweedler") return need(0), sweedler();
  if (name == "anyonic_line_unbraided") return need(1), anyonic_line_unbraided(args[0]);
  throw ParseError("unknown catalog entry '" + name + "'");
}

}  // namespace braidkit
