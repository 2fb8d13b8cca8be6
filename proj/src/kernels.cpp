#include "braidkit/kernels.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "braidkit/error.hpp"

namespace braidkit {

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_[i].push_back({static_cast<std::uint32_t>(i), CycScalar(1)});
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void normalize_column(std::vector<Entry>& col) {
  if (col.empty()) return;
  std::stable_sort(col.begin(), col.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < col.size();) {
    std::size_t j = i + 1;
    CycScalar acc = std::move(col[i].value);
    while (j < col.size() && col[j].row == col[i].row) {
      acc += col[j].value;
      ++j;
    }
    if (!acc.is_zero()) {
      col[out].row = col[i].row;
      col[out].value = std::move(acc);
      ++out;
    }
    i = j;
  }
  col.resize(out);
}

void SparseMatrix::set_column(std::size_t j, std::vector<Entry> entries) {
  for (const auto& e : entries) {
    if (e.row >= rows_) throw Error("row index out of range");
  }
  normalize_column(entries);
  cols_.at(j) = std::move(entries);
}

void SparseMatrix::add(std::size_t i, std::size_t j, const CycScalar& v) {
  if (i >= rows_ || j >= cols_.size()) throw Error("matrix index out of range");
  if (v.is_zero()) return;
  auto& col = cols_[j];
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != col.end() && it->row == i) {
    it->value += v;
    if (it->value.is_zero()) col.erase(it);
  } else {
    col.insert(it, Entry{static_cast<std::uint32_t>(i), v});
  }
}

CycScalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& col = cols_.at(j);
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry& e, std::size_t r) { return e.row < r; });
  if (it != col.end() && it->row == i) return it->value;
  return CycScalar(0);
}

SparseMatrix SparseMatrix::scaled(const CycScalar& s) const {
  SparseMatrix r(rows_, cols_.size());
  if (s.is_zero()) return r;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    auto& out = r.cols_[j];
    out.reserve(cols_[j].size());
    for (const auto& e : cols_[j]) out.push_back({e.row, e.value * s});
  }
  return r;
}

SparseMatrix SparseMatrix::plus(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols() != o.cols()) throw Error("matrix shape mismatch in sum");
  SparseMatrix r(rows_, cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    std::vector<Entry> col = cols_[j];
    col.insert(col.end(), o.cols_[j].begin(), o.cols_[j].end());
    normalize_column(col);
    r.cols_[j] = std::move(col);
  }
  return r;
}

SparseMatrix SparseMatrix::minus(const SparseMatrix& o) const { return plus(o.scaled(CycScalar(-1))); }

SparseMatrix SparseMatrix::transposed() const {
  SparseMatrix r(cols_.size(), rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    for (const auto& e : cols_[j]) r.cols_[e.row].push_back({static_cast<std::uint32_t>(j), e.value});
  }
  return r;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& x = a.cols_[j];
    const auto& y = b.cols_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].row != y[k].row || x[k].value != y[k].value) return false;
    }
  }
  return true;
}

namespace kernels {

namespace {

int g_max_threads = 0;  // 0: OpenMP default

std::vector<Entry> multiply_column(const SparseMatrix& a, const std::vector<Entry>& bcol) {
  std::vector<Entry> out;
  for (const auto& be : bcol) {
    for (const auto& ae : a.column(be.row)) out.push_back({ae.row, ae.value * be.value});
  }
  normalize_column(out);
  return out;
}

std::vector<Entry> kron_column(const std::vector<Entry>& acol, const std::vector<Entry>& bcol, std::size_t p) {
  std::vector<Entry> out;
  out.reserve(acol.size() * bcol.size());
  for (const auto& ae : acol) {
    for (const auto& be : bcol) {
      out.push_back({static_cast<std::uint32_t>(ae.row * p + be.row), ae.value * be.value});
    }
  }
  return out;  // already sorted, no duplicates, no zeros
}

void check_shapes(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error("matrix shape mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

void check_kron_size(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() * b.rows() > 0xffffffffULL || a.cols() * b.cols() > 0xffffffffULL) {
    throw Error("tensor product dimension exceeds 2^32");
  }
}

}  // namespace

namespace serial {

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  check_shapes(a, b);
  SparseMatrix r(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) r.set_column(j, multiply_column(a, b.column(j)));
  return r;
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  check_kron_size(a, b);
  SparseMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  const std::size_t q = b.cols();
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t l = 0; l < q; ++l) r.set_column(j * q + l, kron_column(a.column(j), b.column(l), b.rows()));
  }
  return r;
}

}  // namespace serial

namespace parallel {

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  check_shapes(a, b);
  const long n = static_cast<long>(b.cols());
  std::vector<std::vector<Entry>> cols(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (long j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = multiply_column(a, b.column(static_cast<std::size_t>(j)));
  SparseMatrix r(a.rows(), b.cols());
  for (long j = 0; j < n; ++j) r.set_column(static_cast<std::size_t>(j), std::move(cols[static_cast<std::size_t>(j)]));
  return r;
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  check_kron_size(a, b);
  const std::size_t q = b.cols();
  const long n = static_cast<long>(a.cols() * q);
  std::vector<std::vector<Entry>> cols(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (long c = 0; c < n; ++c) {
    auto uc = static_cast<std::size_t>(c);
    cols[uc] = kron_column(a.column(uc / q), b.column(uc % q), b.rows());
  }
  SparseMatrix r(a.rows() * b.rows(), a.cols() * q);
  for (long c = 0; c < n; ++c) r.set_column(static_cast<std::size_t>(c), std::move(cols[static_cast<std::size_t>(c)]));
  return r;
}

}  // namespace parallel

void set_max_threads(int n) {
  g_max_threads = n > 0 ? n : 0;
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#endif
}

int max_threads() {
#ifdef _OPENMP
  return g_max_threads > 0 ? g_max_threads : omp_get_max_threads();
#else
  return 1;
#endif
}

void configure_threads_from_env() {
  const char* v = std::getenv("BRAIDKIT_THREADS");
  if (v == nullptr) return;
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end != v && *end == '\0' && n > 0 && n < 4096) set_max_threads(static_cast<int>(n));
}

namespace {
constexpr std::size_t kParallelWork = 4096;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (max_threads() > 1 && b.nnz() >= kParallelWork) return parallel::multiply(a, b);
  return serial::multiply(a, b);
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
  if (max_threads() > 1 && a.nnz() * b.nnz() >= kParallelWork) return parallel::kronecker(a, b);
  return serial::kronecker(a, b);
}

namespace {

// r += c * p, both sorted by column.
void axpy(SparseRow& r, const CycScalar& c, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, k = 0;
  while (i < r.size() || k < p.size()) {
    if (k == p.size() || (i < r.size() && r[i].first < p[k].first)) {
      out.push_back(std::move(r[i++]));
    } else if (i == r.size() || p[k].first < r[i].first) {
      out.emplace_back(p[k].first, c * p[k].second);
      ++k;
    } else {
      CycScalar v = r[i].second + c * p[k].second;
      if (!v.is_zero()) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++k;
    }
  }
  r = std::move(out);
}

CycScalar coefficient(const SparseRow& r, std::uint32_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return it->second;
  return CycScalar(0);
}

// Reduced row echelon form restricted to pivots in columns < pivot_limit.
// Returns pivot rows keyed by their pivot column; rows that reduce to a
// combination of columns >= pivot_limit only are appended to `residual`.
struct Echelon {
  std::vector<std::pair<std::uint32_t, SparseRow>> pivots;  // (pivot col, row)
  std::vector<long> row_of_col;                              // -1 if free
  std::vector<SparseRow> residual;
};

Echelon eliminate(std::vector<SparseRow> rows, std::size_t pivot_limit) {
  Echelon ech;
  ech.row_of_col.assign(pivot_limit, -1);
  for (auto& row : rows) {
    SparseRow r = std::move(row);
    // Eliminate existing pivot columns; pivot rows are mutually reduced.
    std::vector<std::pair<long, CycScalar>> hits;
    for (const auto& [c, v] : r) {
      if (c < pivot_limit && ech.row_of_col[c] >= 0) hits.emplace_back(ech.row_of_col[c], v);
    }
    for (const auto& [p, v] : hits) axpy(r, -v, ech.pivots[static_cast<std::size_t>(p)].second);
    if (r.empty()) continue;
    if (r.front().first >= pivot_limit) {
      ech.residual.push_back(std::move(r));
      continue;
    }
    // Pick the shortest-looking pivot: first column below the limit.
    std::uint32_t pc = r.front().first;
    CycScalar inv = r.front().second.inv();
    for (auto& e : r) e.second *= inv;
    for (auto& [col, prow] : ech.pivots) {
      CycScalar v = coefficient(prow, pc);
      if (!v.is_zero()) axpy(prow, -v, r);
    }
    ech.row_of_col[pc] = static_cast<long>(ech.pivots.size());
    ech.pivots.emplace_back(pc, std::move(r));
  }
  return ech;
}

}  // namespace

std::optional<std::vector<CycScalar>> solve(std::vector<SparseRow> rows, std::vector<CycScalar> rhs,
                                            std::size_t unknowns) {
  if (rows.size() != rhs.size()) throw Error("solve: row/rhs count mismatch");
  const auto rcol = static_cast<std::uint32_t>(unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::sort(rows[i].begin(), rows[i].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& e : rows[i]) {
      if (e.first >= unknowns) throw Error("solve: column out of range");
    }
    if (!rhs[i].is_zero()) rows[i].emplace_back(rcol, -rhs[i]);
  }
  Echelon ech = eliminate(std::move(rows), unknowns);
  if (!ech.residual.empty()) return std::nullopt;
  std::vector<CycScalar> x(unknowns, CycScalar(0));
  for (const auto& [pc, prow] : ech.pivots) {
    // row: x_pc + sum(free) - rhs = 0 with free variables zero
    x[pc] = -coefficient(prow, rcol);
  }
  return x;
}

std::optional<SparseMatrix> inverse(const SparseMatrix& a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw Error("inverse of a non-square matrix");
  std::vector<SparseRow> rows(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& e : a.column(j)) rows[e.row].emplace_back(static_cast<std::uint32_t>(j), e.value);
  }
  for (std::size_t i = 0; i < n; ++i) rows[i].emplace_back(static_cast<std::uint32_t>(n + i), CycScalar(1));
  Echelon ech = eliminate(std::move(rows), n);
  if (ech.pivots.size() != n) return std::nullopt;
  SparseMatrix inv(n, n);
  for (const auto& [pc, prow] : ech.pivots) {
    for (const auto& [c, v] : prow) {
      if (c >= n) inv.add(pc, c - n, v);
    }
  }
  return inv;
}

}  // namespace kernels
}  // namespace braidkit
