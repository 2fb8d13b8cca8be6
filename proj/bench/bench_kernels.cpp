// Serial reference kernels against their OpenMP counterparts.

#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidkit/catalog.hpp"
#include "braidkit/double.hpp"
#include "braidkit/kernels.hpp"
#include "braidkit/report.hpp"

using namespace braidkit;

namespace {

SparseMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density, int order) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4), power(0, order - 1);
  SparseMatrix m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (coin(rng) >= density) continue;
      CycScalar v = CycScalar(mpq_class(num(rng), den(rng))) * CycScalar::root_of_unity(order, power(rng));
      if (!v.is_zero()) m.add(i, j, v);
    }
  }
  return m;
}

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    Stopwatch sw;
    f();
    best = std::min(best, sw.seconds());
  }
  return best;
}

struct Row {
  std::string name;
  std::string shape;
  double serial;
  double parallel;
  bool equal;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidkit kernel benchmark: serial reference vs OpenMP"};
  std::size_t n = 192;
  int reps = 3;
  int order = 5;
  double density = 0.08;
  unsigned seed = 7;
  int threads = 0;
  bool as_json = false;
  app.add_option("--size", n, "matrix side for multiply");
  app.add_option("--reps", reps, "repetitions, best time kept");
  app.add_option("--order", order, "cyclotomic order of the scalars");
  app.add_option("--density", density, "fraction of nonzero entries");
  app.add_option("--seed", seed, "RNG seed");
  app.add_option("--threads", threads, "parallel thread cap (default: BRAIDKIT_THREADS or all)");
  app.add_flag("--json", as_json, "machine-readable output");
  CLI11_PARSE(app, argc, argv);

  kernels::configure_threads_from_env();
  if (threads > 0) kernels::set_max_threads(threads);
  const int used = kernels::max_threads();

  std::mt19937 rng(seed);
  std::vector<Row> rows;

  {
    SparseMatrix a = random_matrix(rng, n, n, density, order);
    SparseMatrix b = random_matrix(rng, n, n, density, order);
    SparseMatrix s, p;
    double ts = best_of(reps, [&] { s = kernels::serial::multiply(a, b); });
    double tp = best_of(reps, [&] { p = kernels::parallel::multiply(a, b); });
    rows.push_back({"multiply", std::to_string(n) + "x" + std::to_string(n), ts, tp, s == p});
  }
  {
    const std::size_t k = std::max<std::size_t>(8, n / 6);
    SparseMatrix a = random_matrix(rng, k, k, 0.3, order);
    SparseMatrix b = random_matrix(rng, k, k, 0.3, order);
    SparseMatrix s, p;
    double ts = best_of(reps, [&] { s = kernels::serial::kronecker(a, b); });
    double tp = best_of(reps, [&] { p = kernels::parallel::kronecker(a, b); });
    rows.push_back({"kronecker", std::to_string(k) + "x" + std::to_string(k) + " (x) same", ts, tp, s == p});
  }
  {
    // end to end: the full report of the Sweedler double (dimension 16)
    CatalogEntry sw = sweedler();
    Report rs, rp;
    kernels::set_max_threads(1);
    double ts = best_of(1, [&] { rs = double_report(*sw.spec, sw.hopf, drinfeld_double(*sw.spec, sw.hopf)); });
    kernels::set_max_threads(used);
    double tp = best_of(1, [&] { rp = double_report(*sw.spec, sw.hopf, drinfeld_double(*sw.spec, sw.hopf)); });
    bool same = rs.records().size() == rp.records().size();
    for (std::size_t i = 0; same && i < rs.records().size(); ++i) same = rs.records()[i].pass == rp.records()[i].pass;
    rows.push_back({"D(sweedler) report", "dim 16", ts, tp, same});
  }

  bool all_equal = true;
  if (as_json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows) {
      j.push_back({{"kernel", r.name}, {"shape", r.shape}, {"serial_s", r.serial}, {"parallel_s", r.parallel},
                   {"speedup", r.serial / r.parallel}, {"threads", used}, {"equal", r.equal}});
      all_equal = all_equal && r.equal;
    }
    std::printf("%s\n", j.dump(2).c_str());
  } else {
    std::printf("threads: %d, scalars in Q(zeta_%d), seed %u\n", used, order, seed);
    std::printf("%-20s %-22s %12s %12s %8s %6s\n", "kernel", "shape", "serial s", "parallel s", "speedup", "equal");
    for (const auto& r : rows) {
      std::printf("%-20s %-22s %12.4f %12.4f %8.2f %6s\n", r.name.c_str(), r.shape.c_str(), r.serial, r.parallel,
                  r.serial / r.parallel, r.equal ? "yes" : "NO");
      all_equal = all_equal && r.equal;
    }
  }
  return all_equal ? 0 : 1;
}
