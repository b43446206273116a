// Timing harness for the three kernels that carry OpenMP splits: the
// transform, the inversion, and the pairing. Each is run against its
// single-threaded reference on the same input; exactness means the outputs
// must agree to the bit, which is checked alongside the timings.

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ladder/fock.hpp"
#include "ladder/inversion.hpp"
#include "ladder/transform.hpp"

using namespace ladder;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FockPoly random_grade(std::mt19937_64& gen, int p, int q, int n, int terms, int max_extra) {
  FockPoly f;
  f.p = p;
  f.q = q;
  std::uniform_int_distribution<int> extra(0, max_extra);
  std::uniform_int_distribution<int> num(1, 9);
  std::uniform_int_distribution<int> den(1, 9);
  auto tuple = [&](int dim, int w) {
    std::vector<int> e(static_cast<size_t>(dim), 0);
    std::uniform_int_distribution<int> slot(0, dim - 1);
    for (int k = 0; k < w; ++k) ++e[static_cast<size_t>(slot(gen))];
    return MultiIndex(std::move(e));
  };
  for (int t = 0; t < terms; ++t) {
    int a = extra(gen);
    ExactComplex c(rat_frac(num(gen), den(gen)));
    fock_add_term(f, {tuple(p, a), tuple(q, a + n)}, c);
  }
  return f;
}

template <class Out, class Par, class Ser>
void race(const std::string& label, const std::string& shape, Par par, Ser ser) {
  auto t0 = std::chrono::steady_clock::now();
  Out a = par();
  double tp = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  Out b = ser();
  double ts = seconds_since(t0);

  std::cout << std::left << std::setw(10) << label << shape << "  parallel " << std::fixed
            << std::setprecision(3) << tp << "s  serial " << ts << "s  speedup " << std::setprecision(2)
            << (tp > 0 ? ts / tp : 0.0) << "x  " << (a == b ? "outputs match" : "OUTPUTS DIFFER")
            << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::atoi(argv[1]) : 1;
  if (scale < 1) scale = 1;

#ifdef _OPENMP
  std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "threads: 1 (compiled without OpenMP)\n";
#endif

  std::mt19937_64 gen(20240816);

  {
    // Margin-table enumeration dominates once p > 1; this is the heavy one.
    FockPoly f = random_grade(gen, 3, 4, 3, 2000 * scale, 10);
    race<DiskSection>("transform", "p=3 q=4 n=3 terms=" + std::to_string(2000 * scale),
                      [&] { return phi(f); }, [&] { return phi_serial(f); });
  }

  {
    FockPoly f = random_grade(gen, 1, 4, 4, 120000 * scale, 14);
    DiskSection s = phi(f);
    race<FockPoly>("invert", "q=4 n=4 terms=" + std::to_string(120000 * scale),
                   [&] { return invert(s); }, [&] { return invert_serial(s); });
    race<ExactComplex>("pairing", "q=4 n=4 terms=" + std::to_string(120000 * scale),
                       [&] { return pairing(s, s); }, [&] { return pairing_serial(s, s); });
  }

  return 0;
}
