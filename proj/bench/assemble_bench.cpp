// Times the parallel covariance assembly against the serial reference and
// checks that the two produce bit-identical matrices.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <string>

#include "vacent/covariance.hpp"

using namespace vacent;

namespace {

template <class F>
double time_once(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void run_case(const char* name, const RegionConfig& cfg) {
  CovarianceMatrix serial, parallel;
  const double t_serial = time_once([&] { serial = assemble_reference(cfg); });
  const double t_parallel = time_once([&] { parallel = assemble(cfg); });
  const bool identical = serial.mat == parallel.mat;
  std::printf("%-28s dim=%4d  serial %8.3fs  parallel %8.3fs  speedup %5.2fx  %s\n", name,
              serial.dim(), t_serial, t_parallel, t_serial / t_parallel,
              identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int n = argc > 1 ? std::atoi(argv[1]) : 24;
  std::printf("threads: %d\n", omp_get_max_threads());

  RegionConfig flat2;
  flat2.geometry = Geometry::flat();
  flat2.region_a = Interval{0.0, 1.0};
  flat2.region_b = Interval{1.25, 2.25};
  flat2.n_modes = n;
  run_case("flat two-region", flat2);

  RegionConfig milne2;
  milne2.geometry = Geometry::milne(1.0);
  milne2.region_a = Interval{-1.2, -0.2};
  milne2.region_b = Interval{0.2, 1.2};
  milne2.n_modes = n;
  run_case("milne two-region", milne2);

  RegionConfig flat1;
  flat1.geometry = Geometry::flat();
  flat1.region_a = Interval{0.0, 1.0};
  flat1.n_modes = 2 * n;
  run_case("flat single region", flat1);
  return 0;
}
