// Benchmark comparing the serial reference kernels against their OpenMP
// variants: coherence scan, degree-2 image counting, quadratic-generation
// sweep, face enumeration, and the LP convex-position check.

#include <chrono>
#include <functional>
#include <iostream>

#include "matchfield/face_lattice.hpp"
#include "matchfield/parallel.hpp"
#include "matchfield/pideal.hpp"
#include "matchfield/polytope.hpp"
#include "matchfield/sagbi.hpp"
#include "matchfield/weights.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

void report(const std::string& name, double serial_ms, double parallel_ms) {
  std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms << " ms ("
            << mf::thread_count() << " threads, speedup "
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x)\n";
}

}  // namespace

int main() {
  using namespace mf;

  {
    WeightMatrix m = weight_matrix_block(7, 3);
    MatchingField field = MatchingField::block(7, 3);
    double s = time_ms([&] { coherence_scan_serial(m, field); });
    double p = time_ms([&] { coherence_scan_parallel(m, field); });
    report("coherence scan n=7", s, p);
  }
  {
    MatchingField field = MatchingField::block(6, 2);
    double s = time_ms([&] { dim_degree2_initial_algebra_serial(field); });
    double p = time_ms([&] { dim_degree2_initial_algebra_parallel(field); });
    report("degree-2 image count n=6", s, p);
  }
  {
    MatchingField field = MatchingField::block(5, 2);
    double s = time_ms([&] { quadratic_generation_scan_serial(field, 3); });
    double p = time_ms([&] { quadratic_generation_scan_parallel(field, 3); });
    report("quadratic generation sweep n=5", s, p);
  }
  {
    ConvexHull hull = convex_hull(matching_field_polytope(5, 2).points);
    double s = time_ms([&] { face_lattice_serial(hull); });
    double p = time_ms([&] { face_lattice_parallel(hull); });
    report("face enumeration n=5 ell=2", s, p);
  }
  {
    auto points = matching_field_polytope(6, 3).points;
    double s = time_ms([&] { vertex_flags_serial(points); });
    double p = time_ms([&] { vertex_flags_parallel(points); });
    report("convex position check n=6", s, p);
  }
  return 0;
}
