// Compares the serial reference verifier, the serial scan kernels, and the
// OpenMP scan kernels on representative workloads.

#include <chrono>
#include <cstdio>
#include <string>

#include "chroma/edge_coloring.hpp"
#include "chroma/generators.hpp"
#include "chroma/tuple_coloring.hpp"
#include "chroma/verifier.hpp"

using namespace chroma;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename Fn>
double time_ms(Fn&& fn) {
  fn(); // warm up caches and the OpenMP runtime
  auto start = Clock::now();
  fn();
  return ms_since(start);
}

void row(const std::string& name, double ref, double serial, double parallel) {
  std::printf("%-34s %10.1f %10.1f %10.1f %8.2fx\n", name.c_str(), ref, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  const int rect_n = quick ? 24 : 64;
  const int box_n = quick ? 16 : 40;

  std::printf("%-34s %10s %10s %10s %9s\n", "workload", "ref(ms)", "serial(ms)", "omp(ms)",
              "speedup");

  {
    PointSet s = random_point_set(rect_n, 2, 7, {true, true, false});
    EdgeColoring c = color_rectangle_edges(s);
    double ref = time_ms([&] {
      verify_edge_coloring_ref(s, FamilyKind::axis_rect(), c, 3, ThresholdKind::Points);
    });
    double serial = time_ms([&] {
      verify_edge_coloring(s, FamilyKind::axis_rect(), c, 3, ThresholdKind::Points,
                           ExecPolicy::Serial);
    });
    double parallel = time_ms([&] {
      verify_edge_coloring(s, FamilyKind::axis_rect(), c, 3, ThresholdKind::Points,
                           ExecPolicy::Parallel);
    });
    row("rect edge verify n=" + std::to_string(rect_n), ref, serial, parallel);
  }

  {
    PointSet s = random_point_set(box_n, 3, 11, {true, false, false});
    TupleColoring c = color_pairs_boxes(s, 2);
    const int m = 17; // 2^(2^2) + 1
    double serial = time_ms([&] {
      verify_tuple_coloring(s, FamilyKind::box_d(), c, m, VerifyMode::Polychromatic,
                            ExecPolicy::Serial);
    });
    double parallel = time_ms([&] {
      verify_tuple_coloring(s, FamilyKind::box_d(), c, m, VerifyMode::Polychromatic,
                            ExecPolicy::Parallel);
    });
    row("box pair verify d=3 n=" + std::to_string(box_n), -1.0, serial, parallel);
  }

  {
    PointSet s = convex_position_point_set(quick ? 7 : 21);
    double serial = time_ms([&] {
      exhaustive_impossibility(s, FamilyKind::halfplane(), 2, 2,
                               ImpossibilityTarget::DelaunayEdges, ThresholdKind::Edges, 1 << 24,
                               ExecPolicy::Serial);
    });
    double parallel = time_ms([&] {
      exhaustive_impossibility(s, FamilyKind::halfplane(), 2, 2,
                               ImpossibilityTarget::DelaunayEdges, ThresholdKind::Edges, 1 << 24,
                               ExecPolicy::Parallel);
    });
    row("halfplane impossibility search", -1.0, serial, parallel);
  }

  {
    double serial = time_ms([&] { verify_no_local_mapping(12, ExecPolicy::Serial); });
    double parallel = time_ms([&] { verify_no_local_mapping(12, ExecPolicy::Parallel); });
    row("triple-rule exhaustive scan", -1.0, serial, parallel);
  }

  return 0;
}
