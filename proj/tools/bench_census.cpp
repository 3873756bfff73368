// Compares the serial reference enumeration against the OpenMP kernels and
// checks that both produce identical results.
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "invgraph/enumerate.hpp"
#include "invgraph/graph6.hpp"
#include "invgraph/report.hpp"

using namespace invgraph;

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

struct Task {
  std::string name;
  // Returns a digest of the result so the two modes can be compared.
  std::function<std::string(ExecMode)> run;
};

std::string graphs_digest(const std::vector<SimpleGraph>& graphs) {
  std::string out;
  for (const SimpleGraph& g : graphs) {
    out += to_graph6(g);
    out += '\n';
  }
  return out;
}

void run_task(const Task& task, int reps) {
  double best_serial = 1e300, best_parallel = 1e300;
  std::string serial_digest, parallel_digest;
  for (int r = 0; r < reps; ++r) {
    double t0 = now();
    serial_digest = task.run(ExecMode::serial);
    best_serial = std::min(best_serial, now() - t0);
    t0 = now();
    parallel_digest = task.run(ExecMode::parallel);
    best_parallel = std::min(best_parallel, now() - t0);
  }
  bool same = serial_digest == parallel_digest;
  std::printf("%-24s %10.3fs %10.3fs %8.2fx   %s\n", task.name.c_str(), best_serial,
              best_parallel, best_serial / best_parallel, same ? "identical" : "MISMATCH");
  if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  int reps = 3;
  bool include_8 = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--reps") == 0 && i + 1 < argc) {
      reps = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--include-8") == 0) {
      include_8 = true;
    } else {
      std::fprintf(stderr, "usage: %s [--reps N] [--include-8]\n", argv[0]);
      return 2;
    }
  }
  if (reps < 1) reps = 1;

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel mode falls back to serial\n");
#endif
  std::printf("%-24s %11s %11s %9s\n", "task", "serial", "parallel", "speedup");

  std::vector<Task> tasks = {
      {"connected_graphs(6)", [](ExecMode m) { return graphs_digest(connected_graphs(6, m)); }},
      {"unique_pm_graphs(6)", [](ExecMode m) { return graphs_digest(unique_pm_graphs(6, m)); }},
      {"census(6)", [](ExecMode m) { return to_json(census(6, m)).dump(); }},
      {"connected_graphs(7)", [](ExecMode m) { return graphs_digest(connected_graphs(7, m)); }},
  };
  if (include_8)
    tasks.push_back(
        {"unique_pm_graphs(8)", [](ExecMode m) { return graphs_digest(unique_pm_graphs(8, m)); }});

  for (const Task& t : tasks) run_task(t, reps);
  return 0;
}
