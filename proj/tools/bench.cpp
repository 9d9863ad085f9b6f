// Times the serial and OpenMP kernels on a few tensor products.
// usage: bench [threads]
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "qwc/cuts.hpp"
#include "qwc/io.hpp"
#include "qwc/mutation.hpp"
#include "qwc/tensor.hpp"

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) omp_set_num_threads(std::atoi(argv[1]));
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-12s %8s %10s %10s %10s %10s\n", "product", "cuts", "enum ser", "enum par", "graph ser", "graph par");
  for (auto [l, r] : {std::pair{"A3", "B2"}, {"D4", "A3"}, {"E6", "F4"}, {"E7", "B3"}, {"E8", "G2"}}) {
    const auto t = qwc::tensor_qwc(qwc::dynkin_quiver(qwc::parse_dynkin_spec(l)),
                                   qwc::dynkin_quiver(qwc::parse_dynkin_spec(r)));
    std::vector<qwc::Cut> ser, par;
    const double es = seconds([&] { ser = qwc::enumerate_cuts_serial(t.qwc); });
    const double ep = seconds([&] { par = qwc::enumerate_cuts(t.qwc); });
    if (ser != par) {
      std::fprintf(stderr, "serial and parallel cut lists differ for %s x %s\n", l, r);
      return 1;
    }
    const double gs = seconds([&] { qwc::mutation_graph_serial(t.qwc, ser); });
    const double gp = seconds([&] { qwc::mutation_graph(t.qwc, par); });
    std::printf("%-12s %8zu %10.3f %10.3f %10.3f %10.3f\n", (std::string(l) + "x" + r).c_str(), par.size(), es, ep,
                gs, gp);
  }
}
