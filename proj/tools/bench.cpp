#include <chrono>
#include <cstdio>
#include <string>

#include "hardcore/analysis.hpp"
#include "hardcore/parallel.hpp"
#include "hardcore/regions.hpp"

// Times the grid-parallel kernels against their serial twins and insists on
// bit-identical results, since the parallel paths write per index.

namespace {

using hardcore::Exec;

template <typename F>
double ms(F&& body) {
  auto start = std::chrono::steady_clock::now();
  body();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

int failures = 0;

void report(const char* name, double serial_ms, double parallel_ms,
            bool identical) {
  std::printf("%-24s serial %9.2f ms   parallel %9.2f ms   x%.2f   %s\n", name,
              serial_ms, parallel_ms,
              parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
              identical ? "identical" : "MISMATCH");
  if (!identical) ++failures;
}

}  // namespace

int main() {
  {
    std::vector<hardcore::BoundarySample> a, b;
    double ts = ms([&] { a = hardcore::new_domain_boundary(9, 200000, Exec::serial); });
    double tp = ms([&] { b = hardcore::new_domain_boundary(9, 200000, Exec::parallel); });
    bool same = a.size() == b.size();
    for (std::size_t i = 0; same && i < a.size(); ++i)
      same = a[i].beta == b[i].beta && a[i].t_value == b[i].t_value &&
             a[i].s_value == b[i].s_value;
    report("domain boundary", ts, tp, same);
  }
  {
    hardcore::SectionReport a, b;
    double ts = ms([&] { a = hardcore::verify_inequalities(2, 64, 2049, Exec::serial); });
    double tp = ms([&] { b = hardcore::verify_inequalities(2, 64, 2049, Exec::parallel); });
    bool same = a.checks.size() == b.checks.size() &&
                a.total_violations == b.total_violations &&
                a.g_concave_on_grid == b.g_concave_on_grid &&
                a.s_convex_on_grid == b.s_convex_on_grid;
    for (std::size_t i = 0; same && i < a.checks.size(); ++i)
      same = a.checks[i].name == b.checks[i].name &&
             a.checks[i].d == b.checks[i].d &&
             a.checks[i].violations == b.checks[i].violations &&
             a.checks[i].worst_margin == b.checks[i].worst_margin;
    report("inequality grid", ts, tp, same);
  }
  {
    hardcore::ContainmentReport a, b;
    double ts = ms([&] { a = hardcore::region_containment_scan(9, 2048, Exec::serial); });
    double tp = ms([&] { b = hardcore::region_containment_scan(9, 2048, Exec::parallel); });
    bool same = a.checks == b.checks &&
                a.counterexamples.size() == b.counterexamples.size();
    for (std::size_t i = 0; same && i < a.counterexamples.size(); ++i)
      same = a.counterexamples[i].relation == b.counterexamples[i].relation &&
             a.counterexamples[i].lam == b.counterexamples[i].lam;
    report("containment scan", ts, tp, same);
  }
  return failures == 0 ? 0 : 1;
}
