// Compares the OpenMP entry points against their serial references on
// desk-scale inputs. Not a correctness test (ctest covers agreement);
// this just reports wall times.
#include <chrono>
#include <cstdio>

#include "carnot/equisolve.hpp"
#include "carnot/freenilp.hpp"

namespace {

template <typename F>
double time_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
  {
    auto F = freenilp::build_free(4, 5);
    const auto& L = F.algebra();
    std::printf("jacobi scan, free algebra on 4 generators of step 5 (dim %zu)\n",
                F.dim());
    bool ok_p = false, ok_s = false;
    double tp = time_of([&] { ok_p = liecore::jacobi_check(L).pass; });
    double ts = time_of([&] { ok_s = liecore::jacobi_check_serial(L).pass; });
    std::printf("  parallel: %.3fs (pass=%d)   serial: %.3fs (pass=%d)\n", tp, ok_p,
                ts, ok_s);
  }
  {
    using namespace equisolve;
    auto adj = adjoint_rep(5, GroupTag::O);
    auto vec = vector_rep(5, GroupTag::O);
    auto src = tensor_rep(adj, vec);
    std::printf("constraint assembly, tensor module dim %zu -> vector dim %zu\n",
                src.module_dim, vec.module_dim);
    ratlin::Mat a, b;
    double tp = time_of([&] { a = assemble_constraints(src, vec); });
    double ts = time_of([&] { b = assemble_constraints_serial(src, vec); });
    std::printf("  parallel: %.3fs   serial: %.3fs   identical=%d\n", tp, ts,
                a == b);
  }
  return 0;
}
