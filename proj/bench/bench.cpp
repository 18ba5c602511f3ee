// Serial reference vs OpenMP kernels on fixed seeded inputs.
// usage: bench [threads] [repeats]

#include "grit/embedding.hpp"
#include "grit/invgen.hpp"
#include "grit/sampling.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

using namespace grit;

namespace {

template <class F>
double best_ms(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

template <class R>
void row(const char* name, int repeats, const std::function<R(Exec)>& kernel) {
    R a, b;
    const double s = best_ms(repeats, [&] { a = kernel(Exec::serial); });
    const double p = best_ms(repeats, [&] { b = kernel(Exec::parallel); });
    std::printf("%-34s %10.2f %10.2f %8.2fx  %s\n", name, s, p, s / p, a == b ? "same" : "DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    const int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_num_procs();
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;
    omp_set_num_threads(threads < 1 ? 1 : threads);
    std::printf("threads %d, best of %d\n", omp_get_max_threads(), repeats);
    std::printf("%-34s %10s %10s %9s\n", "kernel", "serial ms", "omp ms", "speedup");

    Sampler s(7);
    const auto g4 = make_jet_group(4);
    const QMatrix a4 = s.invertible(4), g = s.invertible(4);
    const auto dense = plucker<Rational>(g4, a4, Exec::serial);

    row<QMultiVector>("plucker (gn4)", repeats, [&](Exec e) { return plucker<Rational>(g4, a4, e); });
    row<QMultiVector>("gl_action (gn4, dense point)", repeats, [&](Exec e) { return gl_action(g, dense, e); });
    row<QMultiVector>("lie_action (gn4, dense point)", repeats, [&](Exec e) { return lie_action(g, dense, e); });
    const auto gm = generator_matrix(make_jet_group(3));
    row<std::vector<Polynomial>>("initial minors (gn3, s <= 3)", repeats, [&](Exec e) {
        std::vector<Polynomial> v;
        for (auto& m : initial_segment_minors(gm, 3, false, e)) v.push_back(std::move(m.value));
        return v;
    });
}
