#include "gkm/basis.hpp"
#include "gkm/cohomology.hpp"
#include "gkm/fixtures.hpp"
#include "gkm/localization.hpp"
#include "gkm/moment_graph.hpp"
#include "gkm/polynomial.hpp"

#include <benchmark/benchmark.h>

#include <memory>

namespace {

using namespace gkm;

GraphPtr share(MomentGraph g) { return std::make_shared<const MomentGraph>(std::move(g)); }

Polynomial dense_symmetric(int rank, int degree) {
    Polynomial sum = Polynomial::constant(rank, Rational(1));
    for (int v = 0; v < rank; ++v) sum += Polynomial::variable(rank, v);
    return sum.pow(static_cast<unsigned>(degree));
}

void polynomial_multiply(benchmark::State& state) {
    int rank = static_cast<int>(state.range(0));
    Polynomial a = dense_symmetric(rank, 4);
    Polynomial b = dense_symmetric(rank, 3);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(polynomial_multiply)->Arg(3)->Arg(5)->Arg(7);

void flowup_projective(benchmark::State& state) {
    GraphPtr g = share(fixtures::projective_space(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(flowup_basis(g));
}
BENCHMARK(flowup_projective)->Arg(4)->Arg(5);

void theta_projective(benchmark::State& state) {
    GraphPtr g = share(fixtures::projective_space(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(theta_basis(g));
}
BENCHMARK(theta_projective)->Arg(4)->Arg(5);

void theta_flag(benchmark::State& state) {
    GraphPtr g = share(fixtures::flag_s3());
    for (auto _ : state) benchmark::DoNotOptimize(theta_basis(g));
}
BENCHMARK(theta_flag);

void integrate_product(benchmark::State& state) {
    GraphPtr g = share(fixtures::product_graph(fixtures::projective_space(1),
                                               fixtures::projective_space(2)));
    BasisFamily thetas = theta_basis(g);
    CohomologyClass c = thetas.at(2) * thetas.at(4);
    for (auto _ : state) benchmark::DoNotOptimize(integrate(c));
}
BENCHMARK(integrate_product);

void expand_flag(benchmark::State& state) {
    GraphPtr g = share(fixtures::flag_s3());
    BasisFamily thetas = theta_basis(g);
    CohomologyClass c = thetas.at(3) * thetas.at(4);
    for (auto _ : state) benchmark::DoNotOptimize(thetas.expand(c));
}
BENCHMARK(expand_flag);

} // namespace

BENCHMARK_MAIN();
