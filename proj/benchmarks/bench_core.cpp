#include <benchmark/benchmark.h>

#include "mcf/candidates.hpp"
#include "mcf/expansion.hpp"
#include "mcf/parse.hpp"

using namespace mcf;

namespace {

FieldPtr cubic_field() {
    static FieldPtr k =
        NumberField::make(parse_polynomial("x^3 + x^2 - 2*x - 1"), RootSelector{2});
    return k;
}

void ElementMultiply(benchmark::State& state) {
    auto k = cubic_field();
    FieldElement a = parse_element(k, "3/2*y^2 - y + 7");
    FieldElement b = parse_element(k, "y^2 + 5*y - 2/3");
    for (auto _ : state) {
        FieldElement c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(ElementMultiply);

void ElementSign(benchmark::State& state) {
    auto k = cubic_field();
    // small but not tiny: forces a few bisection rounds
    FieldElement a = parse_element(k, "y^2 - y - 9/25");
    for (auto _ : state) {
        int s = a.sign();
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(ElementSign);

void Determinant(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rat(static_cast<long>((i * 7 + j * 13) % 19) - 9,
                             static_cast<long>(1 + (i + j) % 4));
    for (auto _ : state) {
        Rat d = det(m);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(Determinant)->Arg(3)->Arg(5)->Arg(8);

void BrunExpansion(benchmark::State& state) {
    auto k = cubic_field();
    auto v = parse_vector(k, "y^2, y, 1");
    for (auto _ : state) {
        Expansion e = expand(k, v, Algorithm::brun, 100);
        benchmark::DoNotOptimize(e.steps.size());
    }
}
BENCHMARK(BrunExpansion);

void JpaExpansionCbrt2(benchmark::State& state) {
    auto k = NumberField::make(parse_polynomial("x^3 - 2"), RootSelector{0});
    auto v = parse_vector(k, "1, y, y^2");
    for (auto _ : state) {
        Expansion e = expand(k, v, Algorithm::jpa, 100);
        benchmark::DoNotOptimize(e.steps.size());
    }
}
BENCHMARK(JpaExpansionCbrt2);

void QFromPowers(benchmark::State& state) {
    ExactMatrix m = parse_matrix("[[20,45,16],[16,36,13],[13,29,10]]");
    for (auto _ : state) {
        QTuple q = q_from_powers(m, 2);
        benchmark::DoNotOptimize(q.mats.size());
    }
}
BENCHMARK(QFromPowers);

void CandidateGrid(benchmark::State& state) {
    auto k = cubic_field();
    FieldBasis basis(k, parse_vector(k, "y^2, y, 1"));
    UnitSystem units = verify_units(k, parse_vector(k, "-1 + y + y^2; 2 - y^2"));
    long bound = state.range(0);
    for (auto _ : state) {
        CandidateEnumeration en = enumerate_candidates(basis, units, bound);
        benchmark::DoNotOptimize(en.candidates.size());
    }
}
BENCHMARK(CandidateGrid)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
