#include <benchmark/benchmark.h>

#include "moconad/lawcheck.hpp"
#include "moconad/wreath.hpp"

using namespace moconad;

namespace {

const MoconadInstance& prefixI() {
    static const auto inst = listInstance(Functor::PrefixList);
    return inst;
}

// cyclic addition mod n, associative for every n
SemigroupTable cyclicTable(std::size_t n) {
    SemigroupTable t;
    for (std::size_t i = 0; i < n; ++i) t.carrier.push_back(Elem::integer(std::int64_t(i)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t.mul.push_back((i + j) % n);
    return t;
}

MVal abWord(std::size_t len) {
    std::vector<Elem> letters;
    for (std::size_t i = 0; i < len; ++i)
        letters.push_back(Elem::sym(i % 2 == 0 ? "a" : "b"));
    return makeListValue(Functor::PrefixList, letters);
}

// parity stage over {a, b}: emits b exactly at odd prefix-parities
Transduction parityStage() {
    Transduction t;
    t.algebra = algebraFromSemigroup(prefixI(), {{Elem::integer(0), Elem::integer(1)},
                                                 {0, 1, 1, 0}});
    t.inputAlphabet = {Elem::sym("a"), Elem::sym("b")};
    t.outputAlphabet = t.inputAlphabet;
    t.h = {{Elem::sym("a"), Elem::integer(1)}, {Elem::sym("b"), Elem::integer(0)}};
    t.lambda = {{Elem::integer(0), Elem::sym("a")}, {Elem::integer(1), Elem::sym("b")}};
    return t;
}

}  // namespace

static void BM_ProductFold(benchmark::State& state) {
    FiniteAlgebra alg = algebraFromSemigroup(prefixI(), cyclicTable(4));
    std::vector<Elem> letters;
    for (std::int64_t i = 0; i < state.range(0); ++i)
        letters.push_back(alg.carrier[std::size_t(i) % 4]);
    MVal word = makeListValue(Functor::PrefixList, letters);
    for (auto _ : state) benchmark::DoNotOptimize(alg.prod(word));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductFold)->Range(8, 4096)->Complexity();

static void BM_ApplyTransduction(benchmark::State& state) {
    Transduction t = parityStage();
    MVal word = abWord(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(applyTransduction(t, word));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ApplyTransduction)->Range(8, 1024)->Complexity();

static void BM_ExpandViews(benchmark::State& state) {
    MVal word = abWord(std::size_t(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(expand(prefixI(), word));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExpandViews)->Range(8, 1024)->Complexity();

static void BM_CheckLawExhaustive(benchmark::State& state) {
    ExhaustiveStrategy st;
    st.bound = int(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            checkLaw(prefixI(), Ops::standard(), LawId::MonadAssoc, st));
}
BENCHMARK(BM_CheckLawExhaustive)->DenseRange(2, 5);

static void BM_ComposeTransductions(benchmark::State& state) {
    Transduction t = parityStage();
    for (auto _ : state) benchmark::DoNotOptimize(composeTransductions(t, t));
}
BENCHMARK(BM_ComposeTransductions);

static void BM_ContextMonoid(benchmark::State& state) {
    FiniteAlgebra alg =
        algebraFromSemigroup(prefixI(), cyclicTable(std::size_t(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(contextMonoid(alg));
}
BENCHMARK(BM_ContextMonoid)->DenseRange(2, 5);

BENCHMARK_MAIN();
