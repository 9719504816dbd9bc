// Copyright 2026 The qproc Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include "qproc/loop.hpp"
#include "qproc/random.hpp"
#include "qproc/zoo.hpp"

namespace {

using namespace qproc;

void BM_QidNDecompose(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RngStream rng(1);
    const auto proc = zoo::qidN(n);
    const auto basis = zoo::phi_basis(n);
    const auto xi = zoo::program_for(haar_unitary(n, rng));
    const Ket psi = haar_ket(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(proc, psi, xi, basis));
    }
}
BENCHMARK(BM_QidNDecompose)->DenseRange(2, 7);

void BM_Qid2ExactSuccess(benchmark::State &state) {
    RngStream rng(2);
    const Operator u = haar_unitary(2, rng);
    const Ket psi = haar_ket(2, rng);
    loop::LoopPolicy policy;
    policy.accept_equivalent_branches = false;
    const auto rounds = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(loop::exact_success(zoo::qid2(), psi, u, loop::qid2_rule(), rounds, policy));
    }
}
BENCHMARK(BM_Qid2ExactSuccess)->Arg(5)->Arg(30);

void BM_QidNRunLoop(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    RngStream pick(3);
    const Operator v = haar_unitary(n, pick);
    const Ket psi = haar_ket(n, pick);
    const auto proc = zoo::qidN(n);
    const auto rule = loop::qidN_rule(n);
    loop::LoopPolicy policy;
    policy.max_rounds = 1000;
    std::uint64_t trial = 0;
    for (auto _ : state) {
        RngStream rng = RngStream::derive(7, 0, trial++);
        benchmark::DoNotOptimize(loop::run_loop(proc, psi, v, rule, policy, rng));
    }
}
BENCHMARK(BM_QidNRunLoop)->Arg(2)->Arg(3)->Arg(4);

} // namespace

BENCHMARK_MAIN();
