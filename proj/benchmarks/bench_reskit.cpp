// Microbenchmarks for the hot paths: hull construction, lattice point
// enumeration, permanents, colorings, the degree count, and the full
// planar pipeline.  Numbers here guide refactors; correctness lives in
// tests/.

#include <benchmark/benchmark.h>

#include "reskit/construct.hpp"

using namespace reskit;

namespace {

VecZ zv(std::initializer_list<long> xs) {
    VecZ v;
    for (long x : xs) v.push_back(Int(x));
    return v;
}

std::vector<LatticePolytope> staircase_family() {
    std::vector<std::vector<VecZ>> pts = {
        {zv({1, 0}), zv({1, 1}), zv({0, 2})},
        {zv({0, 0}), zv({1, 0}), zv({2, 0}), zv({1, 1})},
        {zv({0, 0}), zv({0, 1}), zv({1, 2})},
    };
    std::vector<LatticePolytope> fam;
    for (const auto& p : pts) fam.push_back(LatticePolytope::hull(p, 2));
    return fam;
}

std::vector<LatticePolytope> ladder_family() {
    std::vector<std::vector<VecZ>> pts = {
        {zv({0, 0}), zv({3, 0}), zv({3, 1})},
        {zv({0, 0}), zv({1, 0}), zv({2, 1})},
        {zv({0, 2}), zv({3, 5}), zv({0, 3})},
    };
    std::vector<LatticePolytope> fam;
    for (const auto& p : pts) fam.push_back(LatticePolytope::hull(p, 2));
    return fam;
}

PartitionMatrix staircase_partition(const std::vector<LatticePolytope>& fam) {
    LatticePolytope sum = minkowski_sum(fam);
    std::optional<SharedFlag> flag = find_shared_flag(fam, sum);
    if (flag) return locally_unmixed_partition(fam, *flag);
    return dim2_partition(fam);
}

void BM_hull(benchmark::State& state) {
    std::vector<VecZ> cloud;
    for (long x = 0; x <= 4; ++x)
        for (long y = 0; y <= 4; ++y)
            if ((x * 7 + y * 3) % 5 != 0) cloud.push_back(zv({x, y}));
    for (auto _ : state) {
        LatticePolytope p = LatticePolytope::hull(cloud, 2);
        benchmark::DoNotOptimize(p.vertices().size());
    }
}
BENCHMARK(BM_hull);

void BM_lattice_points(benchmark::State& state) {
    LatticePolytope sum = minkowski_sum(staircase_family());
    for (auto _ : state) {
        std::vector<VecZ> pts = sum.lattice_points();
        benchmark::DoNotOptimize(pts.size());
    }
}
BENCHMARK(BM_lattice_points);

void BM_permanent_8x8(benchmark::State& state) {
    Mat01 m(8, std::vector<int>(8, 0));
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m[i][j] = ((i * 5 + j * 3) % 4 != 0) ? 1 : 0;
    for (auto _ : state) {
        Int p = permanent(m);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_permanent_8x8);

void BM_face_coloring(benchmark::State& state) {
    std::vector<LatticePolytope> fam = staircase_family();
    PartitionMatrix m = staircase_partition(fam);
    for (auto _ : state) {
        FaceColoring fc = face_coloring(fam, m, ColoringFlavor::Max);
        benchmark::DoNotOptimize(fc.colors.size());
    }
}
BENCHMARK(BM_face_coloring);

void BM_pl_degree(benchmark::State& state) {
    std::vector<LatticePolytope> fam = staircase_family();
    PartitionMatrix m = staircase_partition(fam);
    FaceColoring fc = face_coloring(fam, m, ColoringFlavor::Max);
    for (auto _ : state) {
        int d = pl_degree(fc);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_pl_degree);

void BM_dim2_ladder(benchmark::State& state) {
    std::vector<LatticePolytope> fam = ladder_family();
    for (auto _ : state) {
        PartitionMatrix m = dim2_partition(fam);
        benchmark::DoNotOptimize(m.cells.size());
    }
}
BENCHMARK(BM_dim2_ladder);

void BM_residue_element(benchmark::State& state) {
    std::vector<LatticePolytope> fam = staircase_family();
    for (auto _ : state) {
        ResidueCertificate cert = residue_element(fam);
        benchmark::DoNotOptimize(cert.degree);
    }
}
BENCHMARK(BM_residue_element);

} // namespace

BENCHMARK_MAIN();
