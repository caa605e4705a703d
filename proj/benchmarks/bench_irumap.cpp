#include <benchmark/benchmark.h>

#include <cstddef>
#include <random>

#include "irumap/air_table.hpp"
#include "irumap/physics.hpp"
#include "irumap/pipeline.hpp"
#include "irumap/raster.hpp"
#include "irumap/synth.hpp"

using namespace irumap;

namespace {

WallGeometry wall() {
    WallGeometry g;
    g.height = 2.4;
    g.width = 1.0;
    return g;
}

AmbientConditions ambient() {
    AmbientConditions a;
    a.t_in = 293.15;
    a.t_out = 273.15;
    return a;
}

TemperatureRaster random_raster(std::size_t rows, std::size_t cols, double lo, double hi,
                                unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> temp(lo, hi);
    Grid g(rows, cols, 0.0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            g.set(r, c, temp(rng));
    return g;
}

void BM_air_properties_at(benchmark::State& state) {
    double t = 250.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(air_properties_at(t));
        t += 0.37;
        if (t > 395.0) t = 205.0;
    }
}
BENCHMARK(BM_air_properties_at);

void BM_nusselt_number(benchmark::State& state) {
    double ra = 1e3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(nusselt_number(ra, 0.71));
        ra *= 1.7;
        if (ra > 1e12) ra = 1e3;
    }
}
BENCHMARK(BM_nusselt_number);

void BM_film_state_chain(benchmark::State& state) {
    const WallGeometry geometry = wall();
    const PhysicalConstants constants;
    double ts = 278.5;
    for (auto _ : state) {
        const FilmState film = film_state(ts, 273.15, geometry, constants);
        benchmark::DoNotOptimize(
            surface_fluxes(ts, 273.15, 0.95, film.h_ext, constants));
        ts += 0.01;
        if (ts > 288.0) ts = 274.0;
    }
}
BENCHMARK(BM_film_state_chain);

void BM_resample_240x320_to_30x40(benchmark::State& state) {
    const TemperatureRaster src = random_raster(240, 320, 274.0, 288.0, 11);
    MeshSpec mesh;
    mesh.rows = 30;
    mesh.cols = 40;
    for (auto _ : state) benchmark::DoNotOptimize(resample_to_mesh(src, mesh));
}
BENCHMARK(BM_resample_240x320_to_30x40);

void BM_compute_umap_surface_30x40(benchmark::State& state) {
    SyntheticWallSpec spec;
    spec.mesh.rows = 30;
    spec.mesh.cols = 40;
    spec.stud_columns = {8, 20, 32};
    spec.ambient = ambient();
    spec.geometry = wall();
    spec.indoor_air_profile = UniformProfile{293.15};
    spec.perturbation_amplitude = 1.0;
    const SceneBundle scene = generate_scene(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_umap(scene.t_s_out, scene.t_s_in, spec.ambient,
                                              spec.geometry, spec.mesh,
                                              ComputationSetting::Surface, false));
}
BENCHMARK(BM_compute_umap_surface_30x40);

void BM_compute_umap_single_from_240x320(benchmark::State& state) {
    const TemperatureRaster ts_out = random_raster(240, 320, 276.0, 284.0, 23);
    MeshSpec mesh;
    mesh.rows = 30;
    mesh.cols = 40;
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_umap(ts_out, SinglePoint{293.15}, ambient(), wall(),
                                              mesh, ComputationSetting::SinglePoint, false));
}
BENCHMARK(BM_compute_umap_single_from_240x320);

}  // namespace

BENCHMARK_MAIN();
