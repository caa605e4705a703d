#include <cmath>
#include <random>

#include "doctest.h"

#include "irumap/errors.hpp"
#include "irumap/grid.hpp"
#include "irumap/raster.hpp"

using namespace irumap;

namespace {

MeshSpec mesh(std::size_t rows, std::size_t cols) {
    MeshSpec m;
    m.rows = rows;
    m.cols = cols;
    return m;
}

}  // namespace

TEST_CASE("grid construction and cell access") {
    Grid g(2, 3, 280.0);
    CHECK(g.rows() == 2);
    CHECK(g.cols() == 3);
    CHECK(g.cell_count() == 6);
    CHECK(g.value(1, 2) == 280.0);
    CHECK_FALSE(g.is_masked(0, 0));

    g.set(0, 1, 285.5);
    CHECK(g.value(0, 1) == 285.5);

    g.mask_cell(1, 0);
    CHECK(g.is_masked(1, 0));
    CHECK(std::isnan(g.value(1, 0)));
    CHECK(g.unmasked_count() == 5);

    CHECK_THROWS_AS(Grid(0, 3), ValidationError);
    CHECK_THROWS_AS(Grid(3, 0), ValidationError);
}

TEST_CASE("setting a masked cell unmasks it") {
    Grid g(1, 1, 280.0);
    g.mask_cell(0, 0);
    CHECK(g.unmasked_count() == 0);
    g.set(0, 0, 281.0);
    CHECK_FALSE(g.is_masked(0, 0));
    CHECK(g.value(0, 0) == 281.0);
}

TEST_CASE("unmasked mean") {
    Grid g(2, 2, 0.0);
    g.set(0, 0, 1.0);
    g.set(0, 1, 2.0);
    g.set(1, 0, 3.0);
    g.set(1, 1, 4.0);
    CHECK(g.unmasked_mean() == 2.5);
    g.mask_cell(1, 1);
    CHECK(g.unmasked_mean() == 2.0);
    g.mask_cell(0, 0);
    g.mask_cell(0, 1);
    g.mask_cell(1, 0);
    CHECK_THROWS_AS(g.unmasked_mean(), ValidationError);
}

TEST_CASE("grid equality is shape, mask pattern and bitwise values") {
    Grid a(2, 2, 1.5);
    Grid b(2, 2, 1.5);
    CHECK(a == b);
    b.set(0, 0, 1.5 + 1e-16);
    CHECK(a == b);  // 1.5 + 1e-16 rounds back to 1.5
    b.set(0, 0, std::nextafter(1.5, 2.0));
    CHECK_FALSE(a == b);
    b = a;
    b.mask_cell(0, 0);
    CHECK_FALSE(a == b);
    a.mask_cell(0, 0);
    CHECK(a == b);  // masked cells compare by mask, not by stored NaN
    CHECK_FALSE(Grid(2, 2) == Grid(2, 3));
}

TEST_CASE("temperature raster validation names the offending cell") {
    Grid g(2, 2, 280.0);
    CHECK_NOTHROW(validate_temperature_raster(g, "ts-out"));
    g.set(1, 1, -4.0);
    CHECK_THROWS_WITH_AS(validate_temperature_raster(g, "ts-out"),
                         doctest::Contains("ts-out"), ValidationError);
    g.set(1, 1, 0.0);
    CHECK_THROWS_AS(validate_temperature_raster(g, "ts-out"), ValidationError);
    g.mask_cell(1, 1);  // masked cells are exempt
    CHECK_NOTHROW(validate_temperature_raster(g, "ts-out"));
}

TEST_CASE("mesh spec validation") {
    CHECK_NOTHROW(mesh(30, 40).validate());
    CHECK_THROWS_AS(mesh(0, 40).validate(), ValidationError);
    CHECK_THROWS_AS(mesh(30, 0).validate(), ValidationError);
}

TEST_CASE("resample: identity when shapes match") {
    Grid g(3, 4, 281.0);
    g.set(1, 2, 285.0);
    g.mask_cell(0, 0);
    const Grid r = resample_to_mesh(g, mesh(3, 4));
    CHECK(r == g);
}

TEST_CASE("resample rejects upsampling and empty input") {
    Grid g(3, 4, 281.0);
    CHECK_THROWS_AS(resample_to_mesh(g, mesh(6, 4)), ValidationError);
    CHECK_THROWS_AS(resample_to_mesh(g, mesh(3, 8)), ValidationError);
    CHECK_THROWS_AS(resample_to_mesh(Grid{}, mesh(1, 1)), ValidationError);
}

TEST_CASE("resample: 2x2 block mean is exact") {
    Grid g(2, 2, 0.0);
    g.set(0, 0, 280.0);
    g.set(0, 1, 282.0);
    g.set(1, 0, 284.0);
    g.set(1, 1, 286.0);
    const Grid r = resample_to_mesh(g, mesh(1, 1));
    CHECK(r.rows() == 1);
    CHECK(r.cols() == 1);
    CHECK(r.value(0, 0) == 283.0);
}

TEST_CASE("resample: fractional overlap weights") {
    // 3 source rows onto 2 mesh rows: top cell = (2*a + b) / 3.
    Grid g(3, 1, 0.0);
    g.set(0, 0, 1.0);
    g.set(1, 0, 4.0);
    g.set(2, 0, 7.0);
    const Grid r = resample_to_mesh(g, mesh(2, 1));
    CHECK(r.value(0, 0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(r.value(1, 0) == doctest::Approx(6.0).epsilon(1e-15));
}

TEST_CASE("resample: masked coverage rules") {
    Grid g(2, 2, 0.0);
    g.set(0, 0, 280.0);
    g.set(0, 1, 282.0);
    g.set(1, 0, 284.0);
    g.mask_cell(1, 1);
    Grid r = resample_to_mesh(g, mesh(1, 1));
    CHECK(r.value(0, 0) == doctest::Approx(282.0).epsilon(1e-15));

    g.mask_cell(0, 0);
    g.mask_cell(0, 1);
    g.mask_cell(1, 0);
    r = resample_to_mesh(g, mesh(1, 1));
    CHECK(r.is_masked(0, 0));
}

TEST_CASE("resample: checkerboard collapses to its block mean") {
    Grid g(80, 60, 0.0);
    for (std::size_t r = 0; r < 80; ++r)
        for (std::size_t c = 0; c < 60; ++c)
            g.set(r, c, (r + c) % 2 == 0 ? 290.0 : 292.0);
    const Grid out = resample_to_mesh(g, mesh(40, 30));
    for (std::size_t r = 0; r < 40; ++r)
        for (std::size_t c = 0; c < 30; ++c)
            CHECK(out.value(r, c) == 291.0);
}

TEST_CASE("resample conserves the global mean") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> temp(250.0, 320.0);
    Grid g(8, 6, 0.0);
    for (std::size_t r = 0; r < 8; ++r)
        for (std::size_t c = 0; c < 6; ++c)
            g.set(r, c, temp(rng));
    const Grid out = resample_to_mesh(g, mesh(4, 3));
    CHECK(out.unmasked_mean() == doctest::Approx(g.unmasked_mean()).epsilon(1e-12));
}

TEST_CASE("sensor matrix validation") {
    SensorMatrix m;
    m.rows = 2;
    m.cols = 2;
    m.temperatures = {290.0, 291.0, 292.0, 293.0};
    CHECK_NOTHROW(m.validate());
    CHECK(m.at(1, 0) == 292.0);

    m.temperatures.pop_back();
    CHECK_THROWS_AS(m.validate(), ValidationError);
    m.temperatures = {290.0, 291.0, 292.0, -1.0};
    CHECK_THROWS_AS(m.validate(), ValidationError);
    m.rows = 0;
    CHECK_THROWS_AS(m.validate(), ValidationError);
}

TEST_CASE("indoor field: single point broadcasts") {
    const TemperatureRaster field = indoor_field(SinglePoint{293.15}, mesh(3, 4));
    CHECK(field.rows() == 3);
    CHECK(field.cols() == 4);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            CHECK(field.value(r, c) == 293.15);
    CHECK_THROWS_AS(indoor_field(SinglePoint{-5.0}, mesh(3, 4)), ValidationError);
}

TEST_CASE("indoor field: block expansion assigns sensor quadrants") {
    SensorMatrix m;
    m.rows = 2;
    m.cols = 2;
    m.temperatures = {290.0, 291.0, 292.0, 293.0};
    const TemperatureRaster field = indoor_field(m, mesh(4, 4), MatrixExpansion::Block);
    CHECK(field.value(0, 0) == 290.0);
    CHECK(field.value(1, 1) == 290.0);
    CHECK(field.value(0, 3) == 291.0);
    CHECK(field.value(3, 0) == 292.0);
    CHECK(field.value(2, 2) == 293.0);
    CHECK(field.value(3, 3) == 293.0);
}

TEST_CASE("indoor field: block expansion with non-divisible shapes") {
    SensorMatrix m;
    m.rows = 2;
    m.cols = 1;
    m.temperatures = {290.0, 294.0};
    const TemperatureRaster field = indoor_field(m, mesh(3, 2), MatrixExpansion::Block);
    // Row blocks: floor(2*i/3) -> rows 0 (i=0), 0 (i=1), 1 (i=2).
    CHECK(field.value(0, 0) == 290.0);
    CHECK(field.value(1, 1) == 290.0);
    CHECK(field.value(2, 0) == 294.0);
}

TEST_CASE("indoor field: bilinear expansion interpolates between sensors") {
    SensorMatrix m;
    m.rows = 2;
    m.cols = 2;
    m.temperatures = {290.0, 292.0, 294.0, 296.0};
    const TemperatureRaster field = indoor_field(m, mesh(4, 4), MatrixExpansion::Bilinear);
    // Corner cells sit inside the clamped region and take the corner values.
    CHECK(field.value(0, 0) == 290.0);
    CHECK(field.value(3, 3) == 296.0);
    // Interior cells are strictly between their bracketing sensors.
    CHECK(field.value(1, 1) > 290.0);
    CHECK(field.value(1, 1) < 296.0);
    // Monotone along a row when the sensors are monotone.
    CHECK(field.value(0, 1) <= field.value(0, 2));
}

TEST_CASE("indoor field: raster input must match the mesh or downsample") {
    Grid g(6, 8, 292.0);
    const TemperatureRaster field = indoor_field(g, mesh(3, 4));
    CHECK(field.rows() == 3);
    CHECK(field.cols() == 4);
    CHECK(field.value(0, 0) == 292.0);
}

TEST_CASE("average rasters") {
    Grid a(1, 2, 0.0);
    a.set(0, 0, 1.0);
    a.set(0, 1, 3.0);
    Grid b(1, 2, 0.0);
    b.set(0, 0, 3.0);
    b.set(0, 1, 5.0);
    const Grid avg = average_rasters({a, b});
    CHECK(avg.value(0, 0) == 2.0);
    CHECK(avg.value(0, 1) == 4.0);

    CHECK_THROWS_AS(average_rasters({}), ValidationError);
    CHECK_THROWS_AS(average_rasters({a, Grid(2, 2)}), ValidationError);
}

TEST_CASE("average rasters: any masked input masks the cell") {
    Grid a(1, 2, 1.0);
    Grid b(1, 2, 3.0);
    b.mask_cell(0, 1);
    const Grid avg = average_rasters({a, b});
    CHECK(avg.value(0, 0) == 2.0);
    CHECK(avg.is_masked(0, 1));
}
