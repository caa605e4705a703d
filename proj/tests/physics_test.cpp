#include <cmath>
#include <limits>

#include "doctest.h"

#include "irumap/air_table.hpp"
#include "irumap/errors.hpp"
#include "irumap/physics.hpp"

using namespace irumap;

namespace {

WallGeometry wall(double height, double width = 1.0) {
    WallGeometry g;
    g.height = height;
    g.width = width;
    return g;
}

AirProperties props(double k, double nu, double pr) {
    AirProperties p;
    p.k = k;
    p.nu = nu;
    p.pr = pr;
    return p;
}

constexpr double kRel = 1e-12;

}  // namespace

TEST_CASE("film temperature is the arithmetic mean") {
    CHECK(film_temperature(278.0, 283.0) == 280.5);
    CHECK(film_temperature(283.0, 278.0) == 280.5);
    CHECK(film_temperature(273.15, 273.15) == 273.15);
    CHECK_THROWS_AS(film_temperature(-1.0, 283.0), ValidationError);
    CHECK_THROWS_AS(film_temperature(278.0, std::numeric_limits<double>::quiet_NaN()),
                    ValidationError);
}

TEST_CASE("rayleigh number: hand-checked value") {
    const double ra = rayleigh_number(283.0, 278.0, wall(2.4), props(0.0, 1.42e-5, 0.713),
                                       PhysicalConstants{});
    CHECK(ra == doctest::Approx(8544848764.622075).epsilon(kRel));
}

TEST_CASE("rayleigh number scales with the cube of height") {
    const AirProperties p = props(0.026, 1.5e-5, 0.71);
    const double ra1 = rayleigh_number(283.0, 278.0, wall(1.0), p, PhysicalConstants{});
    const double ra2 = rayleigh_number(283.0, 278.0, wall(2.0), p, PhysicalConstants{});
    CHECK(ra2 / ra1 == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("rayleigh number is symmetric in the temperature gap") {
    const AirProperties p = props(0.026, 1.5e-5, 0.71);
    CHECK(rayleigh_number(283.0, 278.0, wall(2.4), p, PhysicalConstants{}) ==
          rayleigh_number(278.0, 283.0, wall(2.4), p, PhysicalConstants{}));
    CHECK(rayleigh_number(280.0, 280.0, wall(2.4), p, PhysicalConstants{}) == 0.0);
}

TEST_CASE("nusselt number: laminar floor is exact") {
    CHECK(nusselt_number(0.0, 0.5) == 0.680625);
    CHECK(nusselt_number(0.0, 0.7) == 0.680625);
    CHECK(nusselt_number(0.0, 1.0) == 0.680625);
    // Tiny but nonzero Ra still cannot dip below the floor.
    CHECK(nusselt_number(1e-300, 0.7) >= 0.680625);
}

TEST_CASE("nusselt number: frozen reference point") {
    CHECK(nusselt_number(1e9, 0.71) == doctest::Approx(122.85653487620696).epsilon(kRel));
}

TEST_CASE("nusselt number rejects unusable rayleigh inputs") {
    CHECK_THROWS_AS(nusselt_number(-1.0, 0.71), ValidationError);
    CHECK_THROWS_AS(nusselt_number(std::numeric_limits<double>::quiet_NaN(), 0.71),
                    ValidationError);
    CHECK_THROWS_AS(nusselt_number(1e9, 0.0), ValidationError);
}

TEST_CASE("exterior convective coefficient: Nu k / L") {
    const double h = exterior_convective_coefficient(122.8, props(0.02624, 1.5e-5, 0.71),
                                                     wall(2.4));
    CHECK(h == doctest::Approx(1.3426133333333332).epsilon(kRel));
}

TEST_CASE("halving the wall height doubles the convective coefficient") {
    const AirProperties p = props(0.02624, 1.5e-5, 0.71);
    const double h_full = exterior_convective_coefficient(122.8, p, wall(2.4));
    const double h_half = exterior_convective_coefficient(122.8, p, wall(1.2));
    CHECK(h_half == 2.0 * h_full);
}

TEST_CASE("surface fluxes: worked example with a given film coefficient") {
    const FluxComponents f = surface_fluxes(283.0, 278.0, 0.95, 1.343, PhysicalConstants{});
    CHECK(f.q_r == doctest::Approx(23.777695089225).epsilon(kRel));
    CHECK(f.q_c == doctest::Approx(6.715).epsilon(kRel));
    CHECK(f.q_total == doctest::Approx(30.492695089225).epsilon(kRel));
}

TEST_CASE("surface fluxes vanish with the temperature gap") {
    const FluxComponents f = surface_fluxes(283.0, 283.0, 0.95, 1.343, PhysicalConstants{});
    CHECK(f.q_r == 0.0);
    CHECK(f.q_c == 0.0);
    CHECK(f.q_total == 0.0);
}

TEST_CASE("surface fluxes flip sign with the gap") {
    const FluxComponents warm = surface_fluxes(283.0, 278.0, 0.95, 1.343, PhysicalConstants{});
    const FluxComponents cold = surface_fluxes(278.0, 283.0, 0.95, 1.343, PhysicalConstants{});
    CHECK(warm.q_total > 0.0);
    CHECK(cold.q_total < 0.0);
}

TEST_CASE("air-referenced u-value") {
    CHECK(u_value_air_referenced(30.49, 295.15, 278.0) ==
          doctest::Approx(1.77784256559767).epsilon(kRel));
    CHECK_THROWS_AS(u_value_air_referenced(30.49, 280.0, 280.0), DegenerateError);
}

TEST_CASE("surface-referenced u-value") {
    CHECK(u_value_surface_referenced(30.49, 292.5, 283.0) ==
          doctest::Approx(3.209473684210526).epsilon(kRel));
    CHECK_THROWS_AS(u_value_surface_referenced(30.49, 283.0, 283.0), DegenerateError);
}

TEST_CASE("film correction: standard resistances in series") {
    const PhysicalConstants constants;
    CHECK(total_u_with_films(2.0, constants) ==
          doctest::Approx(1.5384615384615383).epsilon(kRel));
    CHECK(total_u_with_films(3.209, constants) ==
          doctest::Approx(2.1662672562189895).epsilon(kRel));
    CHECK_THROWS_AS(total_u_with_films(0.0, constants), ValidationError);
    CHECK_THROWS_AS(total_u_with_films(-1.0, constants), ValidationError);
}

TEST_CASE("film correction always reduces the u-value") {
    const PhysicalConstants constants;
    for (double u : {0.1, 0.5, 1.0, 2.5, 5.0, 50.0})
        CHECK(total_u_with_films(u, constants) < u);
}

TEST_CASE("film state composes the whole exterior chain") {
    const FilmState f = film_state(283.0, 278.0, wall(2.4), PhysicalConstants{});
    CHECK(f.t_m == 280.5);
    CHECK(f.beta == doctest::Approx(0.0035650623885918).epsilon(kRel));
    CHECK(f.ra == doctest::Approx(8884856634.053654).epsilon(kRel));
    CHECK(f.nu_number == doctest::Approx(243.17388432486996).epsilon(kRel));
    CHECK(f.h_ext == doctest::Approx(2.506561421006426).epsilon(kRel));
}

TEST_CASE("full per-pixel chain reproduces the frozen worked pixel") {
    // t_s_out=283, t_out=278, t_s_in=292.5, eps=0.95, L=2.4.
    const PhysicalConstants constants;
    const FilmState f = film_state(283.0, 278.0, wall(2.4), constants);
    const FluxComponents q = surface_fluxes(283.0, 278.0, 0.95, f.h_ext, constants);
    CHECK(q.q_total == doctest::Approx(36.310502194257126).epsilon(kRel));
    const double u_wall = u_value_surface_referenced(q.q_total, 292.5, 283.0);
    CHECK(u_wall == doctest::Approx(3.8221581257112764).epsilon(kRel));
    CHECK(total_u_with_films(u_wall, constants) ==
          doctest::Approx(2.4293526372873706).epsilon(kRel));
}

TEST_CASE("ambient conditions validation") {
    AmbientConditions ambient;
    CHECK_NOTHROW(ambient.validate());
    ambient.emissivity = 0.0;
    CHECK_THROWS_AS(ambient.validate(), ValidationError);
    ambient.emissivity = 1.0;
    CHECK_NOTHROW(ambient.validate());
    ambient.emissivity = 1.5;
    CHECK_THROWS_AS(ambient.validate(), ValidationError);
    ambient = AmbientConditions{};
    ambient.t_out = 0.0;
    CHECK_THROWS_AS(ambient.validate(), ValidationError);
    ambient = AmbientConditions{};
    ambient.wind_speed = -0.1;
    CHECK_THROWS_AS(ambient.validate(), ValidationError);
    ambient = AmbientConditions{};
    ambient.relative_humidity = 1.1;
    CHECK_THROWS_AS(ambient.validate(), ValidationError);
}

TEST_CASE("physical constants validation") {
    PhysicalConstants constants;
    CHECK_NOTHROW(constants.validate());
    constants.r_film_in = 0.0;
    CHECK_THROWS_AS(constants.validate(), ValidationError);
    constants = PhysicalConstants{};
    constants.sigma = -1.0;
    CHECK_THROWS_AS(constants.validate(), ValidationError);
}

TEST_CASE("wall geometry validation") {
    CHECK_NOTHROW(wall(2.4).validate());
    CHECK_THROWS_AS(wall(0.0).validate(), ValidationError);
    CHECK_THROWS_AS(wall(2.4, -1.0).validate(), ValidationError);
}
