#pragma once

#include "irumap/air_table.hpp"

namespace irumap {

struct PhysicalConstants {
    double sigma = 5.67e-8;   // Stefan-Boltzmann [W/(m^2 K^4)]
    double g = 9.80665;       // gravitational acceleration [m/s^2]
    double r_film_in = 0.12;  // indoor air-film resistance [K m^2/W]
    double r_film_out = 0.03; // outdoor air-film resistance [K m^2/W]
    void validate() const;
};

struct AmbientConditions {
    double t_in = 293.15;            // indoor air [K]
    double t_out = 273.15;           // outdoor air [K]
    double emissivity = 0.95;
    double wind_speed = 0.0;         // [m/s]
    double relative_humidity = 0.5;  // fraction, carried for validation only
    void validate() const;
};

struct WallGeometry {
    double height = 0.0;  // characteristic vertical length L [m]
    double width = 0.0;   // reporting only
    void validate() const;
};

// Natural-convection bundle evaluated at one surface/air temperature pair.
struct FilmState {
    double t_m = 0.0;        // film temperature [K]
    double beta = 0.0;       // volumetric expansion 1/t_m [1/K]
    double ra = 0.0;         // Rayleigh number
    double nu_number = 0.0;  // Nusselt number, >= 0.680625
    double h_ext = 0.0;      // exterior convective coefficient [W/(m^2 K)]
};

struct FluxComponents {
    double q_r = 0.0;      // radiative [W/m^2]
    double q_c = 0.0;      // convective [W/m^2]
    double q_total = 0.0;  // q_r + q_c, sign follows (t_s_out - t_out)
};

double film_temperature(double t_out, double t_s_out);

// Ra = g * (1/t_m) * |t_s_out - t_out| * L^3 / nu^2 * Pr. The absolute
// difference keeps Ra >= 0 when the surface is colder than ambient; the flux
// sign is carried by q_c instead.
double rayleigh_number(double t_s_out, double t_out, const WallGeometry& geometry,
                       const AirProperties& props, const PhysicalConstants& constants);

// Churchill-Chu all-Ra vertical-plate correlation,
//   Nu = {0.825 + 0.387 Ra^(1/6) / [1 + (0.492/Pr)^(9/16)]^(8/27)}^2,
// clamped to its Ra->0 limit 0.825^2 = 0.680625.
double nusselt_number(double ra, double pr);

double exterior_convective_coefficient(double nu_number, const AirProperties& props,
                                       const WallGeometry& geometry);

// Full convection chain at one pixel: film temperature, builtin air table
// lookup, Ra, Nu, h_ext.
FilmState film_state(double t_s_out, double t_out, const WallGeometry& geometry,
                     const PhysicalConstants& constants);

FluxComponents surface_fluxes(double t_s_out, double t_out, double emissivity,
                              double h_ext, const PhysicalConstants& constants);

// U = q_total / (t_in - t_out), air-to-air.
double u_value_air_referenced(double q_total, double t_in, double t_out);

// U_wall = q_total / (t_s_in - t_s_out), surface-to-surface.
double u_value_surface_referenced(double q_total, double t_s_in, double t_s_out);

// Series film correction: 1 / (1/u_wall + r_film_in + r_film_out).
double total_u_with_films(double u_wall, const PhysicalConstants& constants);

}  // namespace irumap
