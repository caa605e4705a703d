#include "irumap/physics.hpp"

#include <algorithm>
#include <cmath>

#include "irumap/errors.hpp"

namespace irumap {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

double pow4(double x) {
    const double x2 = x * x;
    return x2 * x2;
}

}  // namespace

void PhysicalConstants::validate() const {
    if (!positive_finite(sigma))
        throw ValidationError("physical constants: sigma must be finite and > 0");
    if (!positive_finite(g))
        throw ValidationError("physical constants: g must be finite and > 0");
    if (!positive_finite(r_film_in) || !positive_finite(r_film_out))
        throw ValidationError("physical constants: film resistances must be finite and > 0");
}

void AmbientConditions::validate() const {
    if (!positive_finite(t_in) || !positive_finite(t_out))
        throw ValidationError("ambient conditions: temperatures must be finite and > 0 K");
    if (!std::isfinite(emissivity) || emissivity <= 0.0 || emissivity > 1.0)
        throw ValidationError("ambient conditions: emissivity must be in (0, 1]");
    if (!std::isfinite(wind_speed) || wind_speed < 0.0)
        throw ValidationError("ambient conditions: wind_speed must be finite and >= 0");
    if (!std::isfinite(relative_humidity) || relative_humidity < 0.0 ||
        relative_humidity > 1.0)
        throw ValidationError("ambient conditions: relative_humidity must be in [0, 1]");
}

void WallGeometry::validate() const {
    if (!positive_finite(height) || !positive_finite(width))
        throw ValidationError("wall geometry: height and width must be finite and > 0");
}

double film_temperature(double t_out, double t_s_out) {
    if (!positive_finite(t_out) || !positive_finite(t_s_out))
        throw ValidationError("film_temperature: temperatures must be finite and > 0 K");
    return (t_out + t_s_out) / 2.0;
}

double rayleigh_number(double t_s_out, double t_out, const WallGeometry& geometry,
                       const AirProperties& props, const PhysicalConstants& constants) {
    geometry.validate();
    constants.validate();
    if (!positive_finite(props.nu) || !positive_finite(props.pr))
        throw ValidationError("rayleigh_number: air properties must be finite and > 0");
    const double t_m = film_temperature(t_out, t_s_out);
    const double l3 = geometry.height * geometry.height * geometry.height;
    return constants.g * (1.0 / t_m) * std::abs(t_s_out - t_out) * l3 /
           (props.nu * props.nu) * props.pr;
}

double nusselt_number(double ra, double pr) {
    if (std::isnan(ra) || ra < 0.0)
        throw ValidationError("nusselt_number: ra must be >= 0");
    if (!positive_finite(pr))
        throw ValidationError("nusselt_number: pr must be finite and > 0");

    // Exact Ra->0 limit; also the global floor of the correlation.
    constexpr double kMinNusselt = 0.680625;  // 0.825^2
    if (ra == 0.0) return kMinNusselt;

    const double denom = std::pow(1.0 + std::pow(0.492 / pr, 9.0 / 16.0), 8.0 / 27.0);
    const double root = 0.825 + 0.387 * std::pow(ra, 1.0 / 6.0) / denom;
    return std::max(root * root, kMinNusselt);
}

double exterior_convective_coefficient(double nu_number, const AirProperties& props,
                                       const WallGeometry& geometry) {
    geometry.validate();
    if (!positive_finite(nu_number))
        throw ValidationError("exterior_convective_coefficient: nu_number must be > 0");
    if (!positive_finite(props.k))
        throw ValidationError("exterior_convective_coefficient: conductivity must be > 0");
    return nu_number * props.k / geometry.height;
}

FilmState film_state(double t_s_out, double t_out, const WallGeometry& geometry,
                     const PhysicalConstants& constants) {
    FilmState fs;
    fs.t_m = film_temperature(t_out, t_s_out);
    fs.beta = 1.0 / fs.t_m;
    const AirProperties props = air_properties_at(fs.t_m);  // RangeError off-table
    fs.ra = rayleigh_number(t_s_out, t_out, geometry, props, constants);
    fs.nu_number = nusselt_number(fs.ra, props.pr);
    fs.h_ext = exterior_convective_coefficient(fs.nu_number, props, geometry);
    return fs;
}

FluxComponents surface_fluxes(double t_s_out, double t_out, double emissivity,
                              double h_ext, const PhysicalConstants& constants) {
    constants.validate();
    if (!positive_finite(t_s_out) || !positive_finite(t_out))
        throw ValidationError("surface_fluxes: temperatures must be finite and > 0 K");
    if (!std::isfinite(emissivity) || emissivity <= 0.0 || emissivity > 1.0)
        throw ValidationError("surface_fluxes: emissivity must be in (0, 1]");
    if (!std::isfinite(h_ext) || h_ext < 0.0)
        throw ValidationError("surface_fluxes: h_ext must be finite and >= 0");

    FluxComponents q;
    q.q_r = emissivity * constants.sigma * (pow4(t_s_out) - pow4(t_out));
    q.q_c = h_ext * (t_s_out - t_out);
    q.q_total = q.q_r + q.q_c;
    return q;
}

double u_value_air_referenced(double q_total, double t_in, double t_out) {
    if (!std::isfinite(q_total))
        throw ValidationError("u_value_air_referenced: q_total must be finite");
    if (!positive_finite(t_in) || !positive_finite(t_out))
        throw ValidationError("u_value_air_referenced: temperatures must be finite and > 0 K");
    if (t_in == t_out)
        throw DegenerateError("u_value_air_referenced: t_in equals t_out, denominator is zero");
    return q_total / (t_in - t_out);
}

double u_value_surface_referenced(double q_total, double t_s_in, double t_s_out) {
    if (!std::isfinite(q_total))
        throw ValidationError("u_value_surface_referenced: q_total must be finite");
    if (!positive_finite(t_s_in) || !positive_finite(t_s_out))
        throw ValidationError(
            "u_value_surface_referenced: temperatures must be finite and > 0 K");
    if (t_s_in == t_s_out)
        throw DegenerateError(
            "u_value_surface_referenced: surface temperatures are equal, denominator is zero");
    return q_total / (t_s_in - t_s_out);
}

double total_u_with_films(double u_wall, const PhysicalConstants& constants) {
    constants.validate();
    if (!std::isfinite(u_wall) || u_wall <= 0.0)
        throw ValidationError("total_u_with_films: u_wall must be finite and > 0");
    return 1.0 / (1.0 / u_wall + constants.r_film_in + constants.r_film_out);
}

}  // namespace irumap
