#include "irumap/synth.hpp"

#include <cmath>
#include <numbers>

#include "irumap/errors.hpp"
#include "irumap/io_util.hpp"

namespace irumap {

namespace {

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

[[noreturn]] void infeasible(const std::string& what) { throw GenerationError(what); }

std::string cell_str(std::size_t r, std::size_t c) {
    return "(" + std::to_string(r) + ", " + std::to_string(c) + ")";
}

// Smooth deterministic bump in [-1, 1] so Ra/Nu vary pixel to pixel.
double perturbation(std::size_t r, std::size_t c, const MeshSpec& mesh) {
    constexpr double tau = 2.0 * std::numbers::pi;
    return std::sin(tau * (static_cast<double>(r) + 0.5) / static_cast<double>(mesh.rows)) *
           std::cos(tau * (static_cast<double>(c) + 0.5) / static_cast<double>(mesh.cols));
}

Grid conductance_field(const SyntheticWallSpec& spec) {
    Grid u(spec.mesh.rows, spec.mesh.cols, spec.u_insulation);
    for (std::size_t col : spec.stud_columns)
        for (std::size_t r = 0; r < spec.mesh.rows; ++r)
            u.set(r, col, spec.u_stud);
    return u;
}

double profile_air_at_row(const SyntheticWallSpec& spec, std::size_t r) {
    if (const auto* uni = std::get_if<UniformProfile>(&spec.indoor_air_profile))
        return uni->t;
    const auto& strat = std::get<StratifiedProfile>(spec.indoor_air_profile);
    if (spec.mesh.rows == 1) return strat.t_bottom;
    return strat.t_bottom + (strat.t_top - strat.t_bottom) * static_cast<double>(r) /
                                static_cast<double>(spec.mesh.rows - 1);
}

Grid air_field(const SyntheticWallSpec& spec) {
    Grid air(spec.mesh.rows, spec.mesh.cols);
    for (std::size_t r = 0; r < spec.mesh.rows; ++r) {
        const double t = profile_air_at_row(spec, r);
        for (std::size_t c = 0; c < spec.mesh.cols; ++c)
            air.set(r, c, t);
    }
    return air;
}

double chain_flux(double t_s_out, const SyntheticWallSpec& spec,
                  const PhysicalConstants& constants) {
    const FilmState fs = film_state(t_s_out, spec.ambient.t_out, spec.geometry, constants);
    return surface_fluxes(t_s_out, spec.ambient.t_out, spec.ambient.emissivity, fs.h_ext,
                          constants)
        .q_total;
}

// Back out t_s_in from the truth conductance; shared bound check.
double implied_t_s_in(double t_s_out, double q_total, double u_truth, std::size_t r,
                      std::size_t c) {
    const double t = t_s_out + q_total / u_truth;
    if (!(t > 0.0 && t < 1000.0))
        infeasible("scene generation: implied t_s_in = " + format_double(t) + " K at pixel " +
                   cell_str(r, c) + " is outside plausible kelvin bounds (0, 1000)");
    return t;
}

}  // namespace

void SyntheticWallSpec::validate() const {
    mesh.validate();
    if (!positive_finite(u_insulation) || !std::isfinite(u_stud) || u_stud < u_insulation)
        throw ValidationError("synthetic wall spec: requires u_stud >= u_insulation > 0");
    for (std::size_t col : stud_columns)
        if (col >= mesh.cols)
            throw ValidationError("synthetic wall spec: stud column " + std::to_string(col) +
                                  " outside mesh with " + std::to_string(mesh.cols) + " columns");
    ambient.validate();
    geometry.validate();
    if (const auto* uni = std::get_if<UniformProfile>(&indoor_air_profile)) {
        if (!positive_finite(uni->t))
            throw ValidationError("synthetic wall spec: uniform profile temperature must be "
                                  "finite and > 0 K");
    } else {
        const auto& strat = std::get<StratifiedProfile>(indoor_air_profile);
        if (!positive_finite(strat.t_bottom) || !positive_finite(strat.t_top))
            throw ValidationError("synthetic wall spec: stratified profile temperatures must be "
                                  "finite and > 0 K");
        if (mesh.rows < 2 && strat.t_bottom != strat.t_top)
            throw ValidationError("synthetic wall spec: a stratified profile needs at least "
                                  "2 rows");
    }
    if (!std::isfinite(surface_offset))
        throw ValidationError("synthetic wall spec: surface_offset must be finite");
    if (!std::isfinite(perturbation_amplitude) || perturbation_amplitude < 0.0)
        throw ValidationError("synthetic wall spec: perturbation_amplitude must be finite "
                              "and >= 0");
}

double SyntheticWallSpec::indoor_reference() const {
    if (const auto* uni = std::get_if<UniformProfile>(&indoor_air_profile)) return uni->t;
    const auto& strat = std::get<StratifiedProfile>(indoor_air_profile);
    return (strat.t_bottom + strat.t_top) / 2.0;
}

SceneBundle generate_scene(const SyntheticWallSpec& spec, const PhysicalConstants& constants) {
    spec.validate();
    constants.validate();

    SceneBundle scene;
    scene.indoor_air = air_field(spec);
    Grid u = conductance_field(spec);
    scene.t_s_out = Grid(spec.mesh.rows, spec.mesh.cols);
    scene.t_s_in = Grid(spec.mesh.rows, spec.mesh.cols);

    for (std::size_t r = 0; r < spec.mesh.rows; ++r) {
        for (std::size_t c = 0; c < spec.mesh.cols; ++c) {
            const double ts = spec.ambient.t_out + spec.surface_offset +
                              spec.perturbation_amplitude * perturbation(r, c, spec.mesh);
            const double air = scene.indoor_air.value(r, c);
            if (!(ts > spec.ambient.t_out && ts < air))
                infeasible("generate_scene: prescribed t_s_out = " + format_double(ts) +
                           " K at pixel " + cell_str(r, c) +
                           " must lie strictly between t_out (" +
                           format_double(spec.ambient.t_out) + " K) and the indoor air (" +
                           format_double(air) + " K)");
            const double q = chain_flux(ts, spec, constants);
            scene.t_s_out.set(r, c, ts);
            scene.t_s_in.set(r, c, implied_t_s_in(ts, q, u.value(r, c), r, c));
        }
    }

    scene.u_truth.grid = std::move(u);
    scene.u_truth.setting = ComputationSetting::Surface;
    scene.u_truth.film_corrected = false;
    scene.indoor_reference = spec.indoor_reference();
    return scene;
}

SceneBundle stratified_air_scene(const SyntheticWallSpec& spec,
                                 const PhysicalConstants& constants) {
    spec.validate();
    constants.validate();
    const auto* strat = std::get_if<StratifiedProfile>(&spec.indoor_air_profile);
    if (!strat)
        throw ValidationError("stratified_air_scene: profile must be vertically stratified");
    if (strat->t_bottom == strat->t_top)
        return generate_scene(spec);  // zero stratification
    if (strat->t_bottom > strat->t_top)
        throw ValidationError("stratified_air_scene: requires t_bottom < t_top");

    SceneBundle scene;
    scene.indoor_air = air_field(spec);
    Grid u = conductance_field(spec);
    scene.t_s_out = Grid(spec.mesh.rows, spec.mesh.cols);
    scene.t_s_in = Grid(spec.mesh.rows, spec.mesh.cols);

    // t_s_out depends only on (row air temperature, local conductance), so
    // solve once per row and conductance class.
    const bool has_studs = !spec.stud_columns.empty();
    for (std::size_t r = 0; r < spec.mesh.rows; ++r) {
        const double air = scene.indoor_air.value(r, 0);
        if (!(air > spec.ambient.t_out))
            infeasible("stratified_air_scene: indoor air " + format_double(air) +
                       " K at row " + std::to_string(r) + " does not exceed t_out (" +
                       format_double(spec.ambient.t_out) + " K)");

        double ts_for[2] = {0.0, 0.0};  // [0] insulation, [1] stud
        for (int cls = 0; cls < (has_studs && spec.u_stud != spec.u_insulation ? 2 : 1); ++cls) {
            const double u_here = cls == 0 ? spec.u_insulation : spec.u_stud;
            const double target = u_here * (air - spec.ambient.t_out);

            // chain_flux is strictly increasing in t_s_out on (t_out, air):
            // bisect the flux balance.
            double lo = spec.ambient.t_out;
            double hi = air;
            if (!(chain_flux(hi, spec, constants) > target))
                infeasible("stratified_air_scene: flux ceiling at row " + std::to_string(r) +
                           " cannot reach the target " + format_double(target) +
                           " W/m^2 for u = " + format_double(u_here) +
                           "; lower the conductance or widen the air-to-outdoor gap");
            for (int it = 0; it < 200 && (hi - lo) > 1e-13 * std::max(1.0, hi); ++it) {
                const double mid = 0.5 * (lo + hi);
                (chain_flux(mid, spec, constants) < target ? lo : hi) = mid;
            }
            const double ts = 0.5 * (lo + hi);
            if (!(ts > spec.ambient.t_out && ts < air))
                infeasible("stratified_air_scene: solved t_s_out at row " + std::to_string(r) +
                           " collapsed onto a bound; spec is numerically infeasible");
            ts_for[cls] = ts;
        }
        if (!(has_studs && spec.u_stud != spec.u_insulation)) ts_for[1] = ts_for[0];

        for (std::size_t c = 0; c < spec.mesh.cols; ++c) {
            const double u_here = u.value(r, c);
            const double ts = u_here == spec.u_insulation ? ts_for[0] : ts_for[1];
            // Re-evaluate the chain at the solved temperature so the
            // surface-referenced recovery is exact, independent of solver
            // tolerance.
            const double q = chain_flux(ts, spec, constants);
            scene.t_s_out.set(r, c, ts);
            scene.t_s_in.set(r, c, implied_t_s_in(ts, q, u_here, r, c));
        }
    }

    scene.u_truth.grid = std::move(u);
    scene.u_truth.setting = ComputationSetting::Surface;
    scene.u_truth.film_corrected = false;
    scene.indoor_reference = spec.indoor_reference();
    return scene;
}

}  // namespace irumap
