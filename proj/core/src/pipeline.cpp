#include "irumap/pipeline.hpp"

#include <cmath>
#include <variant>

#include "irumap/air_table.hpp"
#include "irumap/errors.hpp"
#include "irumap/io_util.hpp"

namespace irumap {

const char* setting_name(ComputationSetting setting) {
    switch (setting) {
        case ComputationSetting::SinglePoint: return "single";
        case ComputationSetting::Matrix: return "matrix";
        case ComputationSetting::Surface: return "surface";
    }
    return "?";
}

namespace {

void check_pairing(ComputationSetting setting, const IndoorTemperatureInput& indoor) {
    const bool ok =
        (setting == ComputationSetting::SinglePoint &&
         std::holds_alternative<SinglePoint>(indoor)) ||
        (setting == ComputationSetting::Matrix && std::holds_alternative<SensorMatrix>(indoor)) ||
        (setting == ComputationSetting::Surface &&
         std::holds_alternative<TemperatureRaster>(indoor));
    if (!ok) {
        const char* have = std::holds_alternative<SinglePoint>(indoor)  ? "single-point"
                           : std::holds_alternative<SensorMatrix>(indoor) ? "sensor-matrix"
                                                                          : "surface-raster";
        throw ConfigError(std::string("compute_umap: setting '") + setting_name(setting) +
                          "' is incompatible with a " + have + " indoor input");
    }
}

}  // namespace

UValueMap compute_umap(const TemperatureRaster& t_s_out, const IndoorTemperatureInput& indoor,
                       const AmbientConditions& ambient, const WallGeometry& geometry,
                       const MeshSpec& mesh, ComputationSetting setting, bool apply_films,
                       const PhysicalConstants& constants, MatrixExpansion expansion) {
    ambient.validate();
    geometry.validate();
    mesh.validate();
    constants.validate();
    check_pairing(setting, indoor);
    const bool surface = setting == ComputationSetting::Surface;
    if (apply_films && !surface)
        throw ConfigError("compute_umap: film correction applies only to the surface setting "
                          "(the air-referenced formula already spans air to air)");
    validate_temperature_raster(t_s_out, "compute_umap: t_s_out");

    const Grid ts = resample_to_mesh(t_s_out, mesh);
    const Grid t_ref = indoor_field(indoor, mesh, expansion);
    const AirPropertyTable& table = AirPropertyTable::builtin();

    UValueMap out;
    out.setting = setting;
    out.film_corrected = apply_films;
    out.grid = Grid(mesh.rows, mesh.cols);

    for (std::size_t r = 0; r < mesh.rows; ++r) {
        for (std::size_t c = 0; c < mesh.cols; ++c) {
            if (ts.is_masked(r, c) || t_ref.is_masked(r, c)) {
                out.grid.mask_cell(r, c);
                ++out.masked_input;
                continue;
            }
            const double t_s = ts.value(r, c);
            if (!table.covers(film_temperature(ambient.t_out, t_s))) {
                out.grid.mask_cell(r, c);
                ++out.masked_film_range;
                continue;
            }
            const FilmState fs = film_state(t_s, ambient.t_out, geometry, constants);
            const FluxComponents q =
                surface_fluxes(t_s, ambient.t_out, ambient.emissivity, fs.h_ext, constants);

            const double den =
                surface ? (t_ref.value(r, c) - t_s) : (t_ref.value(r, c) - ambient.t_out);
            if (den == 0.0) {
                out.grid.mask_cell(r, c);
                ++out.masked_degenerate;
                continue;
            }
            double u = q.q_total / den;
            if (apply_films) {
                if (!(u > 0.0)) {  // series correction needs a positive conductance
                    out.grid.mask_cell(r, c);
                    ++out.masked_degenerate;
                    continue;
                }
                u = total_u_with_films(u, constants);
            }
            if (!std::isfinite(u)) {
                out.grid.mask_cell(r, c);
                ++out.masked_degenerate;
                continue;
            }
            out.grid.set(r, c, u);
        }
    }

    if (out.grid.unmasked_count() == 0)
        throw DegenerateError("compute_umap: empty map, every pixel masked (input=" +
                              std::to_string(out.masked_input) + ", film_range=" +
                              std::to_string(out.masked_film_range) + ", degenerate=" +
                              std::to_string(out.masked_degenerate) + ")");
    return out;
}

UValueMap average_umaps(const std::vector<UValueMap>& maps) {
    if (maps.empty())
        throw ValidationError("average_umaps: need at least one map");
    const UValueMap& first = maps.front();
    std::vector<Grid> grids;
    grids.reserve(maps.size());
    for (const UValueMap& m : maps) {
        if (m.setting != first.setting)
            throw ValidationError("average_umaps: mixed settings ('" +
                                  std::string(setting_name(m.setting)) + "' vs '" +
                                  setting_name(first.setting) + "')");
        if (m.film_corrected != first.film_corrected)
            throw ValidationError("average_umaps: mixed film-correction flags");
        grids.push_back(m.grid);
    }

    UValueMap out;
    out.grid = average_rasters(grids);  // enforces shape agreement
    out.setting = first.setting;
    out.film_corrected = first.film_corrected;
    return out;
}

Grid difference_map(const UValueMap& a, const UValueMap& b) {
    if (a.grid.rows() != b.grid.rows() || a.grid.cols() != b.grid.cols())
        throw ValidationError("difference_map: shape mismatch (" +
                              std::to_string(a.grid.rows()) + "x" +
                              std::to_string(a.grid.cols()) + " vs " +
                              std::to_string(b.grid.rows()) + "x" +
                              std::to_string(b.grid.cols()) + ")");
    Grid out(a.grid.rows(), a.grid.cols());
    for (std::size_t r = 0; r < out.rows(); ++r)
        for (std::size_t c = 0; c < out.cols(); ++c) {
            if (a.grid.is_masked(r, c) || b.grid.is_masked(r, c))
                out.mask_cell(r, c);
            else
                out.set(r, c, a.grid.value(r, c) - b.grid.value(r, c));
        }
    return out;
}

MapStats map_stats(const UValueMap& map) {
    MapStats st;
    bool any = false;
    for (std::size_t r = 0; r < map.grid.rows(); ++r)
        for (std::size_t c = 0; c < map.grid.cols(); ++c) {
            if (map.grid.is_masked(r, c)) continue;
            const double v = map.grid.value(r, c);
            if (!any) {
                st.min = st.max = v;
                any = true;
            } else {
                if (v < st.min) st.min = v;
                if (v > st.max) st.max = v;
            }
            ++st.count;
        }
    if (!any)
        throw ValidationError("map_stats: map has no unmasked pixels");
    // Mean of the min-shifted values: exact on constant maps (every term is
    // zero) and better conditioned when values cluster away from zero.
    double shifted = 0.0;
    for (std::size_t r = 0; r < map.grid.rows(); ++r)
        for (std::size_t c = 0; c < map.grid.cols(); ++c)
            if (!map.grid.is_masked(r, c)) shifted += map.grid.value(r, c) - st.min;
    st.mean = st.min + shifted / static_cast<double>(st.count);
    return st;
}

double hfm_deviation(double map_mean, double hfm_value) {
    if (!std::isfinite(map_mean))
        throw ValidationError("hfm_deviation: map_mean must be finite");
    if (!std::isfinite(hfm_value) || hfm_value <= 0.0)
        throw ValidationError("hfm_deviation: hfm_value must be finite and > 0");
    return std::abs(map_mean - hfm_value) / hfm_value;
}

QualityReport validate_conditions(const AmbientConditions& ambient, double t_s_in_mean,
                                  double t_s_out_mean) {
    ambient.validate();
    if (!std::isfinite(t_s_in_mean) || t_s_in_mean <= 0.0 || !std::isfinite(t_s_out_mean) ||
        t_s_out_mean <= 0.0)
        throw ValidationError("validate_conditions: surface means must be finite and > 0 K");

    QualityReport report;
    report.delta_t_across_wall = std::abs(t_s_in_mean - t_s_out_mean);
    report.delta_t_ok = report.delta_t_across_wall >= 15.0;
    report.wind_ok = ambient.wind_speed < 1.0;

    report.messages.push_back(
        "temperature difference across the wall " + format_double(report.delta_t_across_wall) +
        (report.delta_t_ok ? " K meets the 15 K minimum" : " K is below the 15 K minimum"));
    report.messages.push_back(
        "wind speed " + format_double(ambient.wind_speed) +
        (report.wind_ok ? " m/s is below the 1.0 m/s limit"
                        : " m/s is not below the 1.0 m/s limit (forced convection regime)"));
    return report;
}

}  // namespace irumap
