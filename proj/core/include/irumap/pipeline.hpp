#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "irumap/grid.hpp"
#include "irumap/physics.hpp"
#include "irumap/raster.hpp"

namespace irumap {

// The three indoor-temperature settings. Surface uses the surface-to-surface
// formula; SinglePoint and Matrix use the air-referenced one.
enum class ComputationSetting { SinglePoint, Matrix, Surface };

const char* setting_name(ComputationSetting setting);  // "single" | "matrix" | "surface"

struct UValueMap {
    Grid grid;  // W/(m^2 K)
    ComputationSetting setting = ComputationSetting::SinglePoint;
    bool film_corrected = false;
    // Masking diagnostics, surfaced in logs rather than thrown per pixel.
    std::size_t masked_input = 0;       // masked in an input raster
    std::size_t masked_film_range = 0;  // film temperature off the air table
    std::size_t masked_degenerate = 0;  // zero denominator or unusable u_wall
};

struct MapStats {
    double min = 0.0;
    double max = 0.0;
    double mean = 0.0;
    std::size_t count = 0;  // unmasked cells
};

struct QualityReport {
    double delta_t_across_wall = 0.0;  // [K]
    bool delta_t_ok = false;           // >= 15 K
    bool wind_ok = false;              // < 1.0 m/s, strict
    std::vector<std::string> messages;
};

// Per-pixel U-value map under one setting. The indoor input variant must
// match the setting; film correction is honored only for Surface (the
// air-referenced formula already spans air to air). Degenerate pixels are
// masked with counts; a fully masked result throws DegenerateError.
UValueMap compute_umap(const TemperatureRaster& t_s_out, const IndoorTemperatureInput& indoor,
                       const AmbientConditions& ambient, const WallGeometry& geometry,
                       const MeshSpec& mesh, ComputationSetting setting, bool apply_films,
                       const PhysicalConstants& constants = PhysicalConstants{},
                       MatrixExpansion expansion = MatrixExpansion::Block);

// Cellwise mean across repeated capture groups; shapes, settings and film
// flags must all match.
UValueMap average_umaps(const std::vector<UValueMap>& maps);

// a - b per pixel; mask is the union of input masks.
Grid difference_map(const UValueMap& a, const UValueMap& b);

// Exact min/max/mean over unmasked pixels.
MapStats map_stats(const UValueMap& map);

// |map_mean - hfm_value| / hfm_value.
double hfm_deviation(double map_mean, double hfm_value);

// Measurement-condition check: wall delta-T >= 15 K, wind < 1.0 m/s.
// Annotates only; never blocks computation.
QualityReport validate_conditions(const AmbientConditions& ambient, double t_s_in_mean,
                                  double t_s_out_mean);

}  // namespace irumap
