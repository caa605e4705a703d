#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "irumap/grid.hpp"

namespace irumap {

using Rgb = std::array<std::uint8_t, 3>;

// Rendering style for grid images: an ordered color ramp, an optional fixed
// value range (data min/max otherwise), a masked-cell color and an integer
// upscale factor.
struct HeatmapStyle {
    std::vector<Rgb> palette;
    std::optional<double> range_min;
    std::optional<double> range_max;
    Rgb masked{30, 30, 30};
    std::size_t scale = 1;
    void validate() const;

    static HeatmapStyle sequential();  // U-value maps
    static HeatmapStyle diverging();   // difference maps; zero maps to the mid color
                                       // under a symmetric range
};

// Binary PPM (P6) bytes; one pixel per cell times the scale factor, grid row
// 0 rendered as the top image row. Deterministic for identical inputs.
std::string render_ppm(const Grid& grid, const HeatmapStyle& style);

// Atomic write of render_ppm output. Requires at least one unmasked cell.
void emit_heatmap(const Grid& grid, const HeatmapStyle& style,
                  const std::filesystem::path& path);

}  // namespace irumap
