#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "irumap/grid.hpp"

namespace irumap {

// Target map resolution; defaults to the 30-row x 40-column survey mesh.
struct MeshSpec {
    std::size_t rows = 30;
    std::size_t cols = 40;
    void validate() const;
};

// Grid of indoor air temperatures from a sparse sensor array (4x4 typical).
struct SensorMatrix {
    std::size_t rows = 4;
    std::size_t cols = 4;
    std::vector<double> temperatures;  // row-major [K], rows*cols entries
    void validate() const;
    double at(std::size_t r, std::size_t c) const { return temperatures[r * cols + c]; }
};

struct SinglePoint {
    double t = 0.0;  // [K]
};

// The three indoor-temperature settings: one sensor, a sensor matrix, or a
// full indoor surface raster.
using IndoorTemperatureInput = std::variant<SinglePoint, SensorMatrix, TemperatureRaster>;

// How a SensorMatrix expands to the mesh. Block (piecewise-constant sensor
// blocks) is the default; bilinear sits behind a config switch for
// sensitivity studies.
enum class MatrixExpansion { Block, Bilinear };

void validate_temperature_raster(const TemperatureRaster& raster, const std::string& label);

// Area-weighted mean downsampling; identity when shapes already match.
// Masked source cells are excluded; a mesh cell whose coverage is entirely
// masked comes out masked. No upsampling.
TemperatureRaster resample_to_mesh(const TemperatureRaster& raster, const MeshSpec& mesh);

// Per-pixel indoor reference field for a setting's input.
TemperatureRaster indoor_field(const IndoorTemperatureInput& input, const MeshSpec& mesh,
                               MatrixExpansion expansion = MatrixExpansion::Block);

// Cellwise mean over cells unmasked in every input; any masked cell masks
// the output cell.
Grid average_rasters(const std::vector<Grid>& rasters);

}  // namespace irumap
