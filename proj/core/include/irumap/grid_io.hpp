#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "irumap/grid.hpp"

namespace irumap {

// Grid text format: header line `rows cols unit`, then rows lines of cols
// whitespace-separated values row-major; the token `NA` marks a masked cell.
// K and C tag temperature rasters (C converts to kelvin by +273.15 on load),
// U tags U-value grids.
enum class GridUnit { Kelvin, Celsius, UValue };

const char* grid_unit_token(GridUnit unit);               // "K" | "C" | "U"
std::optional<GridUnit> parse_grid_unit(std::string_view token);

struct ParsedGrid {
    Grid grid;
    GridUnit unit = GridUnit::Kelvin;
};

// Raw parse, no unit conversion. Errors name file, line and column.
ParsedGrid parse_grid_text(std::string_view text, const std::string& origin);

std::string format_grid_text(const Grid& grid, GridUnit unit);

// Temperature raster load: accepts K or C headers, converts C to kelvin,
// rejects non-physical values (<= 0 K after conversion). When `expected` is
// set the file's header unit must match it.
TemperatureRaster load_raster(const std::filesystem::path& path,
                              std::optional<GridUnit> expected = std::nullopt);

// U-value grid load: header must be U.
Grid load_u_grid(const std::filesystem::path& path);

// Atomic write (temp + rename). Temperature grids are always written in
// kelvin; pass the unit that names what the values are.
void write_grid_file(const std::filesystem::path& path, const Grid& grid, GridUnit unit);

}  // namespace irumap
