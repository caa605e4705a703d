#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace irumap {

// Dense row-major scalar field with a per-cell validity mask. The container
// is unit-agnostic: temperature rasters hold kelvin, U-value grids hold
// W/(m^2 K). Masked cells store NaN so accidental reads are loud.
class Grid {
public:
    Grid() = default;
    Grid(std::size_t rows, std::size_t cols, double fill = 0.0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t cell_count() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    double value(std::size_t r, std::size_t c) const { return values_[index(r, c)]; }
    bool is_masked(std::size_t r, std::size_t c) const { return mask_[index(r, c)] != 0; }

    void set(std::size_t r, std::size_t c, double v);
    void mask_cell(std::size_t r, std::size_t c);

    std::size_t unmasked_count() const;
    double unmasked_mean() const;  // ValidationError when fully masked

    // Equal shape, identical mask pattern, bit-identical unmasked values.
    bool operator==(const Grid& other) const;

private:
    std::size_t index(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return r * cols_ + c;
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
    std::vector<std::uint8_t> mask_;
};

// Surface or air temperatures in kelvin; unmasked values finite and > 0 K
// (enforced by validate_temperature_raster, not by the container).
using TemperatureRaster = Grid;

}  // namespace irumap
