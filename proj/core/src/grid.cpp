#include "irumap/grid.hpp"

#include <bit>
#include <limits>
#include <string>

#include "irumap/errors.hpp"

namespace irumap {

Grid::Grid(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols) {
    if (rows == 0 || cols == 0)
        throw ValidationError("grid: dimensions must be at least 1x1, got " +
                              std::to_string(rows) + "x" + std::to_string(cols));
    values_.assign(rows * cols, fill);
    mask_.assign(rows * cols, 0);
}

void Grid::set(std::size_t r, std::size_t c, double v) {
    const std::size_t i = index(r, c);
    values_[i] = v;
    mask_[i] = 0;
}

void Grid::mask_cell(std::size_t r, std::size_t c) {
    const std::size_t i = index(r, c);
    values_[i] = std::numeric_limits<double>::quiet_NaN();
    mask_[i] = 1;
}

std::size_t Grid::unmasked_count() const {
    std::size_t n = 0;
    for (std::uint8_t m : mask_)
        if (m == 0) ++n;
    return n;
}

double Grid::unmasked_mean() const {
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (mask_[i] == 0) {
            sum += values_[i];
            ++n;
        }
    }
    if (n == 0)
        throw ValidationError("grid: mean undefined, every cell is masked");
    return sum / static_cast<double>(n);
}

bool Grid::operator==(const Grid& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) return false;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (mask_[i] != other.mask_[i]) return false;
        if (mask_[i] != 0) continue;  // masked cells carry no value
        if (std::bit_cast<std::uint64_t>(values_[i]) !=
            std::bit_cast<std::uint64_t>(other.values_[i]))
            return false;
    }
    return true;
}

}  // namespace irumap
