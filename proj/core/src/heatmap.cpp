#include "irumap/heatmap.hpp"

#include <algorithm>
#include <cmath>

#include "irumap/errors.hpp"
#include "irumap/io_util.hpp"

namespace irumap {

void HeatmapStyle::validate() const {
    if (palette.size() < 2)
        throw ValidationError("heatmap style: palette needs at least 2 colors");
    if (range_min.has_value() != range_max.has_value())
        throw ValidationError("heatmap style: fixed range needs both min and max");
    if (range_min && !(*range_min < *range_max))
        throw ValidationError("heatmap style: fixed range must satisfy min < max");
    if (scale == 0)
        throw ValidationError("heatmap style: scale must be >= 1");
}

HeatmapStyle HeatmapStyle::sequential() {
    HeatmapStyle s;
    s.palette = {{13, 8, 135}, {126, 3, 168}, {204, 71, 120}, {248, 149, 64}, {240, 249, 33}};
    return s;
}

HeatmapStyle HeatmapStyle::diverging() {
    HeatmapStyle s;
    s.palette = {{33, 102, 172}, {247, 247, 247}, {178, 24, 43}};
    return s;
}

namespace {

Rgb ramp_color(const std::vector<Rgb>& palette, double t) {
    t = std::clamp(t, 0.0, 1.0);
    const std::size_t segments = palette.size() - 1;
    const double pos = t * static_cast<double>(segments);
    std::size_t i = static_cast<std::size_t>(pos);
    if (i >= segments) i = segments - 1;  // t == 1 lands exactly on the last stop
    const double f = pos - static_cast<double>(i);
    Rgb out{};
    for (int ch = 0; ch < 3; ++ch) {
        const double a = static_cast<double>(palette[i][ch]);
        const double b = static_cast<double>(palette[i + 1][ch]);
        out[ch] = static_cast<std::uint8_t>(std::llround(a + f * (b - a)));
    }
    return out;
}

}  // namespace

std::string render_ppm(const Grid& grid, const HeatmapStyle& style) {
    style.validate();
    if (grid.empty())
        throw ValidationError("render_ppm: grid is empty");
    if (grid.unmasked_count() == 0)
        throw ValidationError("render_ppm: grid has no unmasked cells");

    double lo, hi;
    if (style.range_min) {
        lo = *style.range_min;
        hi = *style.range_max;
    } else {
        bool first = true;
        lo = hi = 0.0;
        for (std::size_t r = 0; r < grid.rows(); ++r)
            for (std::size_t c = 0; c < grid.cols(); ++c) {
                if (grid.is_masked(r, c)) continue;
                const double v = grid.value(r, c);
                if (first) {
                    lo = hi = v;
                    first = false;
                } else {
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
            }
    }
    const double span = hi - lo;

    const std::size_t width = grid.cols() * style.scale;
    const std::size_t height = grid.rows() * style.scale;
    std::string out = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    out.reserve(out.size() + width * height * 3);

    for (std::size_t r = 0; r < grid.rows(); ++r) {
        std::string row_bytes;
        row_bytes.reserve(width * 3);
        for (std::size_t c = 0; c < grid.cols(); ++c) {
            Rgb px;
            if (grid.is_masked(r, c)) {
                px = style.masked;
            } else {
                const double v = grid.value(r, c);
                const double t = span == 0.0 ? 0.5 : (v - lo) / span;
                px = ramp_color(style.palette, t);
            }
            for (std::size_t s = 0; s < style.scale; ++s)
                row_bytes.append(reinterpret_cast<const char*>(px.data()), 3);
        }
        for (std::size_t s = 0; s < style.scale; ++s)
            out += row_bytes;
    }
    return out;
}

void emit_heatmap(const Grid& grid, const HeatmapStyle& style,
                  const std::filesystem::path& path) {
    atomic_write_file(path, render_ppm(grid, style));
}

}  // namespace irumap
